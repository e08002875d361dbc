#pragma once

// Lifshitz pressure and free energy per unit area between two identical plates,
// Matsubara (imaginary-frequency) and zero-temperature forms, plus closed-form limits.
//
// With y = 2 a q_l the k_perp integrals become
//   P = -(k_B T / 8 pi a^3) sum'_l g(xi_l),  g = int_{y_l}^inf y^2 sum_pol r^2 e^-y / (1 - r^2 e^-y) dy
//   F =  (k_B T / 8 pi a^2) sum'_l phi(xi_l), phi = int_{y_l}^inf y sum_pol ln(1 - r^2 e^-y) dy
// where y_l = 2 a xi_l / (hbar c).

#include <utility>
#include <vector>

#include "casimir/material.hpp"
#include "casimir/matsubara.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/units.hpp"

namespace casimir {

struct NumericSettings {
    double truncation_tol = 1e-9;
    int consecutive_small_terms = 3;
    long max_terms = 100000;
    double quadrature_tol = 1e-10;  // y integral, relative
    double impedance_tol = 1e-10;   // nonlocal k3 integrals, relative
    double frequency_tol = 1e-8;    // continuous-frequency integrals, relative
    long entropy_term_budget = 4096;
    Execution execution = Execution::parallel;
    bool keep_breakdown = false;

    SummationSettings summation() const;
    quad::Options y_options() const;
    quad::Options impedance_options() const;
};

struct PressureResult {
    double pressure = 0.0;          // eV/um^3, negative = attraction
    long terms_used = 0;            // Matsubara terms; 0 for the zero-temperature integral
    double quadrature_error = 0.0;  // eV/um^3
    double truncation_error = 0.0;  // eV/um^3
    std::vector<std::pair<long, double>> breakdown;  // (l, contribution) when requested
};

struct ThermalCorrection {
    double absolute;  // Delta_T P, eV/um^3
    double relative;  // Delta_T P / P(a, 0)
    PressureResult finite_temperature;
    PressureResult zero_temperature;
};

struct FreeEnergyResult {
    double free_energy = 0.0;  // eV/um^2
    long terms_used = 0;
    double quadrature_error = 0.0;
    double truncation_error = 0.0;
};

struct IdealMetalAsymptotics {
    double low_temperature;   // -(pi^2 hbar c / 240 a^4)[1 + (T/T_eff)^4 / 3]
    double high_temperature;  // -k_B T zeta(3) / (4 pi a^3)
};

struct KernelValue {
    double value;
    double error;
};

/// g(xi) at one frequency; xi = 0 uses the zero-frequency reflection limits.
KernelValue pressure_kernel(const ResponseModel& model, double separation, double xi, double temperature,
                            const NumericSettings& settings);
/// phi(xi) at one frequency.
KernelValue free_energy_kernel(const ResponseModel& model, double separation, double xi, double temperature,
                               const NumericSettings& settings);

PressureResult pressure_matsubara(const EvaluationPoint& point, const ResponseModel& model,
                                  const NumericSettings& settings = {});

/// Continuous-frequency limit of the Matsubara sum. The permittivity is evaluated at
/// response_temperature (gamma(T), sigma0(T)); 0 is the physical T = 0 material.
PressureResult pressure_zero_temperature(double separation, const ResponseModel& model,
                                         const NumericSettings& settings = {}, double response_temperature = 0.0);

/// P(a,T) - P(a,0), with P(a,0) evaluated for the material as characterised at T.
ThermalCorrection thermal_correction(const EvaluationPoint& point, const ResponseModel& model,
                                     const NumericSettings& settings = {});

FreeEnergyResult free_energy(const EvaluationPoint& point, const ResponseModel& model,
                             const NumericSettings& settings = {});

FreeEnergyResult free_energy_zero_temperature(double separation, const ResponseModel& model,
                                              const NumericSettings& settings = {},
                                              double response_temperature = 0.0);

IdealMetalAsymptotics ideal_metal_asymptotics(const EvaluationPoint& point);

/// -(k_B T / 8 pi a^3) Li3(((eps0 - 1)/(eps0 + 1))^2)
double high_T_dielectric(double separation, double temperature, double static_permittivity);

/// Li3(z) for z in [0, 1].
double polylog3(double z);

inline constexpr double zeta3 = 1.2020569031595942854;

/// pressure_matsubara divided by the ideal-metal high-temperature closed form.
double high_T_ratio(const ResponseModel& model, double separation, double temperature,
                    const NumericSettings& settings = {});

struct RealFrequencySettings {
    double rel_tol = 1e-6;
    /// Upper photon-energy cutoff in units of max(plasma/resonance energy, hbar c / a).
    double energy_cutoff_factor = 20.0;
    int panel_budget = 20000;
};

struct RealFrequencyPressure {
    double total;
    double propagating;  // omega > c k_perp
    double evanescent;   // omega <= c k_perp
    double error;
    double energy_cutoff;  // eV
};

/// Real-frequency (Lifshitz) form. Needs complex eps(omega) with losses (Drude with
/// gamma > 0, dielectric with damped oscillators); validation path, slower and looser
/// than the Matsubara form. The sectors separately grow like ln(cutoff); their sum does not.
RealFrequencyPressure pressure_real_frequency(const EvaluationPoint& point, const ResponseModel& model,
                                              const RealFrequencySettings& settings = {});

/// Integrates f(xi) over xi in (lower, upper] on a log scale below and at the
/// characteristic energy, returning the integral and its error estimate.
KernelValue integrate_frequency(const std::function<double(double)>& f, double upper, double log_floor,
                                const quad::Options& options);

}  // namespace casimir

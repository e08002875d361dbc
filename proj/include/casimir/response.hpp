#pragma once

// Dielectric permittivity and magnetic permeability models, evaluated on the
// imaginary frequency axis (hbar*xi in eV) and, where the model carries
// dissipation, on the real axis (hbar*omega in eV).

#include <complex>
#include <optional>
#include <vector>

namespace casimir {

/// gamma(T) = residual + amplitude * (T / reference_temperature)^exponent, all energies in eV.
struct RelaxationModel {
    double residual = 0.0;
    double amplitude = 0.0;
    double exponent = 5.0;
    double reference_temperature = 300.0;

    bool perfect_lattice() const { return residual == 0.0; }
    bool temperature_dependent() const { return amplitude != 0.0; }
};

double relaxation_at(const RelaxationModel& model, double temperature);

struct DrudeParams {
    double plasma_frequency;  // hbar omega_p, eV
    RelaxationModel relaxation;
};

struct PlasmaParams {
    double plasma_frequency;  // eV
};

/// One Lorentz term C w0^2 / (w0^2 - w^2 - i Gamma w). Gamma = 0 gives the
/// lossless oscillator; on the imaginary axis this is C / (1 + (xi/w0)^2).
struct Oscillator {
    double strength;
    double resonance;     // eV
    double damping = 0.0; // eV
};

struct OscillatorModel {
    std::vector<Oscillator> oscillators;

    double static_permittivity() const;
    double eps_imag(double xi) const;
    std::complex<double> eps_real_axis(double omega) const;
    bool dissipative() const;
};

/// sigma0(T) = prefactor * exp(-activation / T) in s^-1. activation = 0 freezes
/// sigma0 at the prefactor for every T, including T = 0.
struct ConductivityModel {
    double prefactor = 0.0;   // s^-1
    double activation = 0.0;  // K

    double sigma_at(double temperature) const;
    /// True when sigma0(T) > 0 mathematically, even if exp(-b/T) underflows.
    bool conducting_at(double temperature) const;
};

struct DielectricParams {
    OscillatorModel optical;
    ConductivityModel conductivity;
    bool include_conductivity = false;
    /// Optional Drude free-carrier term (doped semiconductors).
    std::optional<DrudeParams> free_carriers;
};

enum class WavevectorForm { transverse_only, full };

struct NonlocalDrudeParams {
    DrudeParams base;
    double v_transverse = 0.0;   // fraction of c
    double v_longitudinal = 0.0; // fraction of c
    WavevectorForm form = WavevectorForm::full;
    double fermi_velocity = 0.0; // fraction of c, reference for reporting multiples
};

struct PermeabilityModel {
    double static_mu = 1.0;

    /// mu(i xi_l): the static value at l = 0, exactly 1 otherwise.
    double at_matsubara(long l) const { return l == 0 ? static_mu : 1.0; }
};

struct NonlocalPermittivityPair {
    double transverse;
    double longitudinal;
};

double drude_eps_imag(const DrudeParams& params, double xi, double temperature);
double plasma_eps_imag(const PlasmaParams& params, double xi);
double dielectric_eps_imag(const DielectricParams& params, double xi, double temperature);

/// Wavevector argument is k_perp for the transverse-only form and |k| for the full form.
NonlocalPermittivityPair nonlocal_eps_imag(const NonlocalDrudeParams& params, double xi, double k_perp, double k3,
                                           double temperature);

/// |v k_perp hbar c / omega| maximised over the transverse and longitudinal velocities,
/// for a propagating wave (omega > hbar c k_perp).
double propagating_wave_deviation(const NonlocalDrudeParams& params, double omega, double k_perp);

std::complex<double> drude_eps_real_axis(const DrudeParams& params, double omega, double temperature);
std::complex<double> dielectric_eps_real_axis(const DielectricParams& params, double omega, double temperature);

}  // namespace casimir

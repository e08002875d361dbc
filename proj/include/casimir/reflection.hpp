#pragma once

// TM/TE reflection coefficients on the imaginary frequency axis: Fresnel form
// for local media, surface-impedance form for the nonlocal Drude-like media,
// and the analytic zero-frequency limits.

#include "casimir/material.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

struct WaveVectorPoint {
    double k_perp;  // um^-1
    double xi;      // eV

    /// q_l = sqrt(k_perp^2 + xi^2 / (hbar c)^2)
    double q() const;
};

enum class ReflectionMethod { fresnel, impedance, ideal_metal };

const char* to_string(ReflectionMethod method);

struct ReflectionPair {
    double tm;
    double te;
    ReflectionMethod method;
};

/// Imaginary-axis surface impedances (dimensionless, real).
struct ImpedancePair {
    double tm;
    double te;
};

/// k_l = sqrt(k_perp^2 + eps mu xi^2 / (hbar c)^2)
double inside_wave_number(double eps, double mu, const WaveVectorPoint& point);

ReflectionPair fresnel_pair(double eps, double mu, const WaveVectorPoint& point);

ImpedancePair local_impedances(double eps, double mu, const WaveVectorPoint& point);

/// k3 quadrature of the nonlocal impedances, folded to k3 >= 0.
ImpedancePair nonlocal_impedances(const NonlocalDrudeParams& params, double mu, const WaveVectorPoint& point,
                                  double temperature, const quad::Options& options = {1e-10, 0.0, 4000, true});

ReflectionPair impedance_pair(const ImpedancePair& z, const WaveVectorPoint& point);

ReflectionPair ideal_metal_pair();

/// l = 0 limits. mu is the model's static permeability.
ReflectionPair zero_frequency_pair(const ResponseModel& model, double k_perp, double temperature,
                                   const quad::Options& options = {1e-10, 0.0, 4000, true});

/// Reflection coefficients at one Matsubara energy (xi = 0 selects the l = 0
/// limits). Frequency-only quantities (eps, mu, gamma) are resolved once.
class FrequencyReflector {
public:
    FrequencyReflector(const ResponseModel& model, double xi, double temperature,
                       const quad::Options& impedance_options = {1e-10, 0.0, 4000, true});

    ReflectionPair at(double k_perp) const;

    double xi() const { return xi_; }
    double mu() const { return mu_; }
    /// Local eps(i xi); 1 for vacuum, NaN for ideal or nonlocal models.
    double eps() const { return eps_; }

private:
    enum class Path { vacuum, ideal, local, nonlocal, zero };

    const ResponseModel* model_;
    double xi_;
    double temperature_;
    quad::Options options_;
    Path path_;
    double eps_;
    double mu_;
};

}  // namespace casimir

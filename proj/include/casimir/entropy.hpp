#pragma once

// Casimir entropy S = -dF/dT per unit area and its T -> 0 limit.
//
// F(T) is split as F_thermal(T) + F_0[eps_T], where F_0[eps_T] is the
// continuous-frequency free energy of the material characterised at T and
//   F_thermal = (k_B T / 8 pi a^2)[sum'_{l<N} phi_l + G_N] - (1 / 16 pi^2 a^2) int_0^{xi_N} phi dxi
// with G_N the Gregory end correction. Only F_thermal carries the discreteness of
// the Matsubara sum, so N can stay bounded as T -> 0.

#include <vector>

#include "casimir/lifshitz.hpp"

namespace casimir {

enum class NernstClass { nernst_satisfied, negative_violation, positive_violation };

const char* to_string(NernstClass c);

struct EntropySample {
    double temperature;    // K
    double entropy;        // eV / (K um^2)
    double step;           // K, central-difference half width actually used
    bool noise_limited;    // difference below 10x the estimated round-off noise
};

struct EntropyCurve {
    std::vector<EntropySample> samples;
    double limit_estimate = 0.0;  // S(0+), quadratic extrapolation of the three lowest-T samples
    double tolerance = 0.0;       // classification threshold
    NernstClass classification = NernstClass::nernst_satisfied;
};

struct EntropySettings {
    /// Fixed half-step h in K; 0 selects max(0.5 K, T/100) capped at T/4 and half the grid spacing,
    /// doubled while the difference is noise-dominated.
    double step = 0.0;
    double tolerance_fraction = 1e-3;  // of |S(T_max)|
    NumericSettings numeric;
    Execution execution = Execution::parallel;  // over grid points
};

struct ThermalFreeEnergy {
    double value;  // eV/um^2
    double noise;  // round-off scale of value
    long terms;    // N
};

ThermalFreeEnergy thermal_free_energy(double separation, const ResponseModel& model, double temperature,
                                      double response_temperature, const NumericSettings& settings);

/// Entropy at one temperature with half-step h (> 0, < T).
EntropySample entropy_at(double separation, const ResponseModel& model, double temperature, double step,
                         double step_cap, bool adaptive, const NumericSettings& settings);

EntropyCurve entropy_curve(double separation, const ResponseModel& model, const std::vector<double>& temperatures,
                           const EntropySettings& settings = {});

/// Value at T = 0 of the quadratic through three (T, S) points.
double extrapolate_to_zero(const std::vector<EntropySample>& lowest);

}  // namespace casimir

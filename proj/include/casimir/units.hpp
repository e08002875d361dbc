#pragma once

// Internal unit system: energies (including hbar*omega and hbar*xi) in eV,
// lengths in micrometres, temperatures in kelvin, velocities as fractions of c.
// Pressures therefore come out in eV/um^3 and free energies in eV/um^2.

namespace casimir {

struct PhysicalConstants {
    static constexpr double hbar_c = 0.1973269804;          // eV um
    static constexpr double boltzmann = 8.617333262e-5;     // eV / K
    static constexpr double light_speed_ratio = 1.0;
    static constexpr double pressure_conversion = 0.1602177; // Pa per eV/um^3
    static constexpr double hbar = 6.582119569e-16;         // eV s, for conductivities in s^-1
};

inline constexpr double hbar_c = PhysicalConstants::hbar_c;
inline constexpr double k_boltzmann = PhysicalConstants::boltzmann;

struct EvaluationPoint {
    double separation;   // um
    double temperature;  // K
};

/// Throws DomainError unless a > 0 and T >= 0.
EvaluationPoint make_point(double separation, double temperature);

enum class Regime { low, intermediate, high };

struct ThermalRegime {
    double effective_temperature;  // K
    Regime regime;
};

/// k_B T_eff = hbar c / (2a).
double effective_temperature(double separation);

/// Advisory label only: low below T_eff/10, high above 10 T_eff.
ThermalRegime classify_regime(const EvaluationPoint& point);

const char* to_string(Regime regime);

double pressure_to_pascal(double eV_per_um3);
double pascal_to_pressure(double pascal);

/// Gaussian conductivity sigma [s^-1] to the energy hbar * 4 pi sigma [eV].
double conductivity_to_energy(double sigma_per_second);

/// Matsubara energy hbar xi_l = 2 pi k_B T l.
double matsubara_energy(double temperature, long l);

}  // namespace casimir

#include "casimir/units.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "casimir/errors.hpp"

namespace casimir {

EvaluationPoint make_point(double separation, double temperature) {
    if (!(separation > 0.0)) {
        throw DomainError("separation must be positive, got " + std::to_string(separation));
    }
    if (!(temperature >= 0.0)) {
        throw DomainError("temperature must be non-negative, got " + std::to_string(temperature));
    }
    return {separation, temperature};
}

double effective_temperature(double separation) {
    if (!(separation > 0.0)) {
        throw DomainError("effective_temperature: separation must be positive");
    }
    return hbar_c / (2.0 * separation * k_boltzmann);
}

ThermalRegime classify_regime(const EvaluationPoint& point) {
    const double t_eff = effective_temperature(point.separation);
    Regime regime = Regime::intermediate;
    if (point.temperature < 0.1 * t_eff) {
        regime = Regime::low;
    } else if (point.temperature > 10.0 * t_eff) {
        regime = Regime::high;
    }
    return {t_eff, regime};
}

const char* to_string(Regime regime) {
    switch (regime) {
        case Regime::low: return "low";
        case Regime::high: return "high";
        case Regime::intermediate: break;
    }
    return "intermediate";
}

double pressure_to_pascal(double eV_per_um3) { return eV_per_um3 * PhysicalConstants::pressure_conversion; }

double pascal_to_pressure(double pascal) { return pascal / PhysicalConstants::pressure_conversion; }

double conductivity_to_energy(double sigma_per_second) {
    return PhysicalConstants::hbar * 4.0 * std::numbers::pi * sigma_per_second;
}

double matsubara_energy(double temperature, long l) {
    return 2.0 * std::numbers::pi * k_boltzmann * temperature * static_cast<double>(l);
}

}  // namespace casimir

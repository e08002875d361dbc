#include "casimir/response.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "casimir/errors.hpp"
#include "casimir/units.hpp"

namespace casimir {

namespace {

void require_positive_frequency(double xi, const char* where) {
    if (!(xi > 0.0)) {
        throw DomainError(std::string(where) + ": frequency must be positive (zero frequency is handled by the "
                                               "reflection limits)");
    }
}

double drude_term(double plasma_frequency, double gamma, double xi) {
    return plasma_frequency * plasma_frequency / (xi * (xi + gamma));
}

}  // namespace

double relaxation_at(const RelaxationModel& model, double temperature) {
    if (!(temperature >= 0.0)) {
        throw DomainError("relaxation_at: temperature must be non-negative");
    }
    if (model.amplitude == 0.0 || temperature == 0.0) {
        return model.residual;
    }
    return model.residual +
           model.amplitude * std::pow(temperature / model.reference_temperature, model.exponent);
}

double OscillatorModel::static_permittivity() const {
    double eps = 1.0;
    for (const auto& osc : oscillators) {
        eps += osc.strength;
    }
    return eps;
}

double OscillatorModel::eps_imag(double xi) const {
    double eps = 1.0;
    for (const auto& osc : oscillators) {
        const double w2 = osc.resonance * osc.resonance;
        eps += osc.strength * w2 / (w2 + xi * xi + osc.damping * xi);
    }
    return eps;
}

std::complex<double> OscillatorModel::eps_real_axis(double omega) const {
    std::complex<double> eps = 1.0;
    for (const auto& osc : oscillators) {
        const double w2 = osc.resonance * osc.resonance;
        eps += osc.strength * w2 / std::complex<double>(w2 - omega * omega, -osc.damping * omega);
    }
    return eps;
}

bool OscillatorModel::dissipative() const {
    return std::all_of(oscillators.begin(), oscillators.end(), [](const Oscillator& o) { return o.damping > 0.0; });
}

double ConductivityModel::sigma_at(double temperature) const {
    if (prefactor == 0.0) {
        return 0.0;
    }
    if (activation == 0.0) {
        return prefactor;
    }
    if (temperature <= 0.0) {
        return 0.0;
    }
    return prefactor * std::exp(-activation / temperature);
}

bool ConductivityModel::conducting_at(double temperature) const {
    if (prefactor <= 0.0) {
        return false;
    }
    return activation == 0.0 || temperature > 0.0;
}

double drude_eps_imag(const DrudeParams& params, double xi, double temperature) {
    require_positive_frequency(xi, "drude_eps_imag");
    return 1.0 + drude_term(params.plasma_frequency, relaxation_at(params.relaxation, temperature), xi);
}

double plasma_eps_imag(const PlasmaParams& params, double xi) {
    require_positive_frequency(xi, "plasma_eps_imag");
    return 1.0 + params.plasma_frequency * params.plasma_frequency / (xi * xi);
}

double dielectric_eps_imag(const DielectricParams& params, double xi, double temperature) {
    require_positive_frequency(xi, "dielectric_eps_imag");
    double eps = params.optical.eps_imag(xi);
    if (params.include_conductivity) {
        eps += conductivity_to_energy(params.conductivity.sigma_at(temperature)) / xi;
    }
    if (params.free_carriers) {
        eps += drude_term(params.free_carriers->plasma_frequency,
                          relaxation_at(params.free_carriers->relaxation, temperature), xi);
    }
    return eps;
}

NonlocalPermittivityPair nonlocal_eps_imag(const NonlocalDrudeParams& params, double xi, double k_perp, double k3,
                                           double temperature) {
    require_positive_frequency(xi, "nonlocal_eps_imag");
    if (!(k_perp >= 0.0)) {
        throw DomainError("nonlocal_eps_imag: k_perp must be non-negative");
    }
    const double kappa = params.form == WavevectorForm::full ? std::hypot(k_perp, k3) : k_perp;
    const double drude =
        drude_term(params.base.plasma_frequency, relaxation_at(params.base.relaxation, temperature), xi);
    const double shift_tr = params.v_transverse * kappa * hbar_c / xi;
    const double shift_l = params.v_longitudinal * kappa * hbar_c / xi;
    return {1.0 + drude * (1.0 + shift_tr), 1.0 + drude / (1.0 + shift_l)};
}

double propagating_wave_deviation(const NonlocalDrudeParams& params, double omega, double k_perp) {
    if (!(k_perp >= 0.0) || !(omega > hbar_c * k_perp)) {
        throw DomainError("propagating_wave_deviation: requires omega > hbar c k_perp (propagating waves)");
    }
    const double v = std::max(params.v_transverse, params.v_longitudinal);
    return std::abs(v * k_perp * hbar_c / omega);
}

std::complex<double> drude_eps_real_axis(const DrudeParams& params, double omega, double temperature) {
    if (!(omega > 0.0)) {
        throw DomainError("drude_eps_real_axis: frequency must be positive");
    }
    const double gamma = relaxation_at(params.relaxation, temperature);
    const double wp2 = params.plasma_frequency * params.plasma_frequency;
    return 1.0 - wp2 / (omega * std::complex<double>(omega, gamma));
}

std::complex<double> dielectric_eps_real_axis(const DielectricParams& params, double omega, double temperature) {
    if (!(omega > 0.0)) {
        throw DomainError("dielectric_eps_real_axis: frequency must be positive");
    }
    std::complex<double> eps = params.optical.eps_real_axis(omega);
    if (params.include_conductivity) {
        eps += std::complex<double>(0.0, conductivity_to_energy(params.conductivity.sigma_at(temperature)) / omega);
    }
    if (params.free_carriers) {
        eps += drude_eps_real_axis(*params.free_carriers, omega, temperature) - 1.0;
    }
    return eps;
}

}  // namespace casimir

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"

namespace casimir {

namespace {

using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;

// sum_pol r^2 X / (1 - r^2 X), X = e^{-2 a q}, eps(omega) complex, mu = 1.
cplx occupation(cplx eps, cplx q, double omega, double a) {
    const double x2 = (omega / hbar_c) * (omega / hbar_c);
    const cplx k_l = std::sqrt(q * q + (1.0 - eps) * x2);
    const cplx r_tm = (eps * q - k_l) / (eps * q + k_l);
    const cplx r_te = (q - k_l) / (q + k_l);
    const cplx x = std::exp(-2.0 * a * q);
    const cplx tm = r_tm * r_tm * x;
    const cplx te = r_te * r_te * x;
    return tm / (1.0 - tm) + te / (1.0 - te);
}

double characteristic_energy(const ResponseModel& model) {
    double scale = 0.0;
    if (const auto* p = std::get_if<DrudeParams>(&model.response)) {
        scale = p->plasma_frequency;
    } else if (const auto* d = std::get_if<DielectricParams>(&model.response)) {
        for (const auto& osc : d->optical.oscillators) {
            scale = std::max(scale, osc.resonance);
        }
        if (d->free_carriers) {
            scale = std::max(scale, d->free_carriers->plasma_frequency);
        }
    }
    return scale;
}

}  // namespace

RealFrequencyPressure pressure_real_frequency(const EvaluationPoint& point, const ResponseModel& model,
                                              const RealFrequencySettings& settings) {
    const EvaluationPoint p = make_point(point.separation, point.temperature);
    if (!(p.temperature > 0.0)) {
        throw DomainError("pressure_real_frequency: temperature must be positive");
    }
    if (std::holds_alternative<VacuumModel>(model.response)) {
        return {0.0, 0.0, 0.0, 0.0, 0.0};
    }
    if (model.permeability.static_mu != 1.0) {
        throw DomainError("pressure_real_frequency: magnetic media are not supported on the real axis");
    }
    if (!has_dissipative_real_axis(model, p.temperature)) {
        throw DomainError(std::string("pressure_real_frequency: model '") + model.name +
                          "' has no lossy real-axis permittivity; use the Matsubara form");
    }
    const double a = p.separation;
    const double kt2 = 2.0 * k_boltzmann * p.temperature;
    const double e_max = settings.energy_cutoff_factor * std::max(characteristic_energy(model), hbar_c / a);
    const double e_min = 1e-9;
    const quad::Options inner{settings.rel_tol * 0.01, 0.0, settings.panel_budget, false};
    const quad::Options outer{settings.rel_tol, 0.0, settings.panel_budget, false};
    const double t_max = 30.0 / a;  // |e^{-2aq}| = e^{-2at} < e^-60 beyond

    // Full k_perp integral int k dk q f = int q^2 f dq over q: -i omega/hbar c -> 0 -> inf.
    // f is analytic for Re q > 0, -omega/hbar c < Im q < 0, so the path is moved onto
    // q = -i omega/hbar c + t, where e^{-2aq} has a fixed phase and decays monotonically.
    auto full = [&](double omega) {
        const cplx eps = real_axis_eps(model, omega, p.temperature);
        const cplx q0(0.0, -omega / hbar_c);
        auto f = [&](double t) {
            const cplx q = q0 + t;
            return (q * q * occupation(eps, q, omega, a)).imag();
        };
        return quad::integrate(f, 0.0, t_max, inner).value;
    };
    // Evanescent sector on its own path: q real, (1/8a^3) int y^2 Im f dy with y = 2aq.
    auto evanescent = [&](double omega) {
        const cplx eps = real_axis_eps(model, omega, p.temperature);
        auto f = [&](double y) { return y * y * occupation(eps, cplx(y / (2.0 * a), 0.0), omega, a).imag(); };
        return quad::integrate(f, 0.0, 60.0, inner).value / (8.0 * a * a * a);
    };
    // Both integrands oscillate in omega with period pi hbar c / a and slowly decaying
    // amplitude; a linear taper over whole periods ends the range without a phase-dependent
    // truncation error.
    const double period = pi * hbar_c / a;
    const double taper = std::ceil(0.2 * e_max / period) * period;
    const double e_taper = std::max(e_min * 10.0, e_max - taper);
    auto energy_integral = [&](auto& sector) {
        auto weight = [&](double omega) { return sector(omega) / std::tanh(omega / kt2); };
        auto log_integrand = [&](double u) {
            const double omega = std::exp(u);
            return omega * weight(omega);
        };
        auto taper_integrand = [&](double omega) { return (e_max - omega) / (e_max - e_taper) * weight(omega); };
        const auto body = quad::integrate(log_integrand, std::log(e_min), std::log(e_taper), outer);
        const auto tail = quad::integrate(taper_integrand, e_taper, e_max, outer);
        return quad::Result{body.value + tail.value, body.error + tail.error, 0, body.converged && tail.converged};
    };
    const auto total = energy_integral(full);
    const auto ev = energy_integral(evanescent);
    const double prefactor = -1.0 / (2.0 * pi * pi);
    RealFrequencyPressure result{};
    result.total = prefactor * total.value;
    result.evanescent = prefactor * ev.value;
    result.propagating = result.total - result.evanescent;
    result.error = std::abs(prefactor) * (total.error + ev.error);
    result.energy_cutoff = e_max;
    if (result.error > 1e3 * settings.rel_tol * std::abs(result.total) + 1e-300) {
        std::ostringstream msg;
        msg << "pressure_real_frequency: oscillatory quadrature did not converge (error " << result.error
            << " vs total " << result.total << "); increase damping or use the Matsubara form";
        throw NumericError(msg.str());
    }
    return result;
}

}  // namespace casimir

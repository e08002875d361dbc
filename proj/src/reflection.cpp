#include "casimir/reflection.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "casimir/errors.hpp"
#include "casimir/units.hpp"

namespace casimir {

namespace {

constexpr double pi = std::numbers::pi;

double magnetic_te(double mu) { return (mu - 1.0) / (mu + 1.0); }

// Plasma-like zero-frequency TE coefficient with squared effective plasma energy omega2 (eV^2).
double plasma_like_te(double mu, double k_perp, double omega2) {
    const double k_l = std::sqrt(k_perp * k_perp + mu * omega2 / (hbar_c * hbar_c));
    return (mu * k_perp - k_l) / (mu * k_perp + k_l);
}

double wavevector_argument(const NonlocalDrudeParams& p, double k_perp, double k3) {
    return p.form == WavevectorForm::full ? std::hypot(k_perp, k3) : k_perp;
}

double nonlocal_zero_te(const NonlocalDrudeParams& p, double mu, double k_perp, double temperature,
                        const quad::Options& options) {
    const double gamma = relaxation_at(p.base.relaxation, temperature);
    const double wp2 = p.base.plasma_frequency * p.base.plasma_frequency;
    if (p.v_transverse == 0.0) {
        return gamma > 0.0 ? magnetic_te(mu) : plasma_like_te(mu, k_perp, wp2);
    }
    if (gamma == 0.0) {
        return -1.0;
    }
    // xi^2 eps^Tr(i xi) -> Omega_T(kappa) = wp^2 v^Tr hbar c kappa / gamma as xi -> 0.
    auto omega_t = [&](double kappa) { return wp2 * p.v_transverse * hbar_c * kappa / gamma; };
    const double h2 = hbar_c * hbar_c;
    const double scale = std::sqrt(k_perp * k_perp + mu * omega_t(k_perp) / h2);
    auto integrand = [&](double k3) {
        const double kappa = wavevector_argument(p, k_perp, k3);
        return 1.0 / (mu * omega_t(kappa) + h2 * (k_perp * k_perp + k3 * k3));
    };
    const double j = 2.0 * hbar_c * mu / pi * quad::integrate_semi_infinite(integrand, 0.0, scale, options).value;
    const double x = hbar_c * k_perp * j;
    return (x - 1.0) / (x + 1.0);
}

double nonlocal_zero_tm(const NonlocalDrudeParams& p, double k_perp, double temperature,
                        const quad::Options& options) {
    const double gamma = relaxation_at(p.base.relaxation, temperature);
    if (p.v_longitudinal == 0.0 || gamma == 0.0) {
        return 1.0;
    }
    const double wp2 = p.base.plasma_frequency * p.base.plasma_frequency;
    auto integrand = [&](double k3) {
        const double kappa = wavevector_argument(p, k_perp, k3);
        const double eps_l0 = 1.0 + wp2 / (gamma * p.v_longitudinal * kappa * hbar_c);
        return k_perp * k_perp / ((k_perp * k_perp + k3 * k3) * eps_l0);
    };
    // For k_perp << k_c the integrand falls like 1/k3 up to k3 ~ k_c, where eps_l0 - 1 = k_c / kappa.
    const double k_c = wp2 / (gamma * p.v_longitudinal * hbar_c);
    double integral = quad::integrate(integrand, 0.0, k_perp, options).value;
    double tail_start = k_perp;
    if (p.form == WavevectorForm::full && k_c > k_perp) {
        auto log_integrand = [&](double u) {
            const double k3 = std::exp(u);
            return integrand(k3) * k3;
        };
        integral += quad::integrate(log_integrand, std::log(k_perp), std::log(k_c), options).value;
        tail_start = k_c;
    }
    integral += quad::integrate_semi_infinite(integrand, tail_start, tail_start, options).value;
    const double x = 2.0 * hbar_c / pi * integral;
    const double hk = hbar_c * k_perp;
    return (hk - x) / (hk + x);
}

}  // namespace

double WaveVectorPoint::q() const { return std::sqrt(k_perp * k_perp + (xi / hbar_c) * (xi / hbar_c)); }

const char* to_string(ReflectionMethod method) {
    switch (method) {
        case ReflectionMethod::fresnel: return "fresnel";
        case ReflectionMethod::impedance: return "impedance";
        case ReflectionMethod::ideal_metal: break;
    }
    return "ideal_metal";
}

double inside_wave_number(double eps, double mu, const WaveVectorPoint& point) {
    const double x = point.xi / hbar_c;
    return std::sqrt(point.k_perp * point.k_perp + eps * mu * x * x);
}

ReflectionPair fresnel_pair(double eps, double mu, const WaveVectorPoint& point) {
    // Numerators written as differences of squares so eps -> 1 and mu -> 1 lose no digits.
    const double q = point.q();
    const double k_l = inside_wave_number(eps, mu, point);
    const double k2 = point.k_perp * point.k_perp;
    const double x2 = (point.xi / hbar_c) * (point.xi / hbar_c);
    const double tm_den = eps * q + k_l;
    const double te_den = mu * q + k_l;
    const double tm = ((eps * eps - 1.0) * k2 + eps * (eps - mu) * x2) / (tm_den * tm_den);
    const double te = ((mu * mu - 1.0) * k2 + mu * (mu - eps) * x2) / (te_den * te_den);
    return {tm, te, ReflectionMethod::fresnel};
}

ImpedancePair local_impedances(double eps, double mu, const WaveVectorPoint& point) {
    if (!(point.xi > 0.0)) {
        throw DomainError("local_impedances: frequency must be positive");
    }
    const double k_l = inside_wave_number(eps, mu, point);
    return {hbar_c * k_l / (point.xi * eps), point.xi * mu / (hbar_c * k_l)};
}

ImpedancePair nonlocal_impedances(const NonlocalDrudeParams& params, double mu, const WaveVectorPoint& point,
                                  double temperature, const quad::Options& options) {
    const double xi = point.xi;
    if (!(xi > 0.0)) {
        throw DomainError("nonlocal_impedances: frequency must be positive");
    }
    const double k_perp = point.k_perp;
    const double k2 = k_perp * k_perp;
    const double h2 = hbar_c * hbar_c;
    const double mxi2 = mu * xi * xi;
    auto eps_pair = [&](double k3) { return nonlocal_eps_imag(params, xi, k_perp, k3, temperature); };

    const double local_scale = std::sqrt(k2 + eps_pair(0.0).transverse * mxi2 / h2);
    auto te_integrand = [&](double k3) { return 1.0 / (eps_pair(k3).transverse * mxi2 + h2 * (k2 + k3 * k3)); };
    const double te_integral = quad::integrate_semi_infinite(te_integrand, 0.0, local_scale, options).value;

    double tm_longitudinal = 0.0;
    if (k_perp > 0.0) {
        auto integrand = [&](double k3) { return k2 / ((k2 + k3 * k3) * eps_pair(k3).longitudinal * mxi2); };
        tm_longitudinal = quad::integrate_semi_infinite(integrand, 0.0, k_perp, options).value;
    }
    auto tm_transverse_integrand = [&](double k3) {
        const double kk = k2 + k3 * k3;
        return k3 * k3 / (kk * (eps_pair(k3).transverse * mxi2 + h2 * kk));
    };
    const double tm_transverse =
        quad::integrate_semi_infinite(tm_transverse_integrand, 0.0, local_scale, options).value;

    const double prefactor = 2.0 * xi * hbar_c * mu / pi;
    return {prefactor * (tm_longitudinal + tm_transverse), prefactor * te_integral};
}

ReflectionPair impedance_pair(const ImpedancePair& z, const WaveVectorPoint& point) {
    const double hq = hbar_c * point.q();
    const double xi = point.xi;
    return {(hq - xi * z.tm) / (hq + xi * z.tm), (hq * z.te - xi) / (hq * z.te + xi), ReflectionMethod::impedance};
}

ReflectionPair ideal_metal_pair() { return {1.0, -1.0, ReflectionMethod::ideal_metal}; }

ReflectionPair zero_frequency_pair(const ResponseModel& model, double k_perp, double temperature,
                                   const quad::Options& options) {
    if (!(k_perp > 0.0)) {
        throw DomainError("zero_frequency_pair: k_perp must be positive");
    }
    const double mu = model.permeability.static_mu;
    const auto fresnel = ReflectionMethod::fresnel;
    if (std::holds_alternative<VacuumModel>(model.response)) {
        return {0.0, magnetic_te(mu), fresnel};
    }
    if (std::holds_alternative<IdealMetalModel>(model.response)) {
        return ideal_metal_pair();
    }
    if (const auto* p = std::get_if<DrudeParams>(&model.response)) {
        const double gamma = relaxation_at(p->relaxation, temperature);
        const double wp2 = p->plasma_frequency * p->plasma_frequency;
        return {1.0, gamma > 0.0 ? magnetic_te(mu) : plasma_like_te(mu, k_perp, wp2), fresnel};
    }
    if (const auto* p = std::get_if<PlasmaParams>(&model.response)) {
        return {1.0, plasma_like_te(mu, k_perp, p->plasma_frequency * p->plasma_frequency), fresnel};
    }
    if (const auto* p = std::get_if<DielectricParams>(&model.response)) {
        double te = magnetic_te(mu);
        bool conducting = p->include_conductivity && p->conductivity.conducting_at(temperature);
        if (p->free_carriers) {
            conducting = true;
            if (relaxation_at(p->free_carriers->relaxation, temperature) == 0.0) {
                const double wp = p->free_carriers->plasma_frequency;
                te = plasma_like_te(mu, k_perp, wp * wp);
            }
        }
        if (conducting) {
            return {1.0, te, fresnel};
        }
        const double eps0 = p->optical.static_permittivity();
        return {(eps0 - 1.0) / (eps0 + 1.0), te, fresnel};
    }
    if (const auto* p = std::get_if<TabulatedModel>(&model.response)) {
        const auto& ext = p->transform->extrapolation();
        const double wp2 = ext.drude.plasma_frequency * ext.drude.plasma_frequency;
        switch (ext.kind) {
            case ExtrapolationKind::drude:
                if (relaxation_at(ext.drude.relaxation, temperature) > 0.0) {
                    return {1.0, magnetic_te(mu), fresnel};
                }
                return {1.0, plasma_like_te(mu, k_perp, wp2), fresnel};
            case ExtrapolationKind::plasma:
                return {1.0, plasma_like_te(mu, k_perp, wp2), fresnel};
            case ExtrapolationKind::dielectric_constant: {
                const double eps0 = p->transform->eps_imag(0.0, temperature);
                return {(eps0 - 1.0) / (eps0 + 1.0), magnetic_te(mu), fresnel};
            }
        }
    }
    if (const auto* p = std::get_if<NonlocalDrudeParams>(&model.response)) {
        return {nonlocal_zero_tm(*p, k_perp, temperature, options),
                nonlocal_zero_te(*p, mu, k_perp, temperature, options), ReflectionMethod::impedance};
    }
    throw DomainError(std::string("zero_frequency_pair: unsupported model '") + model_kind(model) + "'");
}

FrequencyReflector::FrequencyReflector(const ResponseModel& model, double xi, double temperature,
                                       const quad::Options& impedance_options)
    : model_(&model),
      xi_(xi),
      temperature_(temperature),
      options_(impedance_options),
      path_(Path::local),
      eps_(std::numeric_limits<double>::quiet_NaN()),
      mu_(1.0) {
    if (!(xi >= 0.0)) {
        throw DomainError("FrequencyReflector: frequency must be non-negative");
    }
    if (xi == 0.0) {
        path_ = Path::zero;
        mu_ = model.permeability.static_mu;
    } else if (std::holds_alternative<VacuumModel>(model.response)) {
        path_ = Path::vacuum;
        eps_ = 1.0;
    } else if (std::holds_alternative<IdealMetalModel>(model.response)) {
        path_ = Path::ideal;
    } else if (std::holds_alternative<NonlocalDrudeParams>(model.response)) {
        path_ = Path::nonlocal;
    } else {
        eps_ = local_eps_imag(model, xi, temperature);
    }
}

ReflectionPair FrequencyReflector::at(double k_perp) const {
    switch (path_) {
        case Path::zero:
            return zero_frequency_pair(*model_, k_perp, temperature_, options_);
        case Path::vacuum:
            return {0.0, 0.0, ReflectionMethod::fresnel};
        case Path::ideal:
            return ideal_metal_pair();
        case Path::nonlocal: {
            const WaveVectorPoint point{k_perp, xi_};
            const auto& params = std::get<NonlocalDrudeParams>(model_->response);
            return impedance_pair(nonlocal_impedances(params, mu_, point, temperature_, options_), point);
        }
        case Path::local:
            break;
    }
    return fresnel_pair(eps_, mu_, {k_perp, xi_});
}

}  // namespace casimir

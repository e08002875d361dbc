#include "casimir/lifshitz.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <cmath>
#include <numbers>

#include "casimir/errors.hpp"
#include "casimir/reflection.hpp"

namespace casimir {

namespace {

constexpr double pi = std::numbers::pi;
// The y integrand carries e^-y; beyond y_l + 60 it is below 1e-23 of its peak.
constexpr double y_span = 60.0;
// Continuous-frequency integrals run over eta = 2 a xi / (hbar c) in [0, 1e3], log-spaced above 1e-5.
constexpr double eta_floor = 1e-5;
constexpr double eta_ceiling = 1e3;

void require_separation(double a, const char* where) {
    if (!(a > 0.0)) {
        throw DomainError(std::string(where) + ": separation must be positive");
    }
}

// ln(1 - r^2 e^-y) and r^2 e^-y / (1 - r^2 e^-y) without cancellation near r^2 = 1, y -> 0.
struct ModeTerms {
    double log_denominator;
    double occupation;
};

ModeTerms mode_terms(double r, double y) {
    const double e = std::exp(-y);
    const double r2e = r * r * e;
    const double d = -std::expm1(-y) + (1.0 - r) * (1.0 + r) * e;
    const double log_d = r2e < 0.5 ? std::log1p(-r2e) : std::log(d);
    return {log_d, r2e / d};
}

template <class Weight>
KernelValue y_kernel(const ResponseModel& model, double a, double xi, double temperature,
                     const NumericSettings& settings, Weight weight) {
    const FrequencyReflector reflector(model, xi, temperature, settings.impedance_options());
    if (std::holds_alternative<VacuumModel>(model.response) && model.permeability.static_mu == 1.0) {
        return {0.0, 0.0};
    }
    const double y_l = 2.0 * a * xi / hbar_c;
    if (y_l > 600.0) {
        // Below e^-600 of any non-vanishing l = 0 term.
        return {0.0, 0.0};
    }
    auto integrand = [&](double y) {
        const double k2 = (y - y_l) * (y + y_l) / (4.0 * a * a);
        if (!(k2 > 0.0)) {
            return 0.0;
        }
        const ReflectionPair r = reflector.at(std::sqrt(k2));
        return weight(y, mode_terms(r.tm, y)) + weight(y, mode_terms(r.te, y));
    };
    const auto result = quad::integrate(integrand, y_l, y_l + y_span, settings.y_options());
    return {result.value, result.error};
}

double pressure_prefactor(const EvaluationPoint& p) {
    return -k_boltzmann * p.temperature / (8.0 * pi * p.separation * p.separation * p.separation);
}

double free_energy_prefactor(const EvaluationPoint& p) {
    return k_boltzmann * p.temperature / (8.0 * pi * p.separation * p.separation);
}

}  // namespace

SummationSettings NumericSettings::summation() const {
    SummationSettings s;
    s.truncation_tol = truncation_tol;
    s.consecutive_small_terms = consecutive_small_terms;
    s.max_terms = max_terms;
    return s;
}

// The absolute floor keeps denormal-range terms from defeating the relative test.
quad::Options NumericSettings::y_options() const { return {quadrature_tol, 1e-290, 4000, true}; }

quad::Options NumericSettings::impedance_options() const { return {impedance_tol, 0.0, 4000, true}; }

KernelValue pressure_kernel(const ResponseModel& model, double separation, double xi, double temperature,
                            const NumericSettings& settings) {
    require_separation(separation, "pressure_kernel");
    return y_kernel(model, separation, xi, temperature, settings,
                    [](double y, const ModeTerms& m) { return y * y * m.occupation; });
}

KernelValue free_energy_kernel(const ResponseModel& model, double separation, double xi, double temperature,
                               const NumericSettings& settings) {
    require_separation(separation, "free_energy_kernel");
    return y_kernel(model, separation, xi, temperature, settings,
                    [](double y, const ModeTerms& m) { return y * m.log_denominator; });
}

PressureResult pressure_matsubara(const EvaluationPoint& point, const ResponseModel& model,
                                  const NumericSettings& settings) {
    const EvaluationPoint p = make_point(point.separation, point.temperature);
    if (!(p.temperature > 0.0)) {
        throw DomainError("pressure_matsubara: temperature must be positive (use pressure_zero_temperature)");
    }
    const double prefactor = pressure_prefactor(p);
    const auto sum = matsubara_sum(
        [&](long l) {
            const auto g = pressure_kernel(model, p.separation, matsubara_energy(p.temperature, l), p.temperature,
                                           settings);
            return Term{prefactor * g.value, prefactor * g.error};
        },
        settings.summation(), settings.execution);
    PressureResult result;
    result.pressure = sum.sum;
    result.terms_used = sum.terms_used;
    result.quadrature_error = sum.error;
    result.truncation_error = sum.truncation_error;
    if (settings.keep_breakdown) {
        for (long l = 0; l < sum.terms_used; ++l) {
            const double t = sum.terms[static_cast<std::size_t>(l)];
            result.breakdown.emplace_back(l, l == 0 ? 0.5 * t : t);
        }
    }
    return result;
}

KernelValue integrate_frequency(const std::function<double(double)>& f, double upper, double log_floor,
                                const quad::Options& options) {
    if (!(upper > log_floor) || !(log_floor > 0.0)) {
        throw DomainError("integrate_frequency: need 0 < log_floor < upper");
    }
    const auto low = quad::integrate(f, 0.0, log_floor, options);
    auto log_integrand = [&](double u) {
        const double xi = std::exp(u);
        return xi * f(xi);
    };
    const auto high = quad::integrate(log_integrand, std::log(log_floor), std::log(upper), options);
    return {low.value + high.value, low.error + high.error};
}

PressureResult pressure_zero_temperature(double separation, const ResponseModel& model,
                                         const NumericSettings& settings, double response_temperature) {
    require_separation(separation, "pressure_zero_temperature");
    const double xi_c = hbar_c / (2.0 * separation);
    auto g = [&](double xi) { return pressure_kernel(model, separation, xi, response_temperature, settings).value; };
    const auto integral =
        integrate_frequency(g, eta_ceiling * xi_c, eta_floor * xi_c, {settings.frequency_tol, 0.0, 4000, true});
    // k_B T sum'_l -> (1/2pi) int d(hbar xi)
    const double prefactor = -1.0 / (16.0 * pi * pi * separation * separation * separation);
    PressureResult result;
    result.pressure = prefactor * integral.value;
    result.quadrature_error = std::abs(prefactor) * integral.error;
    return result;
}

ThermalCorrection thermal_correction(const EvaluationPoint& point, const ResponseModel& model,
                                     const NumericSettings& settings) {
    const EvaluationPoint p = make_point(point.separation, point.temperature);
    const PressureResult zero = pressure_zero_temperature(p.separation, model, settings, p.temperature);
    if (p.temperature == 0.0) {
        return {0.0, 0.0, zero, zero};
    }
    const PressureResult finite = pressure_matsubara(p, model, settings);
    const double delta = finite.pressure - zero.pressure;
    const double relative = zero.pressure != 0.0 ? delta / zero.pressure : 0.0;
    return {delta, relative, finite, zero};
}

FreeEnergyResult free_energy(const EvaluationPoint& point, const ResponseModel& model,
                             const NumericSettings& settings) {
    const EvaluationPoint p = make_point(point.separation, point.temperature);
    if (!(p.temperature > 0.0)) {
        throw DomainError("free_energy: temperature must be positive (use free_energy_zero_temperature)");
    }
    const double prefactor = free_energy_prefactor(p);
    const auto sum = matsubara_sum(
        [&](long l) {
            const auto phi = free_energy_kernel(model, p.separation, matsubara_energy(p.temperature, l),
                                                p.temperature, settings);
            return Term{prefactor * phi.value, prefactor * phi.error};
        },
        settings.summation(), settings.execution);
    return {sum.sum, sum.terms_used, sum.error, sum.truncation_error};
}

FreeEnergyResult free_energy_zero_temperature(double separation, const ResponseModel& model,
                                              const NumericSettings& settings, double response_temperature) {
    require_separation(separation, "free_energy_zero_temperature");
    const double xi_c = hbar_c / (2.0 * separation);
    auto phi = [&](double xi) {
        return free_energy_kernel(model, separation, xi, response_temperature, settings).value;
    };
    const auto integral =
        integrate_frequency(phi, eta_ceiling * xi_c, eta_floor * xi_c, {settings.frequency_tol, 0.0, 4000, true});
    const double prefactor = 1.0 / (16.0 * pi * pi * separation * separation);
    return {prefactor * integral.value, 0, std::abs(prefactor) * integral.error, 0.0};
}

IdealMetalAsymptotics ideal_metal_asymptotics(const EvaluationPoint& point) {
    const EvaluationPoint p = make_point(point.separation, point.temperature);
    const double a = p.separation;
    const double t_ratio = p.temperature / effective_temperature(a);
    const double a4 = a * a * a * a;
    const double low = -(pi * pi * hbar_c / (240.0 * a4)) * (1.0 + std::pow(t_ratio, 4) / 3.0);
    const double high = -k_boltzmann * p.temperature * zeta3 / (4.0 * pi * a * a * a);
    return {low, high};
}

double polylog3(double z) {
    if (!(z >= 0.0 && z <= 1.0)) {
        throw DomainError("polylog3: argument must lie in [0, 1]");
    }
    if (z == 0.0) {
        return 0.0;
    }
    if (z <= 0.5) {
        double power = z;
        double sum = 0.0;
        for (int n = 1; n < 200; ++n) {
            const double term = power / (static_cast<double>(n) * n * n);
            sum += term;
            if (term < 1e-18 * sum) {
                break;
            }
            power *= z;
        }
        return sum;
    }
    // Expansion about z = 1 in mu = ln z (|mu| <= ln 2):
    // Li3(e^mu) = zeta(3) + zeta(2) mu + (3/2 - ln(-mu)) mu^2/2 + sum_{k>=3} zeta(3-k) mu^k / k!
    const double mu = std::log(z);
    if (mu == 0.0) {
        return zeta3;
    }
    double sum = zeta3 + (pi * pi / 6.0) * mu + (1.5 - std::log(-mu)) * mu * mu / 2.0;
    double power = mu * mu / 2.0;  // mu^k / k!, currently k = 2
    for (int k = 3; k < 40; ++k) {
        power *= mu / k;
        double zeta_value = 0.0;
        if (k == 3) {
            zeta_value = -0.5;
        } else if (k % 2 == 0) {
            // zeta(3-k) = -B_{k-2} / (k-2)
            zeta_value = -boost::math::bernoulli_b2n<double>((k - 2) / 2) / (k - 2);
        } else {
            continue;
        }
        const double term = zeta_value * power;
        sum += term;
        if (std::abs(term) < 1e-18) {
            break;
        }
    }
    return sum;
}

double high_T_dielectric(double separation, double temperature, double static_permittivity) {
    require_separation(separation, "high_T_dielectric");
    if (!(temperature > 0.0) || !(static_permittivity > 1.0)) {
        throw DomainError("high_T_dielectric: needs T > 0 and eps0 > 1");
    }
    const double r0 = (static_permittivity - 1.0) / (static_permittivity + 1.0);
    return -k_boltzmann * temperature / (8.0 * pi * separation * separation * separation) * polylog3(r0 * r0);
}

double high_T_ratio(const ResponseModel& model, double separation, double temperature,
                    const NumericSettings& settings) {
    const auto p = make_point(separation, temperature);
    const double ideal = ideal_metal_asymptotics(p).high_temperature;
    return pressure_matsubara(p, model, settings).pressure / ideal;
}

}  // namespace casimir

#include "casimir/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

constexpr double pi = std::numbers::pi;
// Relative round-off scale assumed for sums of adaptively integrated terms.
constexpr double noise_fraction = 1e-13;

}  // namespace

const char* to_string(NernstClass c) {
    switch (c) {
        case NernstClass::negative_violation: return "negative_violation";
        case NernstClass::positive_violation: return "positive_violation";
        case NernstClass::nernst_satisfied: break;
    }
    return "nernst_satisfied";
}

ThermalFreeEnergy thermal_free_energy(double separation, const ResponseModel& model, double temperature,
                                      double response_temperature, const NumericSettings& settings) {
    const EvaluationPoint p = make_point(separation, temperature);
    if (!(p.temperature > 0.0)) {
        throw DomainError("thermal_free_energy: temperature must be positive");
    }
    const double a = p.separation;
    auto phi = [&](double xi) { return free_energy_kernel(model, a, xi, response_temperature, settings).value; };

    SummationSettings summation = settings.summation();
    summation.max_terms = std::max<long>(8, settings.entropy_term_budget);
    summation.throw_on_cap = false;
    const auto sum = matsubara_sum([&](long l) { return Term{phi(matsubara_energy(p.temperature, l)), 0.0}; },
                                   summation, settings.execution);
    const long n = sum.terms_used;

    std::array<double, 6> tail{};
    parallel_for(
        6, [&](long i) { tail[static_cast<std::size_t>(i)] = phi(matsubara_energy(p.temperature, n + i)); },
        settings.execution);
    const double gregory = gregory_tail(tail);

    const double xi_n = matsubara_energy(p.temperature, n);
    const auto integral = integrate_frequency(phi, xi_n, xi_n * 1e-10, {settings.frequency_tol * 1e-2, 0.0, 4000, true});

    const double discrete_prefactor = k_boltzmann * p.temperature / (8.0 * pi * a * a);
    const double continuous_prefactor = 1.0 / (16.0 * pi * pi * a * a);
    double magnitude = 0.0;
    for (double t : sum.terms) {
        magnitude += std::abs(t);
    }
    const double value = discrete_prefactor * (sum.sum + gregory) - continuous_prefactor * integral.value;
    const double noise =
        noise_fraction * (discrete_prefactor * magnitude + continuous_prefactor * std::abs(integral.value));
    return {value, noise, n};
}

EntropySample entropy_at(double separation, const ResponseModel& model, double temperature, double step,
                         double step_cap, bool adaptive, const NumericSettings& settings) {
    if (!(step > 0.0) || !(step < temperature)) {
        throw DomainError("entropy: step must satisfy 0 < h < T");
    }
    const bool t_dependent = response_depends_on_temperature(model);
    double h = step;
    for (;;) {
        const auto hi = thermal_free_energy(separation, model, temperature + h, temperature + h, settings);
        const auto lo = thermal_free_energy(separation, model, temperature - h, temperature - h, settings);
        double difference = hi.value - lo.value;
        double noise = hi.noise + lo.noise;
        if (t_dependent) {
            const auto f_hi = free_energy_zero_temperature(separation, model, settings, temperature + h);
            const auto f_lo = free_energy_zero_temperature(separation, model, settings, temperature - h);
            difference += f_hi.free_energy - f_lo.free_energy;
            noise += noise_fraction * (std::abs(f_hi.free_energy) + std::abs(f_lo.free_energy));
        }
        const bool noisy = std::abs(difference) < 10.0 * noise;
        if (noisy && adaptive && 2.0 * h <= step_cap) {
            h *= 2.0;
            continue;
        }
        if (noisy && !adaptive) {
            std::ostringstream msg;
            msg << "entropy at T = " << temperature << " K: free-energy difference " << difference
                << " is below 10x the differencing noise " << noise << "; use a larger step h";
            throw NumericError(msg.str());
        }
        return {temperature, -difference / (2.0 * h), h, noisy};
    }
}

double extrapolate_to_zero(const std::vector<EntropySample>& lowest) {
    if (lowest.empty()) {
        return 0.0;
    }
    if (lowest.size() == 1) {
        return lowest[0].entropy;
    }
    if (lowest.size() == 2) {
        const auto& s0 = lowest[0];
        const auto& s1 = lowest[1];
        return s0.entropy - s0.temperature * (s1.entropy - s0.entropy) / (s1.temperature - s0.temperature);
    }
    // Lagrange basis evaluated at T = 0.
    double value = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        double weight = 1.0;
        for (std::size_t j = 0; j < 3; ++j) {
            if (j != i) {
                weight *= lowest[j].temperature / (lowest[j].temperature - lowest[i].temperature);
            }
        }
        value += weight * lowest[i].entropy;
    }
    return value;
}

EntropyCurve entropy_curve(double separation, const ResponseModel& model, const std::vector<double>& temperatures,
                           const EntropySettings& settings) {
    if (temperatures.empty()) {
        throw DomainError("entropy_curve: empty temperature grid");
    }
    for (std::size_t i = 0; i < temperatures.size(); ++i) {
        if (!(temperatures[i] > 0.0) || (i > 0 && !(temperatures[i] > temperatures[i - 1]))) {
            throw DomainError("entropy_curve: temperatures must be positive and strictly ascending");
        }
    }
    make_point(separation, temperatures.front());
    const std::size_t n = temperatures.size();
    auto half_spacing = [&](std::size_t i) {
        double spacing = std::numeric_limits<double>::infinity();
        if (i > 0) {
            spacing = std::min(spacing, temperatures[i] - temperatures[i - 1]);
        }
        if (i + 1 < n) {
            spacing = std::min(spacing, temperatures[i + 1] - temperatures[i]);
        }
        return 0.5 * spacing;
    };
    if (settings.step > 0.0) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!(settings.step < half_spacing(i)) || !(settings.step < temperatures[i])) {
                throw DomainError("entropy_curve: step h must be below half the grid spacing and below T");
            }
        }
    }

    // Grid points run concurrently; each evaluates its own Matsubara sums serially.
    NumericSettings inner = settings.numeric;
    if (settings.execution == Execution::parallel) {
        inner.execution = Execution::serial;
    }
    EntropyCurve curve;
    curve.samples.resize(n);
    parallel_for(
        static_cast<long>(n),
        [&](long i) {
            const double t = temperatures[static_cast<std::size_t>(i)];
            const double cap = std::min(0.25 * t, half_spacing(static_cast<std::size_t>(i)));
            if (settings.step > 0.0) {
                curve.samples[static_cast<std::size_t>(i)] =
                    entropy_at(separation, model, t, settings.step, settings.step, false, inner);
            } else {
                const double h = std::min(std::max(0.5, t / 100.0), cap);
                curve.samples[static_cast<std::size_t>(i)] = entropy_at(separation, model, t, h, cap, true, inner);
            }
        },
        settings.execution);

    const std::vector<EntropySample> lowest(curve.samples.begin(),
                                            curve.samples.begin() + static_cast<long>(std::min<std::size_t>(3, n)));
    curve.limit_estimate = extrapolate_to_zero(lowest);
    curve.tolerance = settings.tolerance_fraction * std::abs(curve.samples.back().entropy);
    if (curve.limit_estimate < -curve.tolerance) {
        curve.classification = NernstClass::negative_violation;
    } else if (curve.limit_estimate > curve.tolerance) {
        curve.classification = NernstClass::positive_violation;
    } else {
        curve.classification = NernstClass::nernst_satisfied;
    }
    return curve;
}

}  // namespace casimir

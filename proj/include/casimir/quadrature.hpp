#pragma once

// Globally adaptive Gauss-Kronrod (G10/K21) quadrature, QUADPACK-style error
// estimate. Intervals are bisected worst-first until the summed error estimate
// is below max(abs_tol, rel_tol * |I|).

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir::quad {

struct Options {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    int max_intervals = 4000;
    bool throw_on_failure = true;
};

struct Result {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
    bool converged = true;
};

namespace detail {

inline constexpr std::array<double, 11> kronrod_nodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452, 0.930157491355708226001207180059508,
    0.865063366688984510732096688423493, 0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784, 0.294392862701460198131126603103866,
    0.148874338981631210884826001129720, 0.0};

inline constexpr std::array<double, 11> kronrod_weights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390, 0.054755896574351996031381300244580,
    0.075039674810919952767043140916190, 0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980064450, 0.134709217311473325928054001771707, 0.142775938577060080797094273138717,
    0.147739104901338491374841515972068, 0.149445554002916905664936468389821};

// Gauss weights belong to the odd-indexed Kronrod nodes.
inline constexpr std::array<double, 5> gauss_weights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697, 0.219086362515982043995534934228163,
    0.269266719309996355091226921569469, 0.295524224714752870173892994651338};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gauss_kronrod_21(F& f, double a, double b) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kronrod_weights[10];
    double gauss = 0.0;
    double abs_sum = std::abs(kronrod);
    std::array<double, 10> f_lo{};
    std::array<double, 10> f_hi{};
    for (std::size_t j = 0; j < 10; ++j) {
        const double dx = half * kronrod_nodes[j];
        f_lo[j] = f(center - dx);
        f_hi[j] = f(center + dx);
        const double pair = f_lo[j] + f_hi[j];
        kronrod += kronrod_weights[j] * pair;
        abs_sum += kronrod_weights[j] * (std::abs(f_lo[j]) + std::abs(f_hi[j]));
        if (j % 2 == 1) {
            gauss += gauss_weights[j / 2] * pair;
        }
    }
    const double mean = 0.5 * kronrod;
    double asc = kronrod_weights[10] * std::abs(fc - mean);
    for (std::size_t j = 0; j < 10; ++j) {
        asc += kronrod_weights[j] * (std::abs(f_lo[j] - mean) + std::abs(f_hi[j] - mean));
    }
    const double scale = std::abs(half);
    asc *= scale;
    abs_sum *= scale;
    double err = std::abs((kronrod - gauss) * half);
    if (asc != 0.0 && err != 0.0) {
        err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
    }
    if (abs_sum > std::numeric_limits<double>::min() / (50.0 * eps)) {
        err = std::max(50.0 * eps * abs_sum, err);
    }
    return {a, b, kronrod * half, err};
}

}  // namespace detail

/// Integrate f over [a, b] (finite).
template <class F>
Result integrate(F&& f, double a, double b, const Options& options = {}) {
    Result result;
    if (a == b) {
        return result;
    }
    std::priority_queue<detail::Panel> panels;
    panels.push(detail::gauss_kronrod_21(f, a, b));
    result.evaluations = 21;
    double total = panels.top().value;
    double error = panels.top().error;
    std::vector<detail::Panel> unsplittable;
    int count = 1;
    while (error > std::max(options.abs_tol, options.rel_tol * std::abs(total)) && !panels.empty()) {
        if (count >= options.max_intervals) {
            result.converged = false;
            break;
        }
        const detail::Panel worst = panels.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b)) ||
            std::abs(worst.b - worst.a) < 1e3 * std::numeric_limits<double>::epsilon() * std::abs(mid)) {
            // Resolution limit; keep the panel but stop refining it.
            panels.pop();
            unsplittable.push_back(worst);
            continue;
        }
        panels.pop();
        const detail::Panel left = detail::gauss_kronrod_21(f, worst.a, mid);
        const detail::Panel right = detail::gauss_kronrod_21(f, mid, worst.b);
        result.evaluations += 42;
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++count;
    }
    // Re-sum from the panels to shed accumulated update round-off.
    total = 0.0;
    error = 0.0;
    std::vector<detail::Panel> all(std::move(unsplittable));
    while (!panels.empty()) {
        all.push_back(panels.top());
        panels.pop();
    }
    std::sort(all.begin(), all.end(), [](const detail::Panel& x, const detail::Panel& y) { return x.a < y.a; });
    detail::Panel worst_panel = all.front();
    for (const auto& p : all) {
        total += p.value;
        error += p.error;
        if (p.error > worst_panel.error) {
            worst_panel = p;
        }
    }
    result.value = total;
    result.error = error;
    const double target = std::max(options.abs_tol, options.rel_tol * std::abs(total));
    if (error > target) {
        result.converged = false;
    }
    if (!result.converged && options.throw_on_failure && error > 10.0 * target) {
        std::ostringstream msg;
        msg.precision(6);
        msg << "adaptive quadrature did not converge: estimate " << total << " +- " << error << " (target " << target
            << "), worst subinterval [" << worst_panel.a << ", " << worst_panel.b << "] error " << worst_panel.error;
        throw NumericError(msg.str());
    }
    return result;
}

/// Integrate f over [a, inf) with the map x = a + scale * t / (1 - t), t in [0, 1).
template <class F>
Result integrate_semi_infinite(F&& f, double a, double scale, const Options& options = {}) {
    auto mapped = [&](double t) {
        const double one_minus = 1.0 - t;
        const double x = a + scale * t / one_minus;
        return f(x) * scale / (one_minus * one_minus);
    };
    return integrate(mapped, 0.0, 1.0, options);
}

}  // namespace casimir::quad

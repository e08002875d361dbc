#pragma once

// Primed Matsubara summation sum'_{l>=0} t_l (l = 0 term halved) with relative
// truncation. The OpenMP kernel evaluates terms in blocks concurrently and
// reduces them in index order, so it reproduces the serial reference bit for bit.

#include <array>
#include <functional>
#include <vector>

#include "casimir/parallel.hpp"

namespace casimir {

struct SummationSettings {
    double truncation_tol = 1e-9;
    int consecutive_small_terms = 3;
    long max_terms = 100000;
    /// When false, hitting max_terms returns an unconverged result instead of throwing.
    bool throw_on_cap = true;
};

struct SummationResult {
    double sum = 0.0;
    long terms_used = 0;
    double truncation_error = 0.0;
    bool converged = false;
    double error = 0.0;         // primed sum of the per-term error estimates
    std::vector<double> terms;  // raw t_l, l = 0 .. terms_used-1 (not halved)
};

struct Term {
    double value;
    double error = 0.0;
};

using TermFunction = std::function<Term(long)>;

SummationResult matsubara_sum_serial(const TermFunction& term, const SummationSettings& settings);
SummationResult matsubara_sum_parallel(const TermFunction& term, const SummationSettings& settings);
SummationResult matsubara_sum(const TermFunction& term, const SummationSettings& settings, Execution execution);

/// Gregory end correction: with f = (f_N, ..., f_{N+5}) sampled at spacing h,
///   h sum_{l>=N} f_l - int_{x_N}^inf f dx ~= h * gregory_tail(f).
double gregory_tail(const std::array<double, 6>& f);

}  // namespace casimir

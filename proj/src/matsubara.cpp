#include "casimir/matsubara.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "casimir/errors.hpp"

namespace casimir {

const char* to_string(Execution execution) { return execution == Execution::serial ? "serial" : "parallel"; }

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_thread_count(int threads) {
#ifdef _OPENMP
    if (threads > 0) {
        omp_set_num_threads(threads);
    }
#else
    (void)threads;
#endif
}

namespace {

// Order-dependent accumulator shared by both kernels so their reductions match exactly.
class Accumulator {
public:
    explicit Accumulator(const SummationSettings& settings) : settings_(settings) {}

    // Returns true once the truncation criterion is met.
    bool add(long l, const Term& t) {
        const double term = t.value;
        result_.terms.push_back(term);
        result_.sum += l == 0 ? 0.5 * term : term;
        result_.error += l == 0 ? 0.5 * std::abs(t.error) : std::abs(t.error);
        result_.terms_used = l + 1;
        if (l == 0) {
            return false;
        }
        if (std::abs(term) <= settings_.truncation_tol * std::abs(result_.sum)) {
            ++small_run_;
        } else {
            small_run_ = 0;
        }
        if (small_run_ >= settings_.consecutive_small_terms) {
            result_.converged = true;
            finish();
            return true;
        }
        return false;
    }

    SummationResult take() {
        if (!result_.converged) {
            finish();
            if (settings_.throw_on_cap) {
                std::ostringstream msg;
                msg << "Matsubara sum did not converge within " << settings_.max_terms
                    << " terms (last term " << (result_.terms.empty() ? 0.0 : result_.terms.back()) << ", sum "
                    << result_.sum << ")";
                throw NumericError(msg.str());
            }
        }
        return std::move(result_);
    }

private:
    void finish() {
        const auto n = result_.terms.size();
        if (n < 2) {
            result_.truncation_error = n == 1 ? std::abs(result_.terms.back()) : 0.0;
            return;
        }
        const double last = std::abs(result_.terms[n - 1]);
        const double previous = std::abs(result_.terms[n - 2]);
        const double ratio = previous > 0.0 ? last / previous : 0.0;
        // Geometric tail when the terms are decaying; otherwise report the last term.
        result_.truncation_error = ratio < 1.0 ? last * ratio / (1.0 - ratio) : last;
    }

    const SummationSettings& settings_;
    SummationResult result_;
    int small_run_ = 0;
};

}  // namespace

SummationResult matsubara_sum_serial(const TermFunction& term, const SummationSettings& settings) {
    Accumulator acc(settings);
    for (long l = 0; l < settings.max_terms; ++l) {
        if (acc.add(l, term(l))) {
            break;
        }
    }
    return acc.take();
}

SummationResult matsubara_sum_parallel(const TermFunction& term, const SummationSettings& settings) {
    Accumulator acc(settings);
    const long block = std::max<long>(16, 4L * max_threads());
    std::vector<Term> values;
    for (long start = 0; start < settings.max_terms; start += block) {
        const long count = std::min(block, settings.max_terms - start);
        values.assign(static_cast<std::size_t>(count), Term{0.0, 0.0});
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < count; ++i) {
            try {
                values[static_cast<std::size_t>(i)] = term(start + i);
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
        for (long i = 0; i < count; ++i) {
            // Terms past the stopping index are discarded, errors included, as the serial loop never sees them.
            if (errors[static_cast<std::size_t>(i)]) {
                std::rethrow_exception(errors[static_cast<std::size_t>(i)]);
            }
            if (acc.add(start + i, values[static_cast<std::size_t>(i)])) {
                return acc.take();
            }
        }
    }
    return acc.take();
}

SummationResult matsubara_sum(const TermFunction& term, const SummationSettings& settings, Execution execution) {
    return execution == Execution::serial ? matsubara_sum_serial(term, settings)
                                          : matsubara_sum_parallel(term, settings);
}

double gregory_tail(const std::array<double, 6>& f) {
    // Forward differences at the first sample.
    std::array<double, 6> d = f;
    std::array<double, 6> leading{};
    for (int order = 0; order < 6; ++order) {
        leading[order] = d[0];
        for (int i = 0; i + 1 < 6 - order; ++i) {
            d[i] = d[i + 1] - d[i];
        }
    }
    return 0.5 * leading[0] - leading[1] / 12.0 + leading[2] / 24.0 - 19.0 * leading[3] / 720.0 +
           3.0 * leading[4] / 160.0 - 863.0 * leading[5] / 60480.0;
}

}  // namespace casimir

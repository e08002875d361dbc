#pragma once

#include <exception>
#include <vector>

namespace casimir {

enum class Execution { serial, parallel };

const char* to_string(Execution execution);

/// Upper bound on OpenMP threads (1 without OpenMP).
int max_threads();
/// 0 keeps the runtime default.
void set_thread_count(int threads);

/// Runs body(i) for i in [0, n). Work items must be independent; the first
/// exception in index order is rethrown after all items finish.
template <class Body>
void parallel_for(long n, Body&& body, Execution execution) {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n > 0 ? n : 0));
    const bool parallel = execution == Execution::parallel;
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (long i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& error : errors) {
        if (error) {
            std::rethrow_exception(error);
        }
    }
}

}  // namespace casimir

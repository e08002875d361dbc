// Serial vs OpenMP Matsubara summation on representative pressure workloads.
// Usage: bench_matsubara [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "casimir/lifshitz.hpp"
#include "casimir/presets.hpp"
#include "casimir/parallel.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

struct Case {
    const char* material;
    double separation;
    double temperature;
};

double time_run(const casimir::ResponseModel& model, const Case& c, casimir::Execution execution, int repeats,
                double& value) {
    casimir::NumericSettings settings;
    settings.execution = execution;
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = clock_type::now();
        value = casimir::pressure_matsubara({c.separation, c.temperature}, model, settings).pressure;
        const double dt = std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
        best = std::min(best, dt);
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
    const std::vector<Case> cases{
        {"au-drude", 0.5, 300.0},
        {"au-plasma", 0.1, 300.0},
        {"au-drude", 1.0, 30.0},
        {"silica-opt", 1.0, 300.0},
        {"au-nonlocal-full", 0.5, 300.0},
    };
    std::printf("threads available: %d\n", casimir::max_threads());
    std::printf("%-18s %6s %7s %12s %12s %8s %s\n", "material", "a_um", "T_K", "serial_ms", "parallel_ms", "speedup",
                "identical");
    bool all_identical = true;
    for (const auto& c : cases) {
        const auto model = casimir::build_material(c.material, casimir::preset_keys(c.material));
        double vs = 0.0, vp = 0.0;
        const double ts = time_run(model, c, casimir::Execution::serial, repeats, vs);
        const double tp = time_run(model, c, casimir::Execution::parallel, repeats, vp);
        const bool same = vs == vp;
        all_identical = all_identical && same;
        std::printf("%-18s %6.2f %7.1f %12.3f %12.3f %8.2f %s\n", c.material, c.separation, c.temperature, ts, tp,
                    ts / tp, same ? "yes" : "NO");
    }
    return all_identical ? 0 : 1;
}

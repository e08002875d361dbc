#include <doctest.h>

#include <cmath>

#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/presets.hpp"

using namespace casimir;

namespace {
ResponseModel preset(const std::string& name) { return build_material(name, preset_keys(name)); }
}  // namespace

TEST_CASE("real-frequency drude pressure agrees with the matsubara form") {
    const auto m = preset("au-drude");
    const auto rf = pressure_real_frequency({0.5, 300.0}, m);
    const double mats = pressure_matsubara({0.5, 300.0}, m).pressure;
    MESSAGE("ratio " << rf.total / mats);
    CHECK(std::abs(rf.total / mats - 1.0) < 1e-3);
    CHECK(rf.propagating + rf.evanescent == doctest::Approx(rf.total).epsilon(1e-9));
    CHECK(rf.energy_cutoff > 0.0);
}

TEST_CASE("damped oscillator dielectric") {
    DielectricParams d;
    d.optical.oscillators = {{2.8, 10.0, 1.0}};
    const ResponseModel m{"osc", d, {}};
    // the oscillator tail needs a higher cutoff than the drude default
    RealFrequencySettings settings;
    settings.energy_cutoff_factor = 80.0;
    const auto rf = pressure_real_frequency({0.3, 300.0}, m, settings);
    const double mats = pressure_matsubara({0.3, 300.0}, m).pressure;
    CHECK(std::abs(rf.total / mats - 1.0) < 1e-3);
}

TEST_CASE("lossless models are rejected") {
    CHECK_THROWS_AS(pressure_real_frequency({0.5, 300.0}, preset("au-plasma")), DomainError);
    CHECK_THROWS_AS(pressure_real_frequency({0.5, 300.0}, preset("silica-opt")), DomainError);
}

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "casimir/analysis.hpp"
#include "casimir/errors.hpp"
#include "casimir/presets.hpp"

using namespace casimir;

namespace {
ResponseModel preset(const std::string& name) { return build_material(name, preset_keys(name)); }

MeasurementSet fixture() {
    return load_measurements_file(std::string(CASIMIR_TEST_DATA) + "/plasma_pressure_fixture.csv",
                                  ObservableKind::pressure, 95.0);
}

PredictionSeries predict(const std::string& name, const std::vector<double>& seps) {
    PredictionSeries p{name, seps, {}};
    for (double a : seps) {
        p.values.push_back(pressure_matsubara({a, 300.0}, preset(name)).pressure);
    }
    return p;
}
}  // namespace

TEST_CASE("pfa conversions") {
    const SphereGeometry r100{100.0};
    CHECK(pfa_gradient_from_pressure(-1.0, r100) == doctest::Approx(628.3185307).epsilon(1e-9));
    CHECK(pfa_gradient_from_pressure(-1.0, {200.0}) == 2.0 * pfa_gradient_from_pressure(-1.0, r100));
    CHECK(pfa_pressure_from_gradient(0.0, r100) == 0.0);
    CHECK(pfa_pressure_from_gradient(5.0987, r100) == doctest::Approx(-8.1148e-3).epsilon(1e-4));
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double p = u(rng) * std::pow(10.0, 3.0 * u(rng));
        const SphereGeometry g{std::pow(10.0, 1.0 + u(rng))};
        CHECK(std::abs(pfa_pressure_from_gradient(pfa_gradient_from_pressure(p, g), g) / p - 1.0) <= 1e-15);
    }
    // ideal metal near T = 0
    CHECK(pfa_gradient({1.0, 0.0}, make_ideal_metal(), r100) == doctest::Approx(5.0987).epsilon(1e-4));
    CHECK_THROWS_AS(pfa_gradient_from_pressure(-1.0, {0.0}), DomainError);
}

TEST_CASE("pfa advisory") {
    CHECK_FALSE(pfa_advisory(1.0, {150.0}));
    CHECK(pfa_advisory(5.0, {100.0}));
}

TEST_CASE("pfa force derivative is the gradient") {
    const SphereGeometry g{100.0};
    for (const char* name : {"au-drude", "au-plasma", "silica-opt", "ideal-metal"}) {
        for (double a : {0.3, 0.7, 1.5}) {
            const auto m = preset(name);
            const double h = 1e-3 * a;
            const double d = (pfa_force({a + h, 300.0}, m, g) - pfa_force({a - h, 300.0}, m, g)) / (2.0 * h);
            CHECK_MESSAGE(std::abs(d / pfa_gradient({a, 300.0}, m, g) - 1.0) < 1e-3, name << " a=" << a);
        }
    }
    CHECK(pfa_force({1.0, 300.0}, make_vacuum(), g) == 0.0);
    CHECK(pfa_force({1.0, 300.0}, preset("au-drude"), {200.0}) ==
          doctest::Approx(2.0 * pfa_force({1.0, 300.0}, preset("au-drude"), g)));
}

TEST_CASE("differential force") {
    const SphereGeometry g{100.0};
    const std::vector<double> seps{0.3, 0.6};
    for (const auto& row : differential_force(seps, 300.0, preset("au-drude"), preset("au-drude"), g)) {
        CHECK(row.difference == 0.0);
    }
    const auto v = differential_force(seps, 300.0, preset("au-drude"), make_vacuum(), g);
    CHECK(v[1].difference == pfa_force({0.6, 300.0}, preset("au-drude"), g));
}

TEST_CASE("sweep parsing") {
    const auto one = SweepSpec::parse("0.5");
    CHECK(one.values() == std::vector<double>{0.5});
    const auto lin = SweepSpec::parse("1:3:5").values();
    CHECK(lin.size() == 5);
    CHECK(lin[1] == doctest::Approx(1.5));
    const auto lg = SweepSpec::parse("1:100:3", true).values();
    CHECK(lg[1] == doctest::Approx(10.0));
    CHECK(lg.back() == 100.0);
    CHECK_THROWS_AS(SweepSpec::parse("1:2"), ConfigError);
    CHECK_THROWS_AS(SweepSpec::parse("a:b:c"), ConfigError);
    CHECK_THROWS_AS(SweepSpec::parse("1:2:0"), ConfigError);
    CHECK(parse_quantity("relative-thermal-correction") == Quantity::relative_thermal_correction);
    CHECK_THROWS_AS(parse_quantity("bogus"), ConfigError);
}

TEST_CASE("curve is deterministic and keeps failed cells") {
    CurveRequest req;
    req.quantity = Quantity::relative_thermal_correction;
    req.models = {preset("au-drude"), preset("au-plasma")};
    req.separations = {0.5, 1.0, 2.0};
    const auto a = curve(req);
    const auto b = curve(req);
    REQUIRE(a.cells.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(a.cells[i][0].value == b.cells[i][0].value);
        CHECK(a.cells[i][1].value == b.cells[i][1].value);
        CHECK(a.cells[i][0].value < 0.0);
        CHECK(a.cells[i][1].value > 0.0);
    }
    req.execution = Execution::serial;
    CHECK(curve(req).cells[2][0].value == a.cells[2][0].value);

    CurveRequest bad;
    bad.quantity = Quantity::force_gradient;
    bad.models = {preset("au-drude")};
    bad.separations = {0.5};
    CHECK_THROWS_AS(curve(bad), ConfigError);  // no geometry
    bad.quantity = Quantity::pressure;
    bad.models.push_back(make_ideal_metal());
    bad.settings.max_terms = 3;
    const auto t = curve(bad);
    REQUIRE(t.cells.size() == 1);
    CHECK_FALSE(t.cells[0][0].ok);
    CHECK_FALSE(t.cells[0][0].error.empty());
}

TEST_CASE("measurement ingestion") {
    std::istringstream ok("separation_um,value,total_error\n0.2,-1,0.1\n0.3,-0.5,0.05\n");
    CHECK(load_measurements(ok, ObservableKind::pressure, 95.0).rows.size() == 2);
    std::istringstream empty("separation_um,value,total_error\n");
    CHECK_THROWS_AS(load_measurements(empty, ObservableKind::pressure, 95.0), IngestionError);
    std::istringstream unordered("separation_um,value,total_error\n0.3,-1,0.1\n0.2,-0.5,0.05\n");
    CHECK_THROWS_AS(load_measurements(unordered, ObservableKind::pressure, 95.0), IngestionError);
    std::istringstream zero_err("separation_um,value,total_error\n0.3,-1,0\n");
    CHECK_THROWS_AS(load_measurements(zero_err, ObservableKind::pressure, 95.0), IngestionError);
    CHECK_THROWS_AS(load_measurements_file("/nonexistent/file.csv", ObservableKind::pressure, 95.0),
                    std::ios_base::failure);
}

TEST_CASE("log interpolation") {
    PredictionSeries s{"p", {}, {}};
    for (int i = 0; i < 10; ++i) {
        const double a = 0.2 * std::pow(1.3, i);
        s.separations.push_back(a);
        s.values.push_back(-1.0 / std::pow(a, 4));
    }
    const auto exact = interpolate_log(s, s.separations[3]);
    CHECK(exact.value == s.values[3]);
    CHECK(exact.error == 0.0);
    const double a = 0.5;
    const auto mid = interpolate_log(s, a);
    CHECK(std::abs(mid.value + 1.0 / std::pow(a, 4)) <= std::max(mid.error, 1e-3 * std::abs(mid.value)));
    CHECK(mid.error > 0.0);
    CHECK_THROWS_AS(interpolate_log(s, 0.1), DomainError);
}

TEST_CASE("synthetic plasma fixture") {
    const auto data = fixture();
    std::vector<double> seps;
    for (const auto& r : data.rows) {
        seps.push_back(r.separation);
    }
    const auto plasma = predict("au-plasma", seps);
    const auto drude = predict("au-drude", seps);
    const auto report = compare(data, {plasma, drude});
    REQUIRE(report.models.size() == 2);
    CHECK(report.models[0].model == "au-drude");
    CHECK(report.models[0].verdict == Verdict::excluded);
    CHECK(report.models[1].model == "au-plasma");
    CHECK(report.models[1].verdict == Verdict::consistent);
    CHECK(report.models[1].fraction_consistent >= 0.95);

    // invariance under reordering of rows and models
    auto shuffled = data;
    std::mt19937 rng(5);
    std::shuffle(shuffled.rows.begin(), shuffled.rows.end(), rng);
    const auto again = compare(shuffled, {drude, plasma});
    for (std::size_t m = 0; m < 2; ++m) {
        CHECK(again.models[m].model == report.models[m].model);
        CHECK(again.models[m].fraction_consistent == report.models[m].fraction_consistent);
        for (std::size_t i = 0; i < data.rows.size(); ++i) {
            CHECK(again.models[m].points[i].separation == report.models[m].points[i].separation);
            CHECK(again.models[m].points[i].deviation == report.models[m].points[i].deviation);
        }
    }

    // data equal to the predictions
    MeasurementSet exact = data;
    for (std::size_t i = 0; i < exact.rows.size(); ++i) {
        exact.rows[i].value = plasma.values[i];
    }
    CHECK(compare(exact, {plasma}).models[0].fraction_consistent == 1.0);

    MeasurementSet none;
    CHECK_THROWS_AS(compare(none, {plasma}), DomainError);
    PredictionSeries short_range{"s", {0.3, 0.4, 0.5, 0.6}, {-1, -1, -1, -1}};
    CHECK_THROWS_AS(compare(data, {short_range}), DomainError);
}

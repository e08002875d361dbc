#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "casimir/config.hpp"
#include "casimir/errors.hpp"
#include "casimir/run.hpp"

using namespace casimir;

namespace {
ConfigSections parse(const std::string& text) {
    std::istringstream in(text);
    return read_config(in, "/base");
}
}  // namespace

TEST_CASE("ini parsing and validation") {
    const auto s = parse("[run]\ncommand = pressure\nmaterial = au-drude\na = 0.5\nT = 300\n"
                         "[material.mine]\nbase = au-drude\nplasma_frequency = 8.5\n"
                         "[kk]\ntable = t.csv\n");
    CHECK(s.at("run").at("a") == "0.5");
    CHECK(s.at("kk").at("table") == "/base/t.csv");
    const auto cfg = resolve_config(s);
    CHECK(cfg.command == Command::pressure);
    CHECK(cfg.separations == std::vector<double>{0.5});
    CHECK(cfg.temperatures == std::vector<double>{300.0});
    REQUIRE(cfg.materials.size() == 1);
    CHECK(cfg.materials[0].name == "au-drude");

    const auto mine = resolve_material("mine", s);
    CHECK(std::get<DrudeParams>(mine.response).plasma_frequency == 8.5);
    CHECK(std::get<DrudeParams>(mine.response).relaxation.amplitude == 0.035);

    CHECK_THROWS_AS(resolve_config(parse("[bogus]\nx = 1\n")), ConfigError);
    CHECK_THROWS_AS(resolve_config(parse("[run]\ncommand = pressure\nmaterial = au-drude\na = 1\nT = 300\nbad = 1\n")),
                    ConfigError);
    CHECK_THROWS_AS(resolve_config(parse("[run]\ncommand = gradient\nmaterial = au-drude\na = 1\nT = 300\n")),
                    ConfigError);
    CHECK_THROWS_AS(resolve_config(parse("[run]\ncommand = pressure\nmaterial = au-drude\na = -1\nT = 300\n")),
                    ConfigError);
    CHECK_THROWS_AS(read_config_file("/nonexistent/casimir.ini"), std::ios_base::failure);
}

TEST_CASE("unknown material lists the available ones") {
    try {
        resolve_material("unobtainium", {});
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string what = e.what();
        CHECK(what.find("au-drude") != std::string::npos);
        CHECK(what.find("silica") != std::string::npos);
    }
    CHECK_THROWS_AS(resolve_material("ni-nonlocal", {}), ConfigError);  // fermi_velocity required
}

TEST_CASE("every preset without required keys builds") {
    for (const auto& name : preset_names()) {
        bool required = false;
        for (const auto& [k, v] : preset_keys(name)) {
            required = required || v == required_marker;
        }
        if (!required) {
            CHECK_NOTHROW(build_material(name, preset_keys(name)));
        }
    }
}

TEST_CASE("merge and pfa warnings") {
    auto base = parse("[run]\ncommand = gradient\nmaterial = au-drude\na = 1\nT = 300\nradius = 100\n");
    merge_config(base, {{"run", {{"a", "5"}}}});
    const auto cfg = resolve_config(base);
    CHECK(cfg.separations == std::vector<double>{5.0});
    CHECK(cfg.warnings.size() == 1);
    const auto d = diagnostics(base);
    CHECK(d["valid"].get<bool>());
    CHECK_FALSE(d["warnings"].empty());
    CHECK_FALSE(diagnostics(parse("[run]\ncommand = pressure\nmaterial = x\na = 1\nT = 300\n"))["valid"].get<bool>());
}

TEST_CASE("csv formatting") {
    Table t{{"x", "y", "n", "flag", "name"}, {{1.0 / 3.0, Missing{}, 7L, true, std::string("au")}}};
    CHECK(format_csv(t) == "x,y,n,flag,name\n0.333333333333333,NA,7,true,au\n");
}

TEST_CASE("run, manifest and rerun") {
    const auto dir = std::filesystem::temp_directory_path() / "casimir_test_config";
    std::filesystem::create_directories(dir);
    const std::string out = (dir / "p.csv").string();
    auto s = parse("[run]\ncommand = pressure\nmaterial = au-plasma\na = 0.5:1:3\nT = 300\noutput = " + out + "\n");
    std::ostringstream o, e;
    REQUIRE(run_sections(s, o, e) == exit_ok);
    std::ifstream first(out);
    const std::string csv1((std::istreambuf_iterator<char>(first)), {});
    CHECK(csv1.rfind("material,separation_um,temperature_K,pressure_eV_per_um3", 0) == 0);

    const auto again = config_from_manifest_file(out + ".manifest.json");
    const std::string out2 = (dir / "p2.csv").string();
    auto s2 = again;
    s2["run"]["output"] = out2;
    s2["run"].erase("manifest");
    REQUIRE(run_sections(s2, o, e) == exit_ok);
    std::ifstream second(out2);
    const std::string csv2((std::istreambuf_iterator<char>(second)), {});
    CHECK(csv1 == csv2);

    std::ostringstream o3, e3;
    auto broken = s;
    broken["run"]["material"] = "nothing";
    CHECK(run_sections(broken, o3, e3) == exit_config);
    const auto rec = nlohmann::json::parse(e3.str());
    CHECK(rec["error"]["exit_code"].get<int>() == exit_config);
    std::filesystem::remove_all(dir);
}

TEST_CASE("exit code mapping") {
    CHECK(exit_code_for(ConfigError("x")) == exit_config);
    CHECK(exit_code_for(DomainError("x")) == exit_config);
    CHECK(exit_code_for(NumericError("x")) == exit_numeric);
    CHECK(exit_code_for(std::ios_base::failure("x")) == exit_io);
    CHECK(exit_code_for(std::runtime_error("x")) == exit_failure);
}

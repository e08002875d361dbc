// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "casimir/entropy.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/optical.hpp"
#include "casimir/presets.hpp"
#include "casimir/reflection.hpp"

using namespace casimir;

namespace {

ResponseModel preset(const std::string& name, const KeyMap& extra = {}) {
    if (extra.empty()) {
        return build_material(name, preset_keys(name));
    }
    KeyMap block = extra;
    block["base"] = name;
    return build_material(name, expand_material_keys(name, block));
}

double rel(const ResponseModel& m, double a) { return thermal_correction({a, 300.0}, m).relative; }

int failures = 0;

void report(int id, bool pass, const std::string& detail, double seconds) {
    std::printf("%s criterion %d: %s (%.1f s)\n", pass ? "PASS" : "FAIL", id, detail.c_str(), seconds);
    std::fflush(stdout);
    failures += pass ? 0 : 1;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

void run(int id, const std::function<std::pair<bool, std::string>()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        std::tie(pass, detail) = body();
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(id, pass, detail, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

std::pair<bool, std::string> ideal_zero_temperature() {
    const double p = pressure_to_pascal(pressure_zero_temperature(1.0, make_ideal_metal()).pressure) * 1e3;
    const double want = -std::pow(std::numbers::pi, 2) * hbar_c / 240.0;
    const double want_mpa = pressure_to_pascal(want) * 1e3;
    const bool pass = std::abs(p / want_mpa - 1.0) < 1e-3 && std::abs(p + 1.3001) < 1.3001e-3;
    return {pass, fmt("P0(1 um) = %.5f mPa, closed form %.5f mPa", p, want_mpa)};
}

std::pair<bool, std::string> ideal_thermal() {
    const double r5 = rel(make_ideal_metal(), 0.5) * 100, r1 = rel(make_ideal_metal(), 1.0) * 100;
    const bool pass = std::abs(r5 / 0.0098 - 1) <= 0.1 && std::abs(r1 / 0.157 - 1) <= 0.1;
    return {pass, fmt("ideal metal dT P/P = %+.4f%% (0.5 um), %+.4f%% (1 um)", r5, r1)};
}

std::pair<bool, std::string> drude_thermal() {
    const auto m = preset("au-drude");
    const double want[3] = {-6.4, -9.4, -13.8};
    const double seps[3] = {0.5, 0.7, 1.0};
    double got[3];
    bool pass = true;
    for (int i = 0; i < 3; ++i) {
        got[i] = rel(m, seps[i]) * 100;
        pass = pass && std::abs(got[i] - want[i]) <= 0.5;
    }
    boost::math::tools::eps_tolerance<double> tol(20);
    std::uintmax_t iters = 60;
    const auto [lo, hi] =
        boost::math::tools::toms748_solve([&](double a) { return rel(m, a); }, 4.0, 9.0, tol, iters);
    const double zero = 0.5 * (lo + hi);
    pass = pass && std::abs(zero - 6.3) <= 0.3;
    return {pass, fmt("Drude dT P/P = %.2f%%, %.2f%%, %.2f%%; zero at %.3f um", got[0], got[1], got[2], zero)};
}

std::pair<bool, std::string> plasma_thermal() {
    const auto m = preset("au-plasma");
    const double r5 = rel(m, 0.5) * 100, r1 = rel(m, 1.0) * 100;
    const bool pass = std::abs(r5 - 0.058) <= 0.03 && std::abs(r1 - 0.29) <= 0.06;
    return {pass, fmt("plasma dT P/P = %+.4f%% (0.5 um, want 0.058 +- 0.03), %+.4f%% (1 um, want 0.29 +- 0.06)", r5,
                      r1)};
}

std::pair<bool, std::string> half_value() {
    const double d = high_T_ratio(preset("au-drude"), 15.0, 300.0);
    const double s = high_T_ratio(preset("silica"), 15.0, 300.0);
    const bool pass = std::abs(d - 0.5) <= 0.01 && std::abs(s - 0.5) <= 0.01;
    return {pass, fmt("P/P_ideal,highT at 15 um: Drude %.5f, silica with conductivity %.5f", d, s)};
}

std::pair<bool, std::string> dielectric_high_t() {
    const double p = pressure_matsubara({15.0, 300.0}, preset("silica-opt")).pressure;
    // closed form with the reference Li3 argument, and with the model's own static permittivity
    const double reference = -k_boltzmann * 300.0 / (8.0 * std::numbers::pi * std::pow(15.0, 3)) * polylog3(0.34129);
    const double own = high_T_dielectric(15.0, 300.0, 1.0 + 1.098 + 1.703);
    const bool pass = std::abs(p / reference - 1.0) <= 5e-3;
    return {pass, fmt("silica P(15 um) / closed form = %.5f (Li3(0.34129) = %.5f); vs model eps0 3.801: %.5f", p / reference,
                      polylog3(0.34129), p / own)};
}

std::pair<bool, std::string> silica_thermal() {
    const double c1 = rel(preset("silica"), 1.0) * 100, c2 = rel(preset("silica"), 2.0) * 100;
    const double o1 = rel(preset("silica-opt"), 1.0) * 100, o2 = rel(preset("silica-opt"), 2.0) * 100;
    const bool with = std::abs(c1 - 182) <= 20 && std::abs(c2 - 314) <= 20;
    const bool without = std::abs(o1 - 3.9) <= 1.5 && std::abs(o2 - 15.4) <= 1.5;
    return {with && without, fmt("with conductivity %.1f%% / %.1f%% (%s); without %.2f%% / %.2f%% (%s)", c1, c2,
                                 with ? "ok" : "out", o1, o2, without ? "ok" : "out")};
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g;
    for (int i = 0; i < n; ++i) {
        g.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    }
    return g;
}

std::pair<bool, std::string> nernst() {
    const EntropySettings s;
    const auto plasma = entropy_curve(1.0, preset("au-plasma"), log_grid(0.1, 300.0, 12), s);
    const auto perfect = entropy_curve(1.0, preset("au-drude-perfect"), log_grid(1.0, 300.0, 12), s);
    const auto impure = entropy_curve(1.0, preset("au-drude-impure"), log_grid(1e-7, 300.0, 16), s);
    const auto frozen = entropy_curve(1.0, preset("silica-frozen"), log_grid(1e-3, 300.0, 12), s);
    const double oracle = 0.84448 * k_boltzmann / (16.0 * std::numbers::pi);
    // the same l = 0 form with the model's own static permittivity 3.801
    const double r0sq = std::pow((3.801 - 1.0) / (3.801 + 1.0), 2);
    const double own = k_boltzmann * (zeta3 - polylog3(r0sq)) / (16.0 * std::numbers::pi);
    const bool pass = plasma.classification == NernstClass::nernst_satisfied &&
                      perfect.classification == NernstClass::negative_violation &&
                      impure.classification == NernstClass::nernst_satisfied &&
                      frozen.classification == NernstClass::positive_violation &&
                      std::abs(frozen.limit_estimate / oracle - 1.0) <= 0.05;
    return {pass, fmt("plasma %s; Drude perfect %s (S0 %.4g); Drude impure %s; frozen silica %s, S0 %.5g vs %.5g (own eps0: %.5g)",
                      to_string(plasma.classification), to_string(perfect.classification), perfect.limit_estimate,
                      to_string(impure.classification), to_string(frozen.classification), frozen.limit_estimate,
                      oracle, own)};
}

std::pair<bool, std::string> nonlocal() {
    const auto full = preset("au-nonlocal-full");
    const auto plasma = preset("au-plasma");
    const auto drude = preset("au-drude");
    const auto base = std::get<NonlocalDrudeParams>(full.response);
    double worst_plasma = 0.0, worst_vl = 0.0, worst_local = 0.0;
    for (double a : {0.2, 0.4, 0.6, 0.8, 1.0}) {
        const double pn = pressure_matsubara({a, 300.0}, full).pressure;
        worst_plasma = std::max(worst_plasma, std::abs(pn / pressure_matsubara({a, 300.0}, plasma).pressure - 1.0));
    }
    for (double a : {0.2, 0.5, 1.0}) {
        const double ref = pressure_matsubara({a, 300.0}, full).pressure;
        for (double mult : {0.0, 5.0, 10.0}) {
            auto p = base;
            p.v_longitudinal = mult * p.fermi_velocity;
            const double v = pressure_matsubara({a, 300.0}, {"vl", p, {}}).pressure;
            worst_vl = std::max(worst_vl, std::abs(v / ref - 1.0));
        }
        auto local = base;
        local.v_transverse = local.v_longitudinal = 0.0;
        const double pl = pressure_matsubara({a, 300.0}, {"v0", local, {}}).pressure;
        worst_local = std::max(worst_local, std::abs(pl / pressure_matsubara({a, 300.0}, drude).pressure - 1.0));
    }
    const bool pass = worst_plasma <= 0.02 && worst_vl < 0.01 && worst_local <= 1e-6;
    return {pass, fmt("max |P_nl/P_plasma - 1| = %.3g; v_L sweep %.3g; local limit %.3g", worst_plasma, worst_vl,
                      worst_local)};
}

std::pair<bool, std::string> impedance_paths() {
    const DrudeParams gold{9.0, {0.0, 0.035, 5.0, 300.0}};
    std::mt19937_64 rng(2718);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double eps = 1.0 + std::pow(10.0, 6.0 * u(rng)) * u(rng);
        const double mu = u(rng) < 0.2 ? 1.0 + 100.0 * u(rng) : 1.0;
        const WaveVectorPoint p{std::pow(10.0, -2.0 + 4.0 * u(rng)), std::pow(10.0, -3.0 + 4.0 * u(rng))};
        const auto f = fresnel_pair(eps, mu, p);
        const auto z = impedance_pair(local_impedances(eps, mu, p), p);
        worst = std::max({worst, std::abs(f.tm - z.tm), std::abs(f.te - z.te)});
    }
    double worst_nl = 0.0;
    for (int i = 0; i < 50; ++i) {
        const WaveVectorPoint p{std::pow(10.0, -1.0 + 3.0 * u(rng)), std::pow(10.0, -2.0 + 3.0 * u(rng))};
        const NonlocalDrudeParams local{gold, 0.0, 0.0, WavevectorForm::full, 0.00467};
        const auto zn = nonlocal_impedances(local, 1.0, p, 300.0);
        const auto zl = local_impedances(drude_eps_imag(gold, p.xi, 300.0), 1.0, p);
        worst_nl = std::max({worst_nl, std::abs(zn.tm / zl.tm - 1.0), std::abs(zn.te / zl.te - 1.0)});
    }
    return {worst <= 1e-10 && worst_nl <= 1e-8,
            fmt("max |r_fresnel - r_impedance| = %.2g; nonlocal quadrature vs local %.2g", worst, worst_nl)};
}

std::pair<bool, std::string> real_frequency() {
    const auto m = preset("au-drude");
    double r[2];
    const double seps[2] = {0.2, 0.5};
    for (int i = 0; i < 2; ++i) {
        r[i] = pressure_real_frequency({seps[i], 300.0}, m).total / pressure_matsubara({seps[i], 300.0}, m).pressure;
    }
    return {std::abs(r[0] - 1) <= 0.05 && std::abs(r[1] - 1) <= 0.05,
            fmt("real-frequency / Matsubara = %.5f (0.2 um), %.5f (0.5 um)", r[0], r[1])};
}

std::pair<bool, std::string> thermodynamic_identity() {
    // presets with required keys get representative values
    const std::map<std::string, KeyMap> extra{
        {"ni-nonlocal", {{"fermi_velocity", "0.00068"}}},
        {"si-membrane-dark", {{"carrier_plasma_frequency", "0.05"}, {"carrier_gamma", "0.02"}}},
        {"si-membrane-bright", {{"carrier_plasma_frequency", "0.3"}, {"carrier_gamma", "0.02"}}},
    };
    double worst = 0.0;
    std::string worst_name;
    for (const auto& name : preset_names()) {
        const auto it = extra.find(name);
        const auto m = preset(name, it == extra.end() ? KeyMap{} : it->second);
        const double a = 0.5, h = 1e-3;
        const double p = pressure_matsubara({a, 300.0}, m).pressure;
        const double d =
            -(free_energy({a + h, 300.0}, m).free_energy - free_energy({a - h, 300.0}, m).free_energy) / (2 * h);
        const double dev = p == 0.0 ? std::abs(d) : std::abs(d / p - 1.0);
        if (dev >= worst) {
            worst = dev;
            worst_name = name;
        }
    }
    return {worst <= 1e-3, fmt("%zu presets, worst |-dF/da / P - 1| = %.2g (%s)", preset_names().size(), worst,
                               worst_name.c_str())};
}

std::pair<bool, std::string> kramers_kronig() {
    const DrudeParams gold{9.0, {0.0, 0.035, 5.0, 300.0}};
    const auto table = load_optical_table_file(std::string(CASIMIR_TEST_DATA) + "/au_drude_optical.csv");
    auto kk = std::make_shared<const KramersKronigTransform>(table,
                                                             ExtrapolationSpec{ExtrapolationKind::drude, gold, 0.2});
    double worst_eps = 0.0;
    for (double xi : log_grid(0.05, 50.0, 61)) {
        worst_eps = std::max(worst_eps, std::abs(kk->eps_imag(xi, 300.0) / drude_eps_imag(gold, xi, 300.0) - 1.0));
    }
    const ResponseModel tab{"au-table", TabulatedModel{kk}, {}};
    const ResponseModel drude{"au-drude", gold, {}};
    double worst_p = 0.0;
    for (double a : {0.5, 1.0, 2.0}) {
        worst_p = std::max(worst_p, std::abs(pressure_matsubara({a, 300.0}, tab).pressure /
                                                 pressure_matsubara({a, 300.0}, drude).pressure -
                                             1.0));
    }
    return {worst_eps <= 5e-3 && worst_p <= 3e-3,
            fmt("max eps deviation %.3g over [0.05, 50] eV; max pressure deviation %.3g at a >= 0.5 um", worst_eps,
                worst_p)};
}

}  // namespace

int main() {
    run(1, ideal_zero_temperature);
    run(2, ideal_thermal);
    run(3, drude_thermal);
    run(4, plasma_thermal);
    run(5, half_value);
    run(6, dielectric_high_t);
    run(7, silica_thermal);
    run(8, nernst);
    run(9, nonlocal);
    run(10, impedance_paths);
    run(11, real_frequency);
    run(12, thermodynamic_identity);
    run(13, kramers_kronig);
    std::printf("%d of 13 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

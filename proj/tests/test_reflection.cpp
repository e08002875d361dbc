#include <doctest.h>

#include <cmath>
#include <random>

#include "casimir/errors.hpp"
#include "casimir/reflection.hpp"
#include "casimir/units.hpp"

using namespace casimir;

namespace {
const DrudeParams gold{9.0, {0.0, 0.035, 5.0, 300.0}};
const double xi1 = 0.16243035;

ResponseModel model(ResponseVariant r, double mu = 1.0) { return {"m", std::move(r), {mu}}; }

NonlocalDrudeParams nonlocal(double v_tr, double v_l, WavevectorForm form) {
    return {gold, v_tr, v_l, form, 0.00467};
}
}  // namespace

TEST_CASE("fresnel coefficients") {
    const auto vac = fresnel_pair(1.0, 1.0, {1.0, 0.3});
    CHECK(vac.tm == 0.0);
    CHECK(vac.te == 0.0);
    CHECK(fresnel_pair(1e12, 1.0, {1.0, 0.3}).tm == doctest::Approx(1.0).epsilon(1e-5));
    const double eps = drude_eps_imag(gold, xi1, 300.0);
    const WaveVectorPoint p{1.0, xi1};
    CHECK(p.q() == doctest::Approx(1.29522).epsilon(1e-5));
    CHECK(inside_wave_number(eps, 1.0, p) == doctest::Approx(41.3901).epsilon(1e-5));
    const auto r = fresnel_pair(eps, 1.0, p);
    CHECK(r.tm == doctest::Approx(0.975022).epsilon(1e-6));
    CHECK(r.te == doctest::Approx(-0.939313).epsilon(1e-6));
    CHECK(r.method == ReflectionMethod::fresnel);
}

TEST_CASE("local impedances") {
    const auto z = local_impedances(1.0, 1.0, {0.0, 0.4});
    CHECK(z.tm == doctest::Approx(1.0));
    CHECK(z.te == doctest::Approx(1.0));
    const double eps = drude_eps_imag(gold, xi1, 300.0);
    CHECK(local_impedances(eps, 1.0, {1.0, xi1}).tm == doctest::Approx(0.0198996).epsilon(1e-5));
}

TEST_CASE("impedance form") {
    const WaveVectorPoint p{2.0, 0.3};
    CHECK(impedance_pair({0.0, 1.0}, p).tm == 1.0);
    CHECK(impedance_pair({1.0, p.xi / (hbar_c * p.q())}, p).te == doctest::Approx(0.0).epsilon(1e-15));
    const double eps = drude_eps_imag(gold, xi1, 300.0);
    const auto r = impedance_pair(local_impedances(eps, 1.0, {1.0, xi1}), {1.0, xi1});
    CHECK(r.tm == doctest::Approx(0.975022).epsilon(1e-6));
    CHECK(r.te == doctest::Approx(-0.939313).epsilon(1e-6));
}

TEST_CASE("fresnel and impedance paths agree on random local points") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double eps = 1.0 + std::pow(10.0, 6.0 * u(rng)) * u(rng);
        const double mu = 1.0 + 10.0 * u(rng) * (u(rng) < 0.3);
        const WaveVectorPoint p{std::pow(10.0, -2.0 + 4.0 * u(rng)), std::pow(10.0, -3.0 + 4.0 * u(rng))};
        const auto f = fresnel_pair(eps, mu, p);
        const auto z = impedance_pair(local_impedances(eps, mu, p), p);
        CHECK(std::abs(f.tm - z.tm) < 1e-10);
        CHECK(std::abs(f.te - z.te) < 1e-10);
    }
}

TEST_CASE("nonlocal impedances in the local limit") {
    std::mt19937_64 rng(103);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 40; ++i) {
        const WaveVectorPoint p{std::pow(10.0, -1.0 + 3.0 * u(rng)), std::pow(10.0, -2.0 + 3.0 * u(rng))};
        const double eps = drude_eps_imag(gold, p.xi, 300.0);
        for (auto form : {WavevectorForm::full, WavevectorForm::transverse_only}) {
            const auto zn = nonlocal_impedances(nonlocal(0.0, 0.0, form), 1.0, p, 300.0);
            const auto zl = local_impedances(eps, 1.0, p);
            CHECK(std::abs(zn.tm / zl.tm - 1.0) < 1e-8);
            CHECK(std::abs(zn.te / zl.te - 1.0) < 1e-8);
        }
    }
}

TEST_CASE("transverse-only TE impedance has the local closed form") {
    const auto params = nonlocal(7 * 0.00467, 7 * 0.00467, WavevectorForm::transverse_only);
    const WaveVectorPoint p{3.0, 0.2};
    const double eps_tr = nonlocal_eps_imag(params, p.xi, p.k_perp, 0.0, 300.0).transverse;
    CHECK(nonlocal_impedances(params, 1.0, p, 300.0).te ==
          doctest::Approx(local_impedances(eps_tr, 1.0, p).te).epsilon(1e-9));
    const auto a = nonlocal_impedances(params, 1.0, p, 300.0);
    const auto b = nonlocal_impedances(params, 1.0, p, 300.0);
    CHECK(a.tm == b.tm);
    CHECK(a.te == b.te);
    CHECK(a.tm > 0.0);
    CHECK(a.te > 0.0);
}

TEST_CASE("nonlocal impedances approach the local ones linearly in v") {
    const WaveVectorPoint p{5.0, 0.05};
    const double eps = drude_eps_imag(gold, p.xi, 300.0);
    const auto zl = local_impedances(eps, 1.0, p);
    double ratio_prev = 0.0;
    for (double v : {1e-3, 1e-4, 1e-5}) {
        const auto zn = nonlocal_impedances(nonlocal(v, v, WavevectorForm::full), 1.0, p, 300.0);
        const double dev = std::max(std::abs(zn.tm / zl.tm - 1.0), std::abs(zn.te / zl.te - 1.0));
        const double c = dev / v;
        MESSAGE("v = " << v << ", relative deviation / v = " << c);
        CHECK(c < 1e3);
        if (ratio_prev > 0.0) {
            CHECK(c == doctest::Approx(ratio_prev).epsilon(0.2));
        }
        ratio_prev = c;
    }
}

TEST_CASE("zero-frequency limits") {
    DielectricParams silica;
    silica.optical.oscillators = {{2.81, 1.0}};  // eps0 = 3.81
    const auto s = zero_frequency_pair(model(silica), 1.0, 300.0);
    CHECK(s.tm == doctest::Approx(0.58420).epsilon(1e-5));
    CHECK(s.te == 0.0);
    silica.include_conductivity = true;
    silica.conductivity = {29.7, 0.0};
    CHECK(zero_frequency_pair(model(silica), 1.0, 300.0).tm == 1.0);
    const auto d = zero_frequency_pair(model(gold), 1.0, 300.0);
    CHECK(d.tm == 1.0);
    CHECK(d.te == 0.0);
    const auto p = zero_frequency_pair(model(PlasmaParams{9.0}), 1.0, 300.0);
    CHECK(p.tm == 1.0);
    CHECK(p.te == doctest::Approx(-0.95709).epsilon(1e-5));
    const auto ideal = zero_frequency_pair(make_ideal_metal(), 1.0, 300.0);
    CHECK(ideal.tm == 1.0);
    CHECK(ideal.te == -1.0);
    const auto nl = zero_frequency_pair(model(nonlocal(7 * 0.00467, 7 * 0.00467, WavevectorForm::transverse_only)),
                                        1.0, 300.0);
    CHECK(nl.te < 0.0);
    CHECK(nl.te > -1.0);
    // magnetic Drude: TE = (mu - 1)/(mu + 1)
    CHECK(zero_frequency_pair(model(gold, 110.0), 1.0, 300.0).te == doctest::Approx(109.0 / 111.0));
    CHECK_THROWS_AS(zero_frequency_pair(model(gold), 0.0, 300.0), DomainError);
}

TEST_CASE("nonlocal zero-frequency limit is the small-frequency limit") {
    const auto params = nonlocal(1.5 * 0.00467, 1.5 * 0.00467, WavevectorForm::full);
    const auto r0 = zero_frequency_pair(model(params), 2.0, 300.0);
    const auto rs = impedance_pair(nonlocal_impedances(params, 1.0, {2.0, 1e-7}, 300.0), {2.0, 1e-7});
    CHECK(rs.te == doctest::Approx(r0.te).epsilon(1e-4));
    CHECK(rs.tm == doctest::Approx(r0.tm).epsilon(1e-4));
}

TEST_CASE("ideal metal") {
    const auto r = ideal_metal_pair();
    CHECK(r.tm == 1.0);
    CHECK(r.te == -1.0);
    CHECK(r.tm * r.tm == 1.0);
    CHECK(r.te * r.te == 1.0);
}

TEST_CASE("passivity on random points for all models") {
    DielectricParams silica;
    silica.optical.oscillators = {{1.098, 13.39}, {1.703, 0.1237}};
    silica.include_conductivity = true;
    silica.conductivity = {29.7, 0.0};
    const std::vector<ResponseModel> models{
        model(gold),
        model(PlasmaParams{9.0}),
        model(silica),
        model(gold, 110.0),
        model(nonlocal(7 * 0.00467, 7 * 0.00467, WavevectorForm::transverse_only)),
        model(nonlocal(1.5 * 0.00467, 1.5 * 0.00467, WavevectorForm::full)),
        make_ideal_metal(),
    };
    std::mt19937_64 rng(107);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int checked = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto& m = models[static_cast<std::size_t>(i) % models.size()];
        const bool heavy = std::holds_alternative<NonlocalDrudeParams>(m.response);
        if (heavy && i % 7 != 0) {
            continue;  // keep the nonlocal quadrature share small
        }
        const double xi = u(rng) < 0.05 ? 0.0 : std::pow(10.0, -3.0 + 4.0 * u(rng));
        const double k = std::pow(10.0, -2.0 + 4.0 * u(rng));
        const FrequencyReflector refl(m, xi, 300.0);
        const auto r = refl.at(k);
        CHECK(r.tm * r.tm <= 1.0);
        CHECK(r.te * r.te <= 1.0);
        ++checked;
    }
    CHECK(checked > 5000);
}

TEST_CASE("full-form nonlocal static TM coefficient at small k_perp") {
    const auto params = nonlocal(1.5 * 0.00467, 1.5 * 0.00467, WavevectorForm::full);
    double prev = 1.0;
    for (double k : {1e-4, 1e-3, 1e-2, 1e-1, 1.0}) {
        const auto r = zero_frequency_pair(model(params), k, 300.0);
        CHECK(r.tm > 0.0);
        CHECK(r.tm <= prev);  // screening weakens as k_perp grows
        prev = r.tm;
    }
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "casimir/errors.hpp"
#include "casimir/units.hpp"

using namespace casimir;

TEST_CASE("effective temperature") {
    CHECK(effective_temperature(1.0) == doctest::Approx(1144.9).epsilon(1e-4));
    CHECK(effective_temperature(2.0) == effective_temperature(1.0) / 2.0);
    CHECK_THROWS_AS(effective_temperature(0.0), DomainError);
    CHECK_THROWS_AS(effective_temperature(-1.0), DomainError);
}

TEST_CASE("effective temperature times separation is constant") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> a(0.1, 10.0);
    const double reference = hbar_c / (2.0 * k_boltzmann);
    for (int i = 0; i < 200; ++i) {
        const double s = a(rng);
        CHECK(std::abs(effective_temperature(s) * s / reference - 1.0) < 1e-12);
    }
}

TEST_CASE("pressure conversion") {
    CHECK(pressure_to_pascal(1.0) == 0.1602177);
    CHECK(pressure_to_pascal(0.0) == 0.0);
    CHECK(pressure_to_pascal(-8.1148e-3) == doctest::Approx(-1.3001e-3).epsilon(1e-4));
    // elementary charge / 1e-18 to 7 digits
    CHECK(PhysicalConstants::pressure_conversion == doctest::Approx(1.602176634e-19 / 1e-18).epsilon(5e-7));
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> p(-1e3, 1e3);
    for (int i = 0; i < 200; ++i) {
        const double x = p(rng);
        CHECK(pascal_to_pressure(pressure_to_pascal(x)) == doctest::Approx(x).epsilon(1e-15));
    }
}

TEST_CASE("evaluation point domain") {
    CHECK_NOTHROW(make_point(1.0, 0.0));
    CHECK_THROWS_AS(make_point(0.0, 300.0), DomainError);
    CHECK_THROWS_AS(make_point(1.0, -1.0), DomainError);
}

TEST_CASE("regime labels") {
    const double t = effective_temperature(1.0);
    CHECK(classify_regime({1.0, t / 20}).regime == Regime::low);
    CHECK(classify_regime({1.0, t}).regime == Regime::intermediate);
    CHECK(classify_regime({1.0, 20 * t}).regime == Regime::high);
}

TEST_CASE("matsubara energies and conductivity conversion") {
    CHECK(matsubara_energy(300.0, 1) == doctest::Approx(0.162430).epsilon(1e-5));
    CHECK(matsubara_energy(300.0, 0) == 0.0);
    CHECK(conductivity_to_energy(29.7) == doctest::Approx(2.456e-13).epsilon(1e-3));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "halfline/dispersion.hpp"
#include "halfline/modulation.hpp"

using namespace halfline;

TEST_CASE("plateau branch carries the boundary-driven wave") {
    ModulationState m = kdv_modulation(0.375, 0.1);
    CHECK_FALSE(m.fan);
    CHECK(m.omega == doctest::Approx(0.375).epsilon(1e-13));
    CHECK(m.k == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(m.amplitude == doctest::Approx(1.0));
    // u = sin(k x - w t) on the plateau.
    const double t = 500.0, x = 0.1 * t;
    CHECK(m.evaluate(x, t) ==
          doctest::Approx(std::sin(0.5 * x - 0.375 * t)).epsilon(1e-12));

    ModulationState b = bbm_modulation(0.4, 0.2);
    CHECK_FALSE(b.fan);
    CHECK(b.k == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("fan branch satisfies dispersion and characteristic conditions") {
    const ModelCoefficients kdv = ModelCoefficients::kdv();
    const ModelCoefficients bbm = ModelCoefficients::bbm();
    // Fans open at c_g: 0.25 for KdV at 0.375 and 0.48 for BBM at 0.4.
    for (double xi : {0.3, 0.5, 0.8, 0.99}) {
        ModulationState m = kdv_modulation(0.375, xi);
        CHECK(m.fan);
        CHECK(std::abs(capital_omega(kdv, m.k).real() - m.omega) <= 1e-10);
        CHECK(std::abs(group_velocity(kdv, m.k).real() - xi) <= 1e-10);
    }
    for (double xi : {0.55, 0.7, 0.9, 0.99}) {
        ModulationState b = bbm_modulation(0.4, xi);
        CHECK(b.fan);
        CHECK(std::abs(omega(bbm, b.k).real() - b.omega) <= 1e-10);
        CHECK(std::abs(group_velocity(bbm, b.k).real() - xi) <= 1e-10);
    }
}

TEST_CASE("phase gradient reproduces the local wavenumber and frequency") {
    const double h = 1e-5;
    for (double xi : {0.1, 0.6}) {
        for (int model = 0; model < 2; ++model) {
            ModulationState m = model == 0 ? kdv_modulation(0.375, xi)
                                           : bbm_modulation(0.4, xi);
            const double t = 400.0, x = xi * t;
            const double kx =
                (m.phase_at(x + h, t) - m.phase_at(x - h, t)) / (2.0 * h);
            const double wt =
                (m.phase_at(x, t + h) - m.phase_at(x, t - h)) / (2.0 * h);
            CHECK(kx == doctest::Approx(m.k).epsilon(1e-5));
            CHECK(-wt == doctest::Approx(m.omega).epsilon(1e-5));
        }
    }
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(kdv_modulation(0.5, 0.3), SupercriticalUnsupported);
    CHECK_THROWS_AS(bbm_modulation(0.7, 0.3), SupercriticalUnsupported);
    CHECK_THROWS_AS(kdv_modulation(0.375, 1.5), StrategyDomain);
    CHECK_THROWS_AS(kdv_modulation(0.375, -0.1), StrategyDomain);
    // The amplitude is singular exactly on the group-velocity ray.
    CHECK_THROWS_AS(kdv_modulation(0.375, 0.25), AtGroupVelocity);
    CHECK_THROWS_AS(bbm_modulation(0.4, 0.48), AtGroupVelocity);
}

TEST_CASE("modulation reconstruction equals the long-time formulas") {
    // Plateau vs the traveling-wave region formula.
    for (double t : {200.0, 807.0}) {
        ModulationState m = kdv_modulation(0.375, 0.1);
        CHECK(std::abs(m.evaluate(0.1 * t, t) -
                       kdv_asymptotic(0.375, 0.1 * t, t).value) <= 1e-10);
        ModulationState b = bbm_modulation(0.4, 0.1);
        CHECK(std::abs(b.evaluate(0.1 * t, t) -
                       bbm_asymptotic(0.4, 0.1 * t, t).value) <= 1e-10);
    }
    // Fan vs the algebraic-decay region formula.
    for (double t : {200.0, 807.0}) {
        ModulationState m = kdv_modulation(0.375, 0.5);
        CHECK(std::abs(m.evaluate(0.5 * t, t) -
                       kdv_asymptotic(0.375, 0.5 * t, t).value) <= 1e-10);
        ModulationState b = bbm_modulation(0.4, 0.6);
        CHECK(std::abs(b.evaluate(0.6 * t, t) -
                       bbm_asymptotic(0.4, 0.6 * t, t).value) <= 1e-10);
    }
}

TEST_CASE("fan amplitude equals the algebraic-decay prefactor") {
    CHECK(kdv_modulation(0.375, 0.5).amplitude ==
          doctest::Approx(kdv_region2_prefactor(0.375, 0.5)).epsilon(1e-12));
    CHECK(bbm_modulation(0.4, 0.6).amplitude ==
          doctest::Approx(bbm_region2_prefactor(0.4, 0.6)).epsilon(1e-12));
}

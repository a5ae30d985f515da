#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "halfline/fokas.hpp"
#include "halfline/oracle.hpp"

using namespace halfline;

namespace {

// Max |numeric - exact| over x in [0, x_hi].
double error_vs_exact(const OracleResult& res, double t, double x_hi,
                      double omega0, bool kdv) {
    const OracleSnapshot& snap = res.snapshots.back();
    double worst = 0.0;
    for (std::size_t i = 0; i < res.x.size(); i += 4) {
        if (res.x[i] > x_hi) break;
        const double exact =
            kdv ? kdv_exact(res.x[i], t, omega0).value
                : bbm_exact(res.x[i], t, omega0).value;
        worst = std::max(worst, std::abs(snap.u[i] - exact));
    }
    return worst;
}

}  // namespace

TEST_CASE("finite-difference weights reproduce the classical stencils") {
    std::vector<double> nodes{-2.0, -1.0, 0.0, 1.0, 2.0};
    std::vector<double> d1 = fd_weights(0.0, nodes, 1);
    const double expect1[5] = {1.0 / 12.0, -2.0 / 3.0, 0.0, 2.0 / 3.0,
                               -1.0 / 12.0};
    std::vector<double> d2 = fd_weights(0.0, nodes, 2);
    const double expect2[5] = {-1.0 / 12.0, 4.0 / 3.0, -5.0 / 2.0, 4.0 / 3.0,
                               -1.0 / 12.0};
    for (int j = 0; j < 5; ++j) {
        CHECK(d1[j] == doctest::Approx(expect1[j]).epsilon(1e-13));
        CHECK(d2[j] == doctest::Approx(expect2[j]).epsilon(1e-13));
    }
    // Weights scale like h^{-m}.
    std::vector<double> scaled{-0.4, -0.2, 0.0, 0.2, 0.4};
    std::vector<double> d1s = fd_weights(0.0, scaled, 1);
    for (int j = 0; j < 5; ++j) {
        CHECK(d1s[j] == doctest::Approx(expect1[j] / 0.2).epsilon(1e-12));
    }
}

TEST_CASE("grid parameter validation") {
    OracleGrid g;
    g.nx = 32;
    CHECK_THROWS_AS(g.validate(), StabilityViolation);
    g = OracleGrid{};
    g.dt = 2.0;
    CHECK_THROWS_AS(g.validate(), StabilityViolation);
    g = OracleGrid{};
    g.sponge_width = 50.0;
    CHECK_THROWS_AS(g.validate(), StabilityViolation);
}

TEST_CASE("runs refuse to outlive the usable domain") {
    OracleGrid g;
    g.x_max = 20.0;
    g.sponge_width = 4.0;
    CHECK_THROWS_AS(run_kdv(0.375, g, 30.0), FrontExitedDomain);
    CHECK_THROWS_AS(run_bbm(0.4, g, 30.0), FrontExitedDomain);
}

TEST_CASE("boundary value is honored through the time integration") {
    OracleGrid g;
    g.x_max = 20.0;
    g.nx = 512;
    g.dt = 0.01;
    g.sponge_width = 4.0;
    OracleResult k = run_kdv(0.375, g, 8.0);
    CHECK(k.snapshots.back().u[0] ==
          doctest::Approx(-std::sin(0.375 * 8.0)).epsilon(1e-9));
    OracleResult b = run_bbm(0.4, g, 8.0);
    CHECK(b.snapshots.back().u[0] ==
          doctest::Approx(-std::sin(0.4 * 8.0)).epsilon(1e-6));
}

TEST_CASE("solutions remain bounded by the forcing amplitude scale") {
    OracleGrid g;
    g.x_max = 25.0;
    g.nx = 640;
    g.dt = 0.01;
    g.sponge_width = 5.0;
    for (int model = 0; model < 2; ++model) {
        OracleResult r = model == 0 ? run_kdv(0.375, g, 15.0, {5.0, 10.0})
                                    : run_bbm(0.4, g, 15.0, {5.0, 10.0});
        REQUIRE(r.snapshots.size() == 3);
        for (const OracleSnapshot& s : r.snapshots) {
            double amp = 0.0;
            for (double v : s.u) amp = std::max(amp, std::abs(v));
            CHECK(amp <= 1.5);
        }
    }
}

TEST_CASE("grid convergence toward the exact evaluator") {
    // Fourth-order stencils: halving dx (with dt ~ dx^2 so the second-order
    // time error stays subdominant) should cut the error by about 16; we
    // require at least 8 within a 30% margin.
    const double t = 5.0;
    OracleGrid coarse;
    coarse.x_max = 20.0;
    coarse.nx = 161;
    coarse.dt = 0.02;
    coarse.sponge_width = 5.0;
    OracleGrid fine = coarse;
    fine.nx = 321;
    fine.dt = 0.005;

    const double kdv_coarse =
        error_vs_exact(run_kdv(0.375, coarse, t), t, 10.0, 0.375, true);
    const double kdv_fine =
        error_vs_exact(run_kdv(0.375, fine, t), t, 10.0, 0.375, true);
    CHECK(kdv_coarse / kdv_fine >= 8.0 * 0.7);

    const double bbm_coarse =
        error_vs_exact(run_bbm(0.4, coarse, t), t, 10.0, 0.4, false);
    const double bbm_fine =
        error_vs_exact(run_bbm(0.4, fine, t), t, 10.0, 0.4, false);
    CHECK(bbm_coarse / bbm_fine >= 8.0 * 0.7);
}

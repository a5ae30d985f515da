#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "halfline/dispersion.hpp"

using namespace halfline;

namespace {

const double kPi = std::acos(-1.0);

Complex characteristic_poly(const ModelCoefficients& c, int n, double w0,
                            Complex k) {
    return capital_omega(c, k) + Complex(n * w0) * (1.0 + c.a_m2 * k * k);
}

}  // namespace

TEST_CASE("preset dispersion relations") {
    const ModelCoefficients kdv = ModelCoefficients::kdv();
    const ModelCoefficients bbm = ModelCoefficients::bbm();
    CHECK(capital_omega(kdv, 0.5).real() == doctest::Approx(0.375).epsilon(1e-14));
    CHECK(capital_omega(kdv, 0.5).imag() == doctest::Approx(0.0));
    CHECK(omega(bbm, 1.0).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(group_velocity(kdv, 0.5).real() ==
          doctest::Approx(1.0 - 3.0 * 0.25).epsilon(1e-14));
    // BBM w'(k) = (1 - k^2)/(1 + k^2)^2
    CHECK(group_velocity(bbm, 0.5).real() ==
          doctest::Approx(0.75 / (1.25 * 1.25)).epsilon(1e-13));
}

TEST_CASE("critical frequencies of the two named models") {
    CHECK(critical_frequencies(ModelCoefficients::kdv()).omega_cr_plus ==
          doctest::Approx(2.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-13));
    CHECK(critical_frequencies(ModelCoefficients::bbm()).omega_cr_plus ==
          doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("dispersion pole detection") {
    CHECK_THROWS_AS(omega(ModelCoefficients::bbm(), Complex(0.0, 1.0)),
                    PoleOfDispersion);
}

TEST_CASE("coefficient sign constraints") {
    ModelCoefficients bad = ModelCoefficients::kdv();
    bad.a3 = 1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = ModelCoefficients::bbm();
    bad.a_m2 = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("closed-form roots match companion matrix over random draws") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::uniform_real_distribution<double> pos(0.2, 2.0);
    std::uniform_int_distribution<int> harm(1, 3);
    std::bernoulli_distribution flip(0.5);

    for (int family = 0; family < 2; ++family) {
        for (int draw = 0; draw < 1000; ++draw) {
            ModelCoefficients c;
            if (family == 0) {
                c = {0.0, coef(rng), coef(rng), coef(rng), -pos(rng)};
            } else {
                c = {pos(rng), coef(rng), coef(rng), coef(rng), 0.0};
            }
            const double w0 = pos(rng);
            const int n = flip(rng) ? harm(rng) : -harm(rng);

            RootSet rs;
            std::vector<Complex> comp;
            try {
                rs = characteristic_roots(c, n, w0);
                comp = characteristic_roots_companion(c, n, w0);
            } catch (const HalflineError&) {
                continue;  // degenerate draw (e.g. vanishing polynomial)
            }
            REQUIRE(rs.roots.size() == comp.size());

            // Residual bound on the closed-form roots.
            for (const ClassifiedRoot& r : rs.roots) {
                const double res = std::abs(
                    characteristic_poly(c, n, w0, r.value));
                const double mag = 1.0 + std::abs(r.value);
                CHECK(res <= 1e-8 * mag * mag * mag);
            }

            // Greedy matching of the two root multisets.
            std::vector<bool> used(comp.size(), false);
            for (const ClassifiedRoot& r : rs.roots) {
                double best = 1e300;
                std::size_t best_j = 0;
                for (std::size_t j = 0; j < comp.size(); ++j) {
                    if (used[j]) continue;
                    const double d = std::abs(r.value - comp[j]);
                    if (d < best) {
                        best = d;
                        best_j = j;
                    }
                }
                used[best_j] = true;
                CHECK(best <= 1e-8 * (1.0 + std::abs(r.value)));
            }
        }
    }
}

TEST_CASE("radiating-root selection properties over random draws") {
    std::mt19937 rng(7151623);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::uniform_real_distribution<double> pos(0.2, 2.0);
    for (int family = 0; family < 2; ++family) {
        for (int draw = 0; draw < 500; ++draw) {
            ModelCoefficients c;
            if (family == 0) {
                c = {0.0, coef(rng), coef(rng), coef(rng), -pos(rng)};
            } else {
                c = {pos(rng), coef(rng), coef(rng), coef(rng), 0.0};
            }
            const double w0 = pos(rng);
            RootSet rs;
            try {
                rs = characteristic_roots(c, -1, w0);
            } catch (const HalflineError&) {
                continue;
            }
            // Exactly one radiating root, by construction of k0_index.
            int on_dplus = 0;
            for (const ClassifiedRoot& r : rs.roots) {
                if (r.location == RootLocation::OnDPlusBoundary) ++on_dplus;
            }
            CHECK(on_dplus == 1);
            const ClassifiedRoot& k0 = rs.k0();
            if (std::abs(k0.value.imag()) < 1e-12) {
                CHECK(group_velocity(c, k0.value).real() >= -1e-10);
            } else {
                CHECK(k0.value.imag() > 0.0);
            }
        }
    }
}

TEST_CASE("root sets of real-coefficient models are conjugation symmetric") {
    for (const ModelCoefficients& c :
         {ModelCoefficients::kdv(), ModelCoefficients::bbm()}) {
        for (double w0 : {0.2, 0.375, 0.6, 1.0}) {
            RootSet rs = characteristic_roots(c, -1, w0);
            for (const ClassifiedRoot& r : rs.roots) {
                double best = 1e300;
                for (const ClassifiedRoot& s : rs.roots) {
                    best = std::min(best,
                                    std::abs(std::conj(r.value) - s.value));
                }
                CHECK(best <= 1e-10);
            }
        }
    }
}

TEST_CASE("indicator flips sign under conjugation") {
    for (const ModelCoefficients& c :
         {ModelCoefficients::kdv(), ModelCoefficients::bbm()}) {
        for (double re : {-1.2, -0.3, 0.4, 1.5}) {
            for (double im : {-0.9, -0.1, 0.2, 0.8}) {
                const Complex k(re, im);
                const double a = region_indicator(c, k).indicator;
                const double b =
                    region_indicator(c, std::conj(k)).indicator;
                CHECK(std::abs(a + b) <= 1e-12 * (1.0 + std::abs(a)));
            }
        }
    }
}

TEST_CASE("membership of known spectral points") {
    const ModelCoefficients kdv = ModelCoefficients::kdv();
    // k0 = 0.5 is a boundary root for omega0 = 0.375, harmonic -1.
    RootSet rs = characteristic_roots(kdv, -1, 0.375);
    CHECK(std::abs(rs.k0().value - Complex(0.5, 0.0)) <= 1e-12);
    CHECK(rs.k0().location == RootLocation::OnDPlusBoundary);

    // For large |k|, Re(i Omega) ~ |k|^3 sin(3 arg k): the ray arg k = -pi/6
    // lies inside D- and arg k = pi/2 inside D+.
    CHECK(region_indicator(kdv, 2.0 * std::exp(Complex(0.0, -kPi / 6.0)))
              .membership == Membership::DMinus);
    CHECK(region_indicator(kdv, Complex(0.0, 2.0)).membership ==
          Membership::DPlus);
}

TEST_CASE("general family falls back to companion roots") {
    ModelCoefficients c{0.5, 0.1, -1.0, 0.2, -0.8};  // both a_m2>0 and a3<0
    c.validate();
    CHECK_FALSE(c.covered_family());
    RootSet rs = characteristic_roots(c, -1, 0.7);
    CHECK(rs.roots.size() == 3);
    CHECK_THROWS_AS(critical_frequencies(c), UncoveredFamily);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "halfline/dnmap.hpp"

using namespace halfline;

TEST_CASE("sinusoidal preset Fourier coefficients") {
    FourierBoundary fb = FourierBoundary::sin_preset(0.375);
    // sin(-w0 t) = a_1 e^{i w0 t} + a_{-1} e^{-i w0 t} with
    // a_1 = -1/(2i) = i/2, a_{-1} = 1/(2i) = -i/2.
    CHECK(std::abs(fb.coefficients.at(1) - Complex(0.0, 0.5)) <= 1e-15);
    CHECK(std::abs(fb.coefficients.at(-1) - Complex(0.0, -0.5)) <= 1e-15);
    CHECK(fb.is_real());
}

TEST_CASE("boundary derivative series reconstructs the datum at j = 0") {
    for (const ModelCoefficients& c :
         {ModelCoefficients::kdv(), ModelCoefficients::bbm()}) {
        for (double w0 : {0.25, 0.375, 0.4, 1.0}) {
            DNMapResult dn = dn_coefficients(c, FourierBoundary::sin_preset(w0));
            for (double t : {0.0, 1.7, 10.0, 123.4}) {
                Complex g = boundary_derivative_series(dn, 0, t);
                CHECK(std::abs(g - Complex(std::sin(-w0 * t))) <= 1e-12);
            }
        }
    }
}

TEST_CASE("first-derivative coefficients are i k0 a_n") {
    const double w0 = 0.375;
    DNMapResult dn = dn_coefficients(ModelCoefficients::kdv(),
                                     FourierBoundary::sin_preset(w0));
    REQUIRE(dn.harmonics.size() == 2);
    CHECK(dn.real_data);
    for (const HarmonicDN& h : dn.harmonics) {
        CHECK(std::abs(h.b - Complex(0.0, 1.0) * h.k0 * h.a) <= 1e-14);
        // Third-order family also carries the second-derivative coefficient.
        CHECK(h.has_c);
        CHECK(std::abs(h.c - (-h.k0 * h.k0 * h.a)) <= 1e-14);
    }
    // Harmonic n = -1 radiates k0 = +1/2: b = i (1/2)(-i/2) = 1/4.
    const HarmonicDN& hm = dn.harmonics.front();
    CHECK(hm.n == -1);
    CHECK(std::abs(hm.k0 - Complex(0.5, 0.0)) <= 1e-12);
    CHECK(std::abs(hm.b - Complex(0.25, 0.0)) <= 1e-12);
}

TEST_CASE("real data gives conjugate-paired harmonics") {
    for (const ModelCoefficients& c :
         {ModelCoefficients::kdv(), ModelCoefficients::bbm()}) {
        for (double w0 : {0.3, 0.6, 1.1}) {
            DNMapResult dn = dn_coefficients(c, FourierBoundary::sin_preset(w0));
            REQUIRE(dn.harmonics.size() == 2);
            const HarmonicDN& m = dn.harmonics[0];
            const HarmonicDN& p = dn.harmonics[1];
            CHECK(m.n == -p.n);
            CHECK(std::abs(m.a - std::conj(p.a)) <= 1e-14);
            CHECK(std::abs(m.b - std::conj(p.b)) <= 1e-12);
            // The boundary-derivative series is then real valued.
            for (double t : {0.3, 5.0, 40.0}) {
                CHECK(std::abs(boundary_derivative_series(dn, 1, t).imag()) <=
                      1e-12);
            }
        }
    }
}

TEST_CASE("asymptotic series at x = 0 matches the boundary series") {
    DNMapResult dn = dn_coefficients(ModelCoefficients::bbm(),
                                     FourierBoundary::sin_preset(0.4));
    for (double t : {0.5, 12.0, 200.0}) {
        CHECK(std::abs(asymptotic_solution_series(dn, 0.0, t) -
                       boundary_derivative_series(dn, 0, t)) <= 1e-13);
    }
}

TEST_CASE("supercritical harmonics decay in x") {
    DNMapResult dn = dn_coefficients(ModelCoefficients::kdv(),
                                     FourierBoundary::sin_preset(0.6));
    for (const HarmonicDN& h : dn.harmonics) CHECK(h.k0.imag() > 0.0);
    const double decay = dn.harmonics.front().k0.imag();
    auto envelope = [&](double x) {
        double best = 0.0;
        for (double t = 0.0; t < 20.0; t += 0.25) {
            best = std::max(best,
                            std::abs(asymptotic_solution_series(dn, x, t)));
        }
        return best;
    };
    for (double x : {3.0, 8.0}) {
        CHECK(envelope(x) ==
              doctest::Approx(std::exp(-decay * x)).epsilon(0.05));
    }
}

TEST_CASE("second-order family harmonic without a periodic D-N relation") {
    // A2 + n w0 A_{-2} = 0 at n = -1 for A_{-2} = 1, A2 = w0.
    const double w0 = 0.375;
    ModelCoefficients c{1.0, 0.0, -1.0, w0, 0.0};
    c.validate();
    CHECK_THROWS_AS(dn_coefficients(c, FourierBoundary::sin_preset(w0)),
                    UncoveredHarmonic);
    // Supplying u0'(0) resolves the harmonic through compatibility.
    DNMapResult dn =
        dn_coefficients(c, FourierBoundary::sin_preset(w0), 0.25);
    Complex sum{0.0, 0.0};
    for (const HarmonicDN& h : dn.harmonics) sum += h.b;
    CHECK(std::abs(sum - Complex(0.25, 0.0)) <= 1e-12);
}

TEST_CASE("degenerate second-order model has the explicit solution") {
    // A1 = 0 and A2 + A0 A_{-2} = 0.
    ModelCoefficients c{1.0, 0.3, 0.0, -0.3, 0.0};
    c.validate();
    auto u0 = [](double x) { return Complex(std::exp(-2.0 * x)); };
    auto g0 = [](double t) { return Complex(std::cos(0.7 * t)); };
    // Initial condition and boundary condition are both honored.
    for (double x : {0.0, 0.5, 2.0}) {
        CHECK(std::abs(degenerate_explicit_solution(c, u0, g0, x, 0.0) -
                       u0(x)) <= 1e-12);
    }
    for (double t : {0.0, 1.3, 9.0}) {
        CHECK(std::abs(degenerate_explicit_solution(c, u0, g0, 0.0, t) -
                       g0(t)) <= 1e-12);
    }
}

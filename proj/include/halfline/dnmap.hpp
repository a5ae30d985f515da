#ifndef HALFLINE_DNMAP_HPP
#define HALFLINE_DNMAP_HPP

#include <functional>
#include <map>
#include <optional>

#include "halfline/dispersion.hpp"

// Generalized Dirichlet-to-Neumann map for asymptotically time-periodic
// Dirichlet data, the resulting boundary-derivative series and the
// asymptotic solution series.

namespace halfline {

// Finitely supported Fourier data for the boundary datum
//   g0(t) ~ sum_n a_n e^{i n omega0 t}.
struct FourierBoundary {
    double omega0 = 0.0;
    std::map<int, Complex> coefficients;

    // Sinusoidal wavemaker preset g0(t) = sin(-omega0 t):
    // a_1 = -1/(2i), a_{-1} = +1/(2i).
    static FourierBoundary sin_preset(double omega0);

    // True iff a_{-n} = conj(a_n) for all n (real-valued datum).
    bool is_real(double tol = 1e-12) const;
};

// One harmonic of the D-N map: b_n = i k0(n) a_n and, for the third-order
// family, c_n = -k0(n)^2 a_n (second derivative coefficient).
struct HarmonicDN {
    int n = 0;
    Complex a;
    Complex k0;
    Complex b;
    Complex c;
    bool has_c = false;
};

struct DNMapResult {
    double omega0 = 0.0;
    std::vector<HarmonicDN> harmonics;  // ascending n, only nonzero a_n
    bool real_data = false;
};

// Computes the D-N map for every harmonic with a_n != 0.  For a second-order
// family harmonic with A2 + n omega0 A_{-2} = 0 the relation ceases to be
// determined by time-periodicity; if the caller supplies u0_prime0 = u0'(0)
// the compatibility value b_{n*} = u0'(0) - sum_{m != n*} b_m is used,
// otherwise UncoveredHarmonic is thrown.
DNMapResult dn_coefficients(const ModelCoefficients& c,
                            const FourierBoundary& boundary,
                            std::optional<double> u0_prime0 = std::nullopt);

// sum_n (i k0(n))^j a_n e^{i n omega0 t}: leading-order asymptotics of the
// j-th boundary derivative d^j u / dx^j (0, t).  j = 0 reconstructs g0.
Complex boundary_derivative_series(const DNMapResult& result, int j, double t);

// sum_n a_n e^{i k0(n) x + i n omega0 t}: superposition of radiating waves.
Complex asymptotic_solution_series(const DNMapResult& result, double x,
                                   double t);

// Explicit solution for the degenerate second-order case
// A1 = A2 + A0 A_{-2} = 0 (with A_{-2} > 0):
//   u = e^{i A0 t} u0(x) + [g0(t) - e^{i A0 t} g0(0)] e^{-x / sqrt(A_{-2})}.
Complex degenerate_explicit_solution(const ModelCoefficients& c,
                                     const std::function<Complex(double)>& u0,
                                     const std::function<Complex(double)>& g0,
                                     double x, double t);

}  // namespace halfline

#endif

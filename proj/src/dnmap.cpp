#include "halfline/dnmap.hpp"

#include <cmath>

namespace halfline {

namespace {
const Complex kI(0.0, 1.0);
}

FourierBoundary FourierBoundary::sin_preset(double omega0) {
    FourierBoundary fb;
    fb.omega0 = omega0;
    fb.coefficients[1] = -1.0 / (2.0 * kI);  // = i/2
    fb.coefficients[-1] = 1.0 / (2.0 * kI);  // = -i/2
    return fb;
}

bool FourierBoundary::is_real(double tol) const {
    for (const auto& [n, a] : coefficients) {
        Complex mirror(0.0, 0.0);
        auto it = coefficients.find(-n);
        if (it != coefficients.end()) mirror = it->second;
        if (std::abs(mirror - std::conj(a)) > tol * (1.0 + std::abs(a)))
            return false;
    }
    return true;
}

DNMapResult dn_coefficients(const ModelCoefficients& c,
                            const FourierBoundary& boundary,
                            std::optional<double> u0_prime0) {
    c.validate();
    if (!c.covered_family())
        throw UncoveredFamily(
            "dn_coefficients: requires a covered coefficient family");

    DNMapResult result;
    result.omega0 = boundary.omega0;
    result.real_data = boundary.is_real();

    int uncovered_index = -1;  // at most one harmonic can be n*
    for (const auto& [n, a_n] : boundary.coefficients) {
        if (a_n == Complex(0.0, 0.0)) continue;
        HarmonicDN h;
        h.n = n;
        h.a = a_n;
        if (c.second_order_family() &&
            std::abs(c.a2 + n * boundary.omega0 * c.a_m2) <=
                1e-13 * (std::abs(c.a2) + std::abs(c.a_m2) + 1.0) &&
            c.a1 != 0.0 && n != 0) {
            // n* = -A2/(omega0 A_{-2}): time-periodicity does not determine
            // b_{n*}; defer to the u0'(0) compatibility hook below.
            if (!u0_prime0)
                throw UncoveredHarmonic(
                    "dn_coefficients: harmonic n = " + std::to_string(n) +
                    " has A2 + n omega0 A_{-2} = 0; supply u0'(0) for the "
                    "compatibility value");
            uncovered_index = static_cast<int>(result.harmonics.size());
            result.harmonics.push_back(h);  // b filled in after the loop
            continue;
        }
        const RootSet rs = characteristic_roots(c, n, boundary.omega0);
        h.k0 = rs.k0().value;
        h.b = kI * h.k0 * a_n;
        if (c.third_order_family()) {
            h.c = -h.k0 * h.k0 * a_n;
            h.has_c = true;
        }
        result.harmonics.push_back(h);
    }

    if (uncovered_index >= 0) {
        // b_{n*} = u0'(0) - sum of the determined Neumann coefficients.
        Complex b_sum(0.0, 0.0);
        for (int i = 0; i < static_cast<int>(result.harmonics.size()); ++i)
            if (i != uncovered_index) b_sum += result.harmonics[i].b;
        result.harmonics[uncovered_index].b = *u0_prime0 - b_sum;
    }
    return result;
}

Complex boundary_derivative_series(const DNMapResult& result, int j,
                                   double t) {
    Complex sum(0.0, 0.0);
    for (const auto& h : result.harmonics) {
        Complex factor(1.0, 0.0);
        for (int m = 0; m < j; ++m) factor *= kI * h.k0;
        sum += factor * h.a * std::exp(kI * static_cast<double>(h.n) *
                                       result.omega0 * t);
    }
    return sum;
}

Complex asymptotic_solution_series(const DNMapResult& result, double x,
                                   double t) {
    Complex sum(0.0, 0.0);
    for (const auto& h : result.harmonics)
        sum += h.a * std::exp(kI * (h.k0 * x + static_cast<double>(h.n) *
                                                   result.omega0 * t));
    return sum;
}

Complex degenerate_explicit_solution(const ModelCoefficients& c,
                                     const std::function<Complex(double)>& u0,
                                     const std::function<Complex(double)>& g0,
                                     double x, double t) {
    c.validate();
    if (!(c.a1 == 0.0 && c.a2 + c.a0 * c.a_m2 == 0.0 && c.a_m2 > 0.0))
        throw HalflineError(
            "degenerate_explicit_solution: requires A1 = A2 + A0 A_{-2} = 0 "
            "and A_{-2} > 0");
    const Complex rot = std::exp(kI * c.a0 * t);
    return rot * u0(x) +
           (g0(t) - rot * g0(0.0)) * std::exp(-x / std::sqrt(c.a_m2));
}

}  // namespace halfline

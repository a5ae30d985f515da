#include "halfline/dispersion.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace halfline {

namespace {

constexpr double kBoundaryTol = 1e-9;

// Coefficients of the characteristic polynomial
//   P(k) = A3 k^3 + (A2 + n w0 A_{-2}) k^2 - A1 k - A0 + n w0
// in descending-degree order c3 k^3 + c2 k^2 + c1 k + c0.
struct CharPoly {
    double c3, c2, c1, c0;
};

CharPoly char_poly(const ModelCoefficients& c, int n, double omega0) {
    const double nw = n * omega0;
    return {c.a3, c.a2 + nw * c.a_m2, -c.a1, nw - c.a0};
}

// Numerator of the group velocity; for real k its sign decides whether a
// real characteristic root lies on the boundary of D+ (>= 0) or D- (< 0).
double cg_numerator_real(const ModelCoefficients& c, double k) {
    return c.a_m2 * c.a3 * k * k * k * k +
           (3.0 * c.a3 + c.a_m2 * c.a1) * k * k +
           2.0 * (c.a2 + c.a_m2 * c.a0) * k - c.a1;
}

RootLocation classify_root(const ModelCoefficients& c, Complex k) {
    const double im_tol = kBoundaryTol * (1.0 + std::abs(k));
    if (k.imag() > im_tol) return RootLocation::OnDPlusBoundary;
    if (k.imag() < -im_tol) return RootLocation::OnDMinusBoundary;
    // Real root: both D+ and D- boundaries contain the real axis, so the
    // assignment follows the sign of the group velocity there.
    const double s = cg_numerator_real(c, k.real());
    const double scale = (std::abs(c.a_m2 * c.a3) + std::abs(c.a3) +
                          std::abs(c.a1) * (1.0 + c.a_m2) + std::abs(c.a2) +
                          std::abs(c.a_m2 * c.a0) + 1.0);
    const double s_tol = kBoundaryTol * scale * std::pow(1.0 + std::abs(k), 4);
    return s >= -s_tol ? RootLocation::OnDPlusBoundary
                       : RootLocation::OnDMinusBoundary;
}

// Cardano closed forms for c3 k^3 + c2 k^2 + c1 k + c0 with c3 != 0,
// written to reproduce the standard one-real/three-real/trigonometric
// branch structure literally (principal real cube roots, explicit
// conjugate pairing).
std::vector<ClassifiedRoot> cardano_roots(const CharPoly& cp) {
    const double a3 = cp.c3, a2 = cp.c2, a1 = cp.c1, a0 = cp.c0;
    const double p = (3.0 * a3 * a1 - a2 * a2) / (3.0 * a3 * a3);
    const double q =
        (2.0 * a2 * a2 * a2 - 9.0 * a3 * a2 * a1 + 27.0 * a3 * a3 * a0) /
        (27.0 * a3 * a3 * a3);
    const double shift = -a2 / (3.0 * a3);
    const double four_p3 = 4.0 * p * p * p;
    const double discriminant = -four_p3 - 27.0 * q * q;
    const double disc_scale =
        std::max({std::abs(four_p3), 27.0 * q * q, 1e-300});

    std::vector<ClassifiedRoot> out;
    if (std::abs(discriminant) <= 4e-12 * disc_scale) {
        if (std::abs(p) <= 1e-12 * (1.0 + std::abs(q))) {
            // Triple root.
            out.push_back({Complex(std::cbrt(-q) + shift, 0.0), 3});
        } else {
            // One simple root and one double root (the critical-frequency
            // configuration: the double root has zero group velocity).
            out.push_back({Complex(3.0 * q / p + shift, 0.0), 1});
            out.push_back({Complex(-1.5 * q / p + shift, 0.0), 2});
        }
    } else if (discriminant > 0.0) {
        // Three distinct real roots, trigonometric form.
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double arg =
            std::clamp(3.0 * q / (2.0 * p) * std::sqrt(-3.0 / p), -1.0, 1.0);
        const double theta = std::acos(arg);
        const double two_pi = 2.0 * M_PI;
        out.push_back({Complex(m * std::cos(theta / 3.0) + shift, 0.0), 1});
        out.push_back(
            {Complex(m * std::cos((theta - two_pi) / 3.0) + shift, 0.0), 1});
        out.push_back(
            {Complex(m * std::cos((theta + two_pi) / 3.0) + shift, 0.0), 1});
    } else {
        // One real root plus a conjugate pair.
        const double s = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
        const double cc = std::cbrt(-q / 2.0 + s);
        const double dd = std::cbrt(-q / 2.0 - s);
        out.push_back({Complex(cc + dd + shift, 0.0), 1});
        const double re = -(cc + dd) / 2.0 + shift;
        const double im = std::sqrt(3.0) / 2.0 * (cc - dd);
        out.push_back({Complex(re, im), 1});
        out.push_back({Complex(re, -im), 1});
    }
    return out;
}

std::vector<ClassifiedRoot> quadratic_roots(const CharPoly& cp) {
    // c2 k^2 + c1 k + c0 with c2 = A2 + n w0 A_{-2}, c1 = -A1, c0 = n w0 - A0.
    const double a = cp.c2, b = cp.c1, c0 = cp.c0;
    const double disc = b * b - 4.0 * a * c0;
    const double disc_scale = std::max({b * b, std::abs(4.0 * a * c0), 1e-300});
    std::vector<ClassifiedRoot> out;
    if (std::abs(disc) <= 4e-12 * disc_scale) {
        out.push_back({Complex(-b / (2.0 * a), 0.0), 2});
    } else if (disc > 0.0) {
        // Stable quadratic formula (avoid cancellation in one root).
        const double r = -(b + std::copysign(std::sqrt(disc), b)) / 2.0;
        out.push_back({Complex(r / a, 0.0), 1});
        out.push_back({Complex(c0 / r, 0.0), 1});
    } else {
        const double re = -b / (2.0 * a);
        const double im = std::sqrt(-disc) / (2.0 * a);
        out.push_back({Complex(re, im), 1});
        out.push_back({Complex(re, -im), 1});
    }
    return out;
}

bool quadratic_degenerate(const ModelCoefficients& c, const CharPoly& cp) {
    const double scale = std::abs(c.a2) + std::abs(c.a_m2) + 1.0;
    return std::abs(cp.c2) <= 1e-13 * scale;
}

void sort_roots(std::vector<ClassifiedRoot>& roots) {
    std::sort(roots.begin(), roots.end(),
              [](const ClassifiedRoot& a, const ClassifiedRoot& b) {
                  if (a.value.imag() != b.value.imag())
                      return a.value.imag() < b.value.imag();
                  return a.value.real() < b.value.real();
              });
}

}  // namespace

void ModelCoefficients::validate() const {
    if (a_m2 < 0.0)
        throw std::invalid_argument("ModelCoefficients: A_{-2} must be >= 0");
    if (a3 > 0.0)
        throw std::invalid_argument("ModelCoefficients: A_3 must be <= 0");
}

Complex omega(const ModelCoefficients& c, Complex k) {
    const Complex den = 1.0 + c.a_m2 * k * k;
    if (std::abs(den) <= 1e-13 * (1.0 + std::abs(c.a_m2) * std::norm(k)))
        throw PoleOfDispersion("omega: 1 + A_{-2} k^2 vanishes at this k");
    return (-c.a0 - c.a1 * k + c.a2 * k * k + c.a3 * k * k * k) / den;
}

Complex capital_omega(const ModelCoefficients& c, Complex k) {
    return c.a3 * k * k * k + c.a2 * k * k - c.a1 * k - c.a0;
}

Complex group_velocity(const ModelCoefficients& c, Complex k) {
    const Complex den = 1.0 + c.a_m2 * k * k;
    if (std::abs(den) <= 1e-13 * (1.0 + std::abs(c.a_m2) * std::norm(k)))
        throw PoleOfDispersion(
            "group_velocity: 1 + A_{-2} k^2 vanishes at this k");
    const Complex num = c.a_m2 * c.a3 * k * k * k * k +
                        (3.0 * c.a3 + c.a_m2 * c.a1) * k * k +
                        2.0 * (c.a2 + c.a_m2 * c.a0) * k - c.a1;
    return num / (den * den);
}

IndicatorResult region_indicator(const ModelCoefficients& c, Complex k) {
    const Complex den = 1.0 + c.a_m2 * k * k;
    if (std::abs(den) <= 1e-13 * (1.0 + std::abs(c.a_m2) * std::norm(k)))
        throw PoleOfDispersion(
            "region_indicator: 1 + A_{-2} k^2 vanishes at this k");
    const Complex iw = Complex(0.0, 1.0) * capital_omega(c, k) / den;
    IndicatorResult res;
    res.indicator = iw.real();
    // Cubic-growth tolerance scaled by the denominator, so the test is
    // meaningful uniformly in |k|.
    const double tol =
        kBoundaryTol * std::pow(1.0 + std::abs(k), 3) / std::abs(den);
    const double im_tol = kBoundaryTol * (1.0 + std::abs(k));
    if (std::abs(res.indicator) <= tol)
        res.membership = Membership::Boundary;
    else if (k.imag() > im_tol && res.indicator < -tol)
        res.membership = Membership::DPlus;
    else if (k.imag() < -im_tol && res.indicator < -tol)
        res.membership = Membership::DMinus;
    else
        res.membership = Membership::Neither;
    return res;
}

std::vector<Complex> characteristic_roots_companion(const ModelCoefficients& c,
                                                    int n, double omega0) {
    const CharPoly cp = char_poly(c, n, omega0);
    std::vector<double> coeffs;  // monic companion, descending degree
    if (cp.c3 != 0.0) {
        coeffs = {cp.c2 / cp.c3, cp.c1 / cp.c3, cp.c0 / cp.c3};
    } else if (!quadratic_degenerate(c, cp)) {
        coeffs = {cp.c1 / cp.c2, cp.c0 / cp.c2};
    } else if (cp.c1 != 0.0) {
        return {Complex(-cp.c0 / cp.c1, 0.0)};
    } else {
        throw DegeneratePolynomial(
            "characteristic polynomial has no nonzero coefficients");
    }
    const int deg = static_cast<int>(coeffs.size());
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 0; i < deg; ++i) companion(0, i) = -coeffs[i];
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    std::vector<Complex> out;
    for (int i = 0; i < deg; ++i) out.push_back(solver.eigenvalues()[i]);
    std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
        if (a.imag() != b.imag()) return a.imag() < b.imag();
        return a.real() < b.real();
    });
    return out;
}

RootSet characteristic_roots(const ModelCoefficients& c, int n,
                             double omega0) {
    c.validate();
    const CharPoly cp = char_poly(c, n, omega0);
    RootSet rs;
    rs.harmonic = n;
    rs.omega0 = omega0;

    if (c.a_m2 == 0.0 && cp.c3 != 0.0) {
        rs.roots = cardano_roots(cp);
    } else if (cp.c3 == 0.0) {
        if (quadratic_degenerate(c, cp)) {
            if (cp.c1 == 0.0)
                throw DegeneratePolynomial(
                    "characteristic polynomial has no nonzero coefficients");
            rs.roots = {{Complex(-cp.c0 / cp.c1, 0.0), 1,
                         RootLocation::Interior}};
        } else {
            rs.roots = quadratic_roots(cp);
        }
    } else {
        // General family (A_{-2} > 0 and A_3 < 0): numeric solve with
        // duplicate clustering.
        for (Complex r : characteristic_roots_companion(c, n, omega0)) {
            bool merged = false;
            for (auto& existing : rs.roots) {
                if (std::abs(existing.value - r) <=
                    1e-7 * (1.0 + std::abs(r))) {
                    existing.multiplicity += 1;
                    merged = true;
                    break;
                }
            }
            if (!merged) rs.roots.push_back({r, 1, RootLocation::Interior});
        }
    }

    for (auto& root : rs.roots) root.location = classify_root(c, root.value);
    sort_roots(rs.roots);
    rs.k0_index = select_radiating_root(rs, c);
    return rs;
}

CriticalFrequencies critical_frequencies(const ModelCoefficients& c) {
    c.validate();
    CriticalFrequencies cf;
    if (c.third_order_family()) {
        const double p =
            -(3.0 * c.a1 * c.a3 + c.a2 * c.a2) / (3.0 * c.a3 * c.a3);
        cf.omega_bar = (-2.0 * c.a2 * c.a2 * c.a2 -
                        9.0 * c.a1 * c.a2 * c.a3 +
                        27.0 * c.a3 * c.a3 * c.a0) /
                       (27.0 * c.a3 * c.a3);
        if (p >= 0.0) {
            // No real double-root bifurcation; the endpoints coincide.
            cf.degenerate = true;
            cf.omega_cr_minus = cf.omega_cr_plus = cf.omega_bar;
        } else {
            const double half_width =
                -2.0 * c.a3 * std::sqrt(std::pow(-p / 3.0, 3));
            cf.omega_cr_plus = cf.omega_bar + half_width;   // = wbar - 2 A3 (...)
            cf.omega_cr_minus = cf.omega_bar - half_width;  // = wbar + 2 A3 (...)
            cf.degenerate = half_width == 0.0;
        }
    } else if (c.second_order_family()) {
        const double mid = (c.a0 * c.a_m2 - c.a2) / (2.0 * c.a_m2);
        const double rad = (c.a2 + c.a0 * c.a_m2) * (c.a2 + c.a0 * c.a_m2) +
                           c.a1 * c.a1 * c.a_m2;
        cf.omega_bar = mid;
        const double half_width = std::sqrt(rad) / (2.0 * c.a_m2);
        cf.omega_cr_minus = mid - half_width;
        cf.omega_cr_plus = mid + half_width;
        cf.degenerate = half_width == 0.0;
    } else {
        throw UncoveredFamily(
            "critical_frequencies: requires third-order (A_{-2}=0, A_3<0) or "
            "second-order (A_{-2}>0, A_3=0) family");
    }
    return cf;
}

int select_radiating_root(const RootSet& rs, const ModelCoefficients& c) {
    (void)c;
    int found = -1;
    int count = 0;
    for (size_t i = 0; i < rs.roots.size(); ++i) {
        if (rs.roots[i].location == RootLocation::OnDPlusBoundary) {
            found = static_cast<int>(i);
            ++count;
        }
    }
    if (count != 1)
        throw NoUniqueRadiatingRoot(
            "select_radiating_root: found " + std::to_string(count) +
            " candidates on the D+ boundary (expected exactly 1)");
    return found;
}

}  // namespace halfline

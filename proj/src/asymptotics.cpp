#include "halfline/asymptotics.hpp"

#include <cmath>

#include "halfline/dispersion.hpp"

namespace halfline {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr Complex kI{0.0, 1.0};

const double kKdVCritical = 2.0 / (3.0 * std::sqrt(3.0));
const double kBBMCritical = 0.5;

double big_xi(double xi) { return std::sqrt(8.0 * xi + 1.0); }

void require(bool ok, const char* what) {
    if (!ok) throw StrategyDomain(what);
}

}  // namespace

std::string to_string(RegionName name) {
    switch (name) {
        case RegionName::I: return "I";
        case RegionName::IIa: return "IIa";
        case RegionName::IIb: return "IIb";
        case RegionName::II: return "II";
        case RegionName::III: return "III";
        case RegionName::IVa: return "IVa";
        case RegionName::IVb: return "IVb";
        case RegionName::IVc: return "IVc";
    }
    return "?";
}

SaddleSet kdv_saddles(double xi) {
    require(xi > 0.0, "saddle location requires xi > 0");
    SaddleSet s;
    s.xi = xi;
    const double inner = (1.0 - xi) / 3.0;
    Complex rho1 = (inner >= 0.0) ? Complex{std::sqrt(inner), 0.0}
                                  : Complex{0.0, std::sqrt(-inner)};
    s.saddles = {rho1, -rho1};
    // phi(k) = i(k xi - Omega(k)), Omega = k - k^3, so phi'' = 6 i k.
    s.second_derivatives = {6.0 * kI * rho1, -6.0 * kI * rho1};
    return s;
}

SaddleSet bbm_saddles(double xi) {
    require(xi > 0.0, "saddle location requires xi > 0");
    SaddleSet s;
    s.xi = xi;
    const double Xi = big_xi(xi);
    const double inner1 = -1.0 - (1.0 - Xi) / (2.0 * xi);
    const double inner2 = -1.0 - (1.0 + Xi) / (2.0 * xi);
    auto root = [](double v) {
        return (v >= 0.0) ? Complex{std::sqrt(v), 0.0}
                          : Complex{0.0, std::sqrt(-v)};
    };
    Complex rho1 = root(inner1);
    Complex rho3 = root(inner2);
    s.saddles = {rho1, -rho1, rho3, -rho3};
    // phi = i(k xi - w(k)), w = k/(1+k^2): phi'' = -i w'' with
    // w'' = (2k^3 - 6k)/(1+k^2)^3.
    auto dd = [](Complex k) {
        Complex d = 1.0 + k * k;
        return -kI * (2.0 * k * k * k - 6.0 * k) / (d * d * d);
    };
    s.second_derivatives = {dd(rho1), dd(-rho1), dd(rho3), dd(-rho3)};
    return s;
}

Complex kdv_k3(double omega0) {
    require(omega0 > 0.0, "radiating wavenumber requires omega0 > 0");
    if (omega0 < kKdVCritical) {
        // Subcritical trigonometric form; real root of k^3 - k + omega0 = 0
        // in (0, 1/sqrt3).
        const double alpha =
            kPi - std::atan(std::sqrt(12.0 - 81.0 * omega0 * omega0) /
                            (9.0 * omega0));
        const double c = std::cos(alpha / 3.0);
        const double s = std::sin(alpha / 3.0);
        return Complex{-c / std::sqrt(3.0) + s, 0.0};
    }
    // Supercritical surd form; complex root with positive imaginary part.
    const double r1 =
        9.0 * omega0 - std::sqrt(81.0 * omega0 * omega0 - 12.0);
    const double cr = std::cbrt(r1);
    const double re = 1.0 / (std::pow(2.0, 2.0 / 3.0) *
                             std::pow(3.0, 1.0 / 3.0) * cr) +
                      cr / (std::pow(2.0, 4.0 / 3.0) *
                            std::pow(3.0, 2.0 / 3.0));
    const double im = std::pow(3.0, 1.0 / 6.0) /
                          (std::pow(2.0, 2.0 / 3.0) * cr) -
                      cr / (std::pow(2.0, 4.0 / 3.0) *
                            std::pow(3.0, 1.0 / 6.0));
    return Complex{re, im};
}

Complex bbm_k0(double omega0) {
    require(omega0 > 0.0, "radiating wavenumber requires omega0 > 0");
    if (omega0 < kBBMCritical) {
        const double d = std::sqrt(1.0 - 4.0 * omega0 * omega0);
        return Complex{(1.0 - d) / (2.0 * omega0), 0.0};
    }
    const double d = std::sqrt(4.0 * omega0 * omega0 - 1.0);
    return Complex{1.0 / (2.0 * omega0), d / (2.0 * omega0)};
}

double kdv_cg_curve(double omega0) {
    Complex k3 = kdv_k3(omega0);
    require(k3.imag() == 0.0, "group-velocity curve is subcritical only");
    return 1.0 - 3.0 * k3.real() * k3.real();
}

double kdv_l1(double omega0, double xi) {
    require(omega0 > kKdVCritical, "l1 is defined for supercritical omega0");
    require(xi > 0.0 && xi < 1.0, "l1 is defined for 0 < xi < 1");
    // p1 = sqrt((2+xi)/6) cos(phi/3) is the positive abscissa where the
    // steepest-descent path through rho1 meets 3p^2 - q^2 = 1; phi in
    // (pi/2, pi) is fixed by 8p^3 - (2+xi)p = -(2/9) sqrt(3(1-xi)) (1-xi).
    const double m = (2.0 + xi) / 6.0;
    const double rhs = -(2.0 / 9.0) * std::sqrt(3.0 * (1.0 - xi)) *
                       (1.0 - xi) / (2.0 * m * std::sqrt(m));
    const double phi = std::acos(std::max(-1.0, std::min(1.0, rhs)));
    const double p1 = std::sqrt(m) * std::cos(phi / 3.0);
    return kdv_k3(omega0).real() - p1;
}

double kdv_l2(double omega0, double xi) {
    require(omega0 > kKdVCritical, "l2 is defined for supercritical omega0");
    require(xi > 1.0, "l2 is defined for xi > 1");
    return kdv_k3(omega0).real() -
           std::sqrt(2.0 + xi) / (2.0 * std::sqrt(2.0));
}

double bbm_cg(double omega0) {
    require(omega0 > 0.0 && omega0 < kBBMCritical,
            "group-velocity curve is subcritical only");
    const double d = std::sqrt(1.0 - 4.0 * omega0 * omega0);
    return (1.0 - 4.0 * omega0 * omega0 + d) / 2.0;
}

double bbm_region2_rate(double xi) {
    const double Xi = big_xi(xi);
    const double arg = std::max(0.0, Xi - 1.0 - 2.0 * xi);
    return 2.0 * std::sqrt(2.0 * xi) * arg * std::sqrt(arg) /
           ((Xi - 1.0) * (Xi - 1.0));
}

double bbm_l3(double omega0, double xi) {
    require(omega0 > kBBMCritical, "l3 is defined for supercritical omega0");
    require(xi > 0.0 && xi < 1.0, "l3 is defined for 0 < xi < 1");
    return xi / (2.0 * omega0) - omega0 + bbm_region2_rate(xi);
}

RegionLabel kdv_region(double omega0, double xi) {
    require(omega0 > 0.0 && xi >= 0.0, "need omega0 > 0 and xi >= 0");
    const double tol = kRegionBoundaryTol;
    if (std::abs(omega0 - kKdVCritical) < tol || std::abs(xi - 1.0) < tol) {
        throw OnRegionBoundary("(omega0, xi) lies on a region boundary");
    }
    if (omega0 < kKdVCritical) {
        if (xi > 1.0) return {Equation::KdV, RegionName::IVa};
        const double cg = kdv_cg_curve(omega0);
        if (std::abs(xi - cg) < tol) {
            throw OnRegionBoundary("xi lies on the group-velocity curve");
        }
        return {Equation::KdV, xi < cg ? RegionName::I : RegionName::IIa};
    }
    if (xi < 1.0) {
        const double l1 = (xi == 0.0) ? 1.0 : kdv_l1(omega0, xi);
        if (std::abs(l1) < tol) {
            throw OnRegionBoundary("(omega0, xi) lies on the l1 = 0 curve");
        }
        return {Equation::KdV, l1 < 0.0 ? RegionName::IIb : RegionName::III};
    }
    const double l2 = kdv_l2(omega0, xi);
    if (std::abs(l2) < tol) {
        throw OnRegionBoundary("(omega0, xi) lies on the l2 = 0 curve");
    }
    return {Equation::KdV, l2 < 0.0 ? RegionName::IVb : RegionName::IVc};
}

RegionLabel bbm_region(double omega0, double xi) {
    require(omega0 > 0.0 && xi >= 0.0, "need omega0 > 0 and xi >= 0");
    const double tol = kRegionBoundaryTol;
    if (std::abs(omega0 - kBBMCritical) < tol || std::abs(xi - 1.0) < tol) {
        throw OnRegionBoundary("(omega0, xi) lies on a region boundary");
    }
    if (xi > 1.0) {
        if (omega0 > 1.0 / std::sqrt(2.0)) {
            const double split = 2.0 * omega0 * omega0;
            if (std::abs(xi - split) < tol) {
                throw OnRegionBoundary("xi lies on the xi = 2 omega0^2 curve");
            }
            if (xi < split) return {Equation::BBM, RegionName::IVb};
        }
        return {Equation::BBM, RegionName::IVa};
    }
    if (omega0 < kBBMCritical) {
        const double cg = bbm_cg(omega0);
        if (std::abs(xi - cg) < tol) {
            throw OnRegionBoundary("xi lies on the group-velocity curve");
        }
        return {Equation::BBM, xi < cg ? RegionName::I : RegionName::II};
    }
    const double l3 = (xi == 0.0) ? (0.5 - omega0) : bbm_l3(omega0, xi);
    if (std::abs(l3) < tol) {
        throw OnRegionBoundary("(omega0, xi) lies on the l3 = 0 curve");
    }
    return {Equation::BBM, l3 < 0.0 ? RegionName::II : RegionName::III};
}

double kdv_region2_rate(double xi) {
    return (2.0 / 9.0) * std::sqrt(3.0 * (1.0 - xi)) * (1.0 - xi);
}

double kdv_region2_prefactor(double omega0, double xi) {
    // The sqrt(2) is the modulus of the dk = (1+i) ds contour element along
    // the steepest-descent path through the real saddle pair.
    return std::sqrt(2.0) * 27.0 * xi * omega0 /
           ((4.0 - (xi + 3.0) * xi * xi - 27.0 * omega0 * omega0) *
            std::sqrt(2.0 * kPi * std::sqrt(3.0 * (1.0 - xi))));
}

double kdv_region4_rate(double xi) {
    return (2.0 / 9.0) * std::sqrt(3.0 * xi - 3.0) * (xi - 1.0);
}

double kdv_region4_prefactor(double omega0, double xi) {
    return 27.0 * xi * omega0 /
           ((8.0 - 2.0 * (xi + 3.0) * xi * xi - 54.0 * omega0 * omega0) *
            std::sqrt(kPi * std::sqrt(3.0 * (xi - 1.0))));
}

double bbm_region2_prefactor(double omega0, double xi) {
    const double Xi = big_xi(xi);
    const double inner = std::sqrt(xi) * std::pow(Xi - 1.0, 3.0) /
                         ((Xi * Xi - Xi) * std::sqrt(Xi - 1.0 - 2.0 * xi));
    // sqrt(2): modulus of the dk = (1+i) ds element on the descent path
    // through the real saddle pair, as for the third-order family.
    return std::sqrt(2.0) * omega0 * (-4.0 * xi + Xi - 1.0) * std::sqrt(inner) /
           (std::pow(2.0, 1.25) * std::sqrt(kPi) *
            ((4.0 * xi - Xi + 1.0) * omega0 * omega0 +
             xi * (2.0 * xi - Xi + 1.0)));
}

double bbm_alpha(double xi) {
    const double Xi = big_xi(xi);
    return std::sqrt(2.0 * xi * xi - xi * Xi + xi) * (Xi - 3.0) /
           (std::sqrt(2.0) * (Xi - 1.0));
}

double bbm_region4_prefactor(double omega0, double xi) {
    const double Xi = big_xi(xi);
    const double inner = std::sqrt(xi) * std::pow(Xi - 1.0, 3.0) /
                         (std::sqrt(2.0 * xi - Xi + 1.0) * (Xi * Xi - Xi));
    return -omega0 * std::sqrt(inner) *
           (4.0 * xi + Xi + 8.0 * omega0 * omega0 - 1.0) /
           (4.0 * std::pow(2.0, 0.75) * std::sqrt(kPi) *
            ((4.0 * xi - 1.0) * omega0 * omega0 + (xi - 1.0) * xi +
             4.0 * std::pow(omega0, 4.0)));
}

SolutionSample kdv_asymptotic(double omega0, double x, double t) {
    require(t > 0.0 && x >= 0.0, "need t > 0 and x >= 0");
    const double xi = x / t;
    RegionLabel label = kdv_region(omega0, xi);
    SolutionSample s;
    s.x = x;
    s.t = t;
    s.method = Method::Asymptotic;
    const double sqt = std::sqrt(t);
    switch (label.name) {
        case RegionName::I: {
            const double k0 = kdv_k3(omega0).real();
            s.value = std::sin((k0 * xi - omega0) * t);
            s.err_estimate = 1.0 / sqt;
            break;
        }
        case RegionName::IIa:
        case RegionName::IIb: {
            s.value = kdv_region2_prefactor(omega0, xi) *
                      std::cos(kdv_region2_rate(xi) * t - kPi / 4.0) / sqt;
            s.err_estimate = 1.0 / t;
            break;
        }
        case RegionName::III: {
            const Complex k0 = kdv_k3(omega0);
            s.value = std::exp(-k0.imag() * xi * t) *
                          std::sin((k0.real() * xi - omega0) * t) +
                      kdv_region2_prefactor(omega0, xi) *
                          std::cos(kdv_region2_rate(xi) * t - kPi / 4.0) / sqt;
            s.err_estimate = 1.0 / t;
            break;
        }
        case RegionName::IVa:
        case RegionName::IVb: {
            s.value = kdv_region4_prefactor(omega0, xi) *
                      std::exp(-kdv_region4_rate(xi) * t) / sqt;
            s.err_estimate = std::abs(s.value) / sqt;
            break;
        }
        case RegionName::IVc: {
            const Complex k0 = kdv_k3(omega0);
            s.value = std::exp(-k0.imag() * xi * t) *
                          std::sin((k0.real() * xi - omega0) * t) +
                      kdv_region4_prefactor(omega0, xi) *
                          std::exp(-kdv_region4_rate(xi) * t) / sqt;
            s.err_estimate = std::abs(s.value) / sqt;
            break;
        }
        default:
            throw StrategyDomain("unreachable region label");
    }
    return s;
}

SolutionSample bbm_asymptotic(double omega0, double x, double t) {
    require(t > 0.0 && x >= 0.0, "need t > 0 and x >= 0");
    const double xi = x / t;
    RegionLabel label = bbm_region(omega0, xi);
    SolutionSample s;
    s.x = x;
    s.t = t;
    s.method = Method::Asymptotic;
    const double sqt = std::sqrt(t);
    const double pole_rate =
        (omega0 > kBBMCritical)
            ? xi * std::sqrt(4.0 * omega0 * omega0 - 1.0) / (2.0 * omega0)
            : 0.0;
    const double pole_phase = (xi / (2.0 * omega0) - omega0) * t;
    switch (label.name) {
        case RegionName::I: {
            const double k0 = bbm_k0(omega0).real();
            s.value = std::sin((k0 * xi - omega0) * t);
            s.err_estimate = 1.0 / sqt;
            break;
        }
        case RegionName::II: {
            s.value = bbm_region2_prefactor(omega0, xi) *
                      std::cos(bbm_region2_rate(xi) * t - kPi / 4.0) / sqt;
            s.err_estimate = 1.0 / t;
            break;
        }
        case RegionName::III: {
            s.value = std::exp(-pole_rate * t) * std::sin(pole_phase) +
                      bbm_region2_prefactor(omega0, xi) *
                          std::cos(bbm_region2_rate(xi) * t - kPi / 4.0) / sqt;
            s.err_estimate = 1.0 / t;
            break;
        }
        case RegionName::IVa: {
            s.value = bbm_region4_prefactor(omega0, xi) *
                      std::exp(-bbm_alpha(xi) * t) / sqt;
            s.err_estimate = std::abs(s.value) / sqt;
            break;
        }
        case RegionName::IVb: {
            s.value = std::exp(-pole_rate * t) * std::sin(pole_phase) +
                      bbm_region4_prefactor(omega0, xi) *
                          std::exp(-bbm_alpha(xi) * t) / sqt;
            s.err_estimate = std::abs(s.value) / sqt;
            break;
        }
        default:
            throw StrategyDomain("unreachable region label");
    }
    return s;
}

}  // namespace halfline

#ifndef HALFLINE_ASYMPTOTICS_HPP
#define HALFLINE_ASYMPTOTICS_HPP

#include <string>
#include <vector>

#include "halfline/fokas.hpp"
#include "halfline/types.hpp"

// Region classification of the (omega0, xi = x/t) plane and evaluation of
// the leading-order long-time solution formulas for the linear KdV and
// linear BBM wavemaker problems.

namespace halfline {

enum class Equation { KdV, BBM };

enum class RegionName { I, IIa, IIb, II, III, IVa, IVb, IVc };

struct RegionLabel {
    Equation equation;
    RegionName name;
};

std::string to_string(RegionName name);

struct SaddleSet {
    double xi = 0.0;
    std::vector<Complex> saddles;
    std::vector<Complex> second_derivatives;  // phi''(rho), phi = i(k xi - w(k))
};

// Tolerance (in omega0 and xi) inside which classification refuses to pick a
// side of a region boundary.
inline constexpr double kRegionBoundaryTol = 1e-6;

SaddleSet kdv_saddles(double xi);
SaddleSet bbm_saddles(double xi);

RegionLabel kdv_region(double omega0, double xi);
RegionLabel bbm_region(double omega0, double xi);

SolutionSample kdv_asymptotic(double omega0, double x, double t);
SolutionSample bbm_asymptotic(double omega0, double x, double t);

// Radiating wavenumber in the closed trigonometric (subcritical) or surd
// (supercritical) form used by the long-time formulas.
Complex kdv_k3(double omega0);
Complex bbm_k0(double omega0);

// Boundary curves of the phase diagrams.
double kdv_cg_curve(double omega0);           // xi = w'(k3), subcritical
double kdv_l1(double omega0, double xi);      // IIb/III split, 0 < xi < 1
double kdv_l2(double omega0, double xi);      // IVb/IVc split, xi > 1
double bbm_cg(double omega0);                 // xi = w'(k0), subcritical
double bbm_l3(double omega0, double xi);      // II/III split, 0 < xi < 1

// Pieces of the region formulas (exposed for identity and ratio tests):
// Region II solutions are prefactor * cos(rate * t - pi/4) / sqrt(t); the
// pi/4 offset and the sqrt(2) folded into the prefactor come from the
// stationary-phase contour through the real saddle pair, whose steepest
// descent direction makes a 45-degree angle with the real axis (contour
// element dk = (1+i) ds).  Region IV solutions, whose saddle sits on the
// imaginary axis with a horizontal descent path, are
// prefactor * exp(-rate * t) / sqrt(t) with no offset.
double kdv_region2_prefactor(double omega0, double xi);
double kdv_region2_rate(double xi);
double kdv_region4_prefactor(double omega0, double xi);
double kdv_region4_rate(double xi);
double bbm_region2_prefactor(double omega0, double xi);
double bbm_region2_rate(double xi);
double bbm_region4_prefactor(double omega0, double xi);
double bbm_alpha(double xi);

}  // namespace halfline

#endif

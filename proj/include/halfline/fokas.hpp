#ifndef HALFLINE_FOKAS_HPP
#define HALFLINE_FOKAS_HPP

#include <vector>

#include "halfline/types.hpp"

// High-accuracy numerical evaluation of the exact contour-integral solution
// formulas for the linear KdV and linear BBM wavemaker problems
// (u(x,0) = 0, u(0,t) = sin(-omega0 t)), via deformed contours with stable
// removable-singularity handling.

namespace halfline {

struct ContourSpec {
    enum class Kind {
        KdVBoundaryDPlus,  // real segment [-1/sqrt3, 1/sqrt3] + hyperbola
                           // branches Im k = sqrt(3 Re^2 k - 1)
        KdVHalfLines,      // L1 = {-i + r e^{2 pi i/3}}, L2 = {-i + r e^{i pi/3}}
        BBMCircle          // circle center i, radius sqrt2
    };
    Kind kind = Kind::KdVBoundaryDPlus;
    double truncation_radius = 0.0;  // 0 = automatic
    int node_count = 256;
    double indentation_radius = 0.0;  // accepted for compatibility; the
                                      // combined integrand needs no indentation
};

struct QuadratureConfig {
    ContourSpec contour;
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double removable_tol = 0.5;  // |z| switch threshold for the psi kernel
};

enum class Method { ExactQuadrature, Asymptotic, Series, Oracle };

struct SolutionSample {
    double x = 0.0;
    double t = 0.0;
    double value = 0.0;
    Method method = Method::ExactQuadrature;
    double err_estimate = 0.0;
};

enum class KdVStrategy {
    Auto,
    BoundaryContour,  // strategy A: combined integrand along boundary of D+
                      // (lifted through the saddle when xi > 1); needs x > 0
    HalfLines         // strategy B: radiating-wave residue minus L1 u L2
                      // integral; valid for all x >= 0, t > 0
};

// Stable evaluation of (1 - e^{-iz})/z (series branch for small |z|).
Complex psi_kernel(Complex z);

SolutionSample kdv_exact(double x, double t, double omega0,
                         const QuadratureConfig& cfg = {},
                         KdVStrategy strategy = KdVStrategy::Auto);
SolutionSample kdv_neumann_exact(double x, double t, double omega0,
                                 const QuadratureConfig& cfg = {},
                                 KdVStrategy strategy = KdVStrategy::Auto);
SolutionSample bbm_exact(double x, double t, double omega0,
                         const QuadratureConfig& cfg = {});
SolutionSample bbm_neumann_exact(double x, double t, double omega0,
                                 const QuadratureConfig& cfg = {});

struct ContourNode {
    Complex k;
    Complex dk;  // arclength-proportional complex weight
};

// Discretized contour nodes for inspection and tests.  For the unbounded
// KdV contours the caller-supplied x fixes the truncation through the
// e^{-Im(k) x} envelope (ignored when spec.truncation_radius > 0).
std::vector<ContourNode> contour_points(const ContourSpec& spec,
                                        double x = 1.0,
                                        double abs_tol = 1e-12);

}  // namespace halfline

#endif

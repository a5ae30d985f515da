#ifndef HALFLINE_TYPES_HPP
#define HALFLINE_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace halfline {

using Complex = std::complex<double>;

// Error hierarchy shared by all modules.  Every condition the library can
// refuse to handle maps to one of these so callers (and the CLI) can react
// uniformly.
struct HalflineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 1 + A_{-2} k^2 vanished: the dispersion relation has a pole at this k.
struct PoleOfDispersion : HalflineError {
    using HalflineError::HalflineError;
};

// All leading coefficients of the characteristic polynomial vanished.
struct DegeneratePolynomial : HalflineError {
    using HalflineError::HalflineError;
};

// Zero or several roots satisfy the radiation condition (possible only
// outside the two covered coefficient families).
struct NoUniqueRadiatingRoot : HalflineError {
    using HalflineError::HalflineError;
};

// Operation requires the local third-order or nonlocal second-order family.
struct UncoveredFamily : HalflineError {
    using HalflineError::HalflineError;
};

// Second-order family with a harmonic n* = -A2/(omega0*A_{-2}) for which the
// D-N map is not determined by time-periodicity alone.
struct UncoveredHarmonic : HalflineError {
    using HalflineError::HalflineError;
};

// Quadrature failed to meet the requested tolerance within its node budget.
struct NonConvergent : HalflineError {
    using HalflineError::HalflineError;
};

// An evaluation strategy was requested outside its domain of validity.
struct StrategyDomain : HalflineError {
    using HalflineError::HalflineError;
};

// (omega0, xi) lies within tolerance of an asymptotic-region boundary curve,
// where the leading-order formulas are singular.
struct OnRegionBoundary : HalflineError {
    using HalflineError::HalflineError;
};

// Modulation theory covers subcritical forcing only.
struct SupercriticalUnsupported : HalflineError {
    using HalflineError::HalflineError;
};

// Modulation amplitude F is singular at the group-velocity ray.
struct AtGroupVelocity : HalflineError {
    using HalflineError::HalflineError;
};

// Time-step stability check failed at oracle construction.
struct StabilityViolation : HalflineError {
    using HalflineError::HalflineError;
};

// Oracle run long enough for the wavefront to reach the sponge layer.
struct FrontExitedDomain : HalflineError {
    using HalflineError::HalflineError;
};

}  // namespace halfline

#endif

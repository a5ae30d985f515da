#ifndef HALFLINE_DISPERSION_HPP
#define HALFLINE_DISPERSION_HPP

#include <vector>

#include "halfline/types.hpp"

// Dispersion relation, spectral-plane region membership, characteristic-root
// computation/classification, radiation-condition selection and critical
// frequencies for the scalar PDE family
//
//   (1 - A_{-2} d_xx) u_t = i A_0 u + A_1 u_x + i A_2 u_xx + A_3 u_xxx ,
//
// posed on the half line with time-periodic Dirichlet forcing.

namespace halfline {

// The five PDE parameters.  Constraints: a_m2 >= 0 and a3 <= 0.
struct ModelCoefficients {
    double a_m2 = 0.0;  // A_{-2}
    double a0 = 0.0;    // A_0
    double a1 = 0.0;    // A_1
    double a2 = 0.0;    // A_2
    double a3 = 0.0;    // A_3

    // Linear KdV: u_t + u_x + u_xxx = 0.
    static ModelCoefficients kdv() { return {0.0, 0.0, -1.0, 0.0, -1.0}; }
    // Linear BBM: u_t + u_x - u_xxt = 0.
    static ModelCoefficients bbm() { return {1.0, 0.0, -1.0, 0.0, 0.0}; }

    // Local third-order family (KdV-like): A_{-2} = 0, A_3 < 0.
    bool third_order_family() const { return a_m2 == 0.0 && a3 < 0.0; }
    // Nonlocal second-order family (BBM-like): A_{-2} > 0, A_3 = 0.
    bool second_order_family() const { return a_m2 > 0.0 && a3 == 0.0; }
    bool covered_family() const {
        return third_order_family() || second_order_family();
    }

    // Throws std::invalid_argument on sign violations.
    void validate() const;
};

enum class RootLocation { OnDPlusBoundary, OnDMinusBoundary, Interior };

struct ClassifiedRoot {
    Complex value;
    int multiplicity = 1;
    RootLocation location = RootLocation::Interior;
};

// Roots of A3 k^3 + (A2 + n w0 A_{-2}) k^2 - A1 k - A0 + n w0 = 0 for one
// harmonic n, sorted by (Im, Re), with the radiating root selected.
struct RootSet {
    int harmonic = 0;
    double omega0 = 0.0;
    std::vector<ClassifiedRoot> roots;
    int k0_index = -1;

    const ClassifiedRoot& k0() const { return roots.at(k0_index); }
};

enum class Membership { DPlus, DMinus, Boundary, Neither };

struct IndicatorResult {
    double indicator = 0.0;  // Re( i Omega(k) / (1 + A_{-2} k^2) )
    Membership membership = Membership::Neither;
};

// Frequencies at which two boundary roots collide (branch points of the
// radiating-root selection).  For the third-order family omega_bar is the
// interval midpoint; degenerate marks coincident endpoints.
struct CriticalFrequencies {
    double omega_cr_minus = 0.0;
    double omega_cr_plus = 0.0;
    double omega_bar = 0.0;
    bool degenerate = false;
};

// omega(k) = (-A0 - A1 k + A2 k^2 + A3 k^3) / (1 + A_{-2} k^2).
// Throws PoleOfDispersion when the denominator vanishes within tolerance.
Complex omega(const ModelCoefficients& c, Complex k);

// Omega(k) = A3 k^3 + A2 k^2 - A1 k - A0 (polynomial numerator part).
Complex capital_omega(const ModelCoefficients& c, Complex k);

// d omega / d k as a rational closed form.
Complex group_velocity(const ModelCoefficients& c, Complex k);

// Membership of k in D+/D- = { +-Im k > 0, Re(i omega) < 0 }.
IndicatorResult region_indicator(const ModelCoefficients& c, Complex k);

// All characteristic roots for harmonic n at base frequency omega0 > 0
// (omega0 = 0 is allowed for n = 0), classified and with the radiating root
// selected.  Closed forms (Cardano / quadratic) for the covered families,
// companion-matrix eigenvalues for the general family.
RootSet characteristic_roots(const ModelCoefficients& c, int n, double omega0);

// As characteristic_roots but forcing the companion-matrix backend; used for
// closed-form cross-validation.
std::vector<Complex> characteristic_roots_companion(const ModelCoefficients& c,
                                                    int n, double omega0);

CriticalFrequencies critical_frequencies(const ModelCoefficients& c);

// Index of the unique root satisfying the radiation condition:
// Im k0 > 0, or Im k0 = 0 and group velocity >= -tol.  Boundary double roots
// (zero group velocity) resolve to the repeated root.
int select_radiating_root(const RootSet& roots, const ModelCoefficients& c);

}  // namespace halfline

#endif

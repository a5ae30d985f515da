#ifndef HALFLINE_MODULATION_HPP
#define HALFLINE_MODULATION_HPP

#include "halfline/asymptotics.hpp"
#include "halfline/types.hpp"

// Linear modulation (wave-conservation) theory for the subcritical wavemaker
// problems: piecewise self-similar frequency, wavenumber, amplitude, and
// phase fields in xi = x/t.  On the plateau 0 <= xi <= c_g the wave is the
// boundary-driven sin(k0 x - omega0 t); on the fan c_g < xi <= 1 the fields
// follow the characteristic family c_g(k) = xi.  The amplitude constant F
// and phase constant theta0 cannot be fixed by leading-order modulation
// theory; they default to the values identified from the long-time
// asymptotics (F = the algebraic-decay prefactor, and the fan phase
// carries the fixed pi/4 stationary-phase offset; theta0 = 0 is any
// additional user offset).

namespace halfline {

struct ModulationState {
    Equation equation = Equation::KdV;
    double omega0 = 0.0;
    double xi = 0.0;
    bool fan = false;       // false: plateau branch; true: fan branch
    double omega = 0.0;     // local frequency
    double k = 0.0;         // local wavenumber
    double amplitude = 0.0; // plateau: 1; fan: F(xi), the factor on 1/sqrt(t)
    double theta0 = 0.0;

    // Phase theta with theta_x = k and theta_t = -omega along the branch.
    double phase_at(double x, double t) const;
    // Wave reconstruction: plateau sin(theta); fan amplitude cos(theta)/sqrt(t).
    double evaluate(double x, double t) const;
};

ModulationState kdv_modulation(double omega0, double xi, double theta0 = 0.0);
ModulationState bbm_modulation(double omega0, double xi, double theta0 = 0.0);

}  // namespace halfline

#endif

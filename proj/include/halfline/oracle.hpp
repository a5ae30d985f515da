#ifndef HALFLINE_ORACLE_HPP
#define HALFLINE_ORACLE_HPP

#include <vector>

#include "halfline/types.hpp"

// Independent verification oracle: method-of-lines finite-difference
// integration of the two wavemaker problems on a truncated half-line
// [0, x_max], with a graded sponge layer absorbing outgoing waves at the
// right boundary.  Fourth-order spatial stencils; Crank-Nicolson stepping
// for the stiff third-derivative problem and classical RK4 with a
// factored elliptic solve per stage for the nonlocal problem.

namespace halfline {

struct OracleGrid {
    double x_max = 40.0;
    int nx = 1024;
    double dt = 0.01;
    enum class RightBC { Sponge, Truncation };
    RightBC bc_right = RightBC::Sponge;
    double sponge_width = 6.0;  // <= 0 selects 0.15 * x_max

    void validate() const;  // throws StabilityViolation on bad parameters
    double dx() const { return x_max / (nx - 1); }
    double usable_width() const;  // x_max minus the sponge layer
};

struct OracleSnapshot {
    double t = 0.0;
    std::vector<double> u;
};

struct OracleResult {
    std::vector<double> x;
    std::vector<OracleSnapshot> snapshots;
};

// Integrate u_t = -u_x - u_xxx with u(x,0) = 0, u(0,t) = -sin(omega0 t).
// Snapshots are recorded at the requested times plus t_final; an empty
// request list records t_final only.
OracleResult run_kdv(double omega0, const OracleGrid& grid, double t_final,
                     const std::vector<double>& snapshot_times = {});

// Integrate (1 - d_xx) u_t = -u_x with u(x,0) = 0 and the boundary-rate
// condition u_t(0,t) = -omega0 cos(omega0 t).
OracleResult run_bbm(double omega0, const OracleGrid& grid, double t_final,
                     const std::vector<double>& snapshot_times = {});

// Finite-difference weights for the m-th derivative at point z from the
// given stencil nodes (used to build the biased boundary closures).
std::vector<double> fd_weights(double z, const std::vector<double>& nodes,
                               int m);

}  // namespace halfline

#endif

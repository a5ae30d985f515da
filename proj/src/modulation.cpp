#include "halfline/modulation.hpp"

#include <cmath>

namespace halfline {

namespace {

const double kKdVCritical = 2.0 / (3.0 * std::sqrt(3.0));
const double kPi = std::acos(-1.0);
constexpr double kGroupVelocityTol = 1e-9;

}  // namespace

double ModulationState::phase_at(double x, double t) const {
    if (!fan) return k * x - omega * t + theta0;
    const double xi_here = x / t;
    const double rate = (equation == Equation::KdV)
                            ? kdv_region2_rate(xi_here)
                            : bbm_region2_rate(xi_here);
    // The pi/4 offset matches the steepest-descent evaluation in the fan
    // (the descent path through the real saddle pair runs at 45 degrees);
    // cos(-rate t + pi/4) = cos(rate t - pi/4).
    return -rate * t + kPi / 4.0 + theta0;
}

double ModulationState::evaluate(double x, double t) const {
    const double theta = phase_at(x, t);
    if (!fan) return std::sin(theta);
    return amplitude * std::cos(theta) / std::sqrt(t);
}

ModulationState kdv_modulation(double omega0, double xi, double theta0) {
    if (!(omega0 > 0.0) || omega0 >= kKdVCritical) {
        throw SupercriticalUnsupported(
            "modulation theory covers subcritical omega0 only");
    }
    if (!(xi > 0.0) || xi > 1.0) {
        throw StrategyDomain("modulation fields are defined for 0 < xi <= 1");
    }
    ModulationState st;
    st.equation = Equation::KdV;
    st.omega0 = omega0;
    st.xi = xi;
    st.theta0 = theta0;
    const double cg = kdv_cg_curve(omega0);
    if (xi <= cg - kGroupVelocityTol) {
        st.fan = false;
        st.omega = omega0;
        st.k = kdv_k3(omega0).real();
        st.amplitude = 1.0;
        return st;
    }
    if (std::abs(xi - cg) < kGroupVelocityTol) {
        throw AtGroupVelocity("amplitude constant diverges at xi = c_g");
    }
    st.fan = true;
    st.omega = std::sqrt(3.0 - 3.0 * xi) * (2.0 + xi) / 9.0;
    st.k = std::sqrt((1.0 - xi) / 3.0);
    st.amplitude = kdv_region2_prefactor(omega0, xi);
    return st;
}

ModulationState bbm_modulation(double omega0, double xi, double theta0) {
    if (!(omega0 > 0.0) || omega0 >= 0.5) {
        throw SupercriticalUnsupported(
            "modulation theory covers subcritical omega0 only");
    }
    if (!(xi > 0.0) || xi > 1.0) {
        throw StrategyDomain("modulation fields are defined for 0 < xi <= 1");
    }
    ModulationState st;
    st.equation = Equation::BBM;
    st.omega0 = omega0;
    st.xi = xi;
    st.theta0 = theta0;
    const double cg = bbm_cg(omega0);
    if (xi <= cg - kGroupVelocityTol) {
        st.fan = false;
        st.omega = omega0;
        st.k = bbm_k0(omega0).real();
        st.amplitude = 1.0;
        return st;
    }
    if (std::abs(xi - cg) < kGroupVelocityTol) {
        throw AtGroupVelocity("amplitude constant diverges at xi = c_g");
    }
    st.fan = true;
    const double Xi = std::sqrt(8.0 * xi + 1.0);
    st.omega = std::sqrt(1.0 - 4.0 * xi + Xi) / (2.0 * std::sqrt(2.0));
    st.k = std::sqrt((-1.0 - 2.0 * xi + Xi) / (2.0 * xi));
    st.amplitude = bbm_region2_prefactor(omega0, xi);
    return st;
}

}  // namespace halfline

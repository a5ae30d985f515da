#include "halfline/oracle.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <vector>

namespace halfline {

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

constexpr double kSpongeStrength = 3.0;

double sponge_sigma(double x, double xs, double w) {
    if (x <= xs || w <= 0.0) return 0.0;
    double s = (x - xs) / w;
    return kSpongeStrength * s * s * s;
}

std::vector<double> snapshot_schedule(double t_final,
                                      const std::vector<double>& requested) {
    std::vector<double> times;
    for (double t : requested) {
        if (t > 0.0 && t < t_final) times.push_back(t);
    }
    times.push_back(t_final);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    return times;
}

// Spatial first/third derivative operator rows with centered interior
// stencils and biased closures near the ends.
void add_derivative_rows(std::vector<Triplet>& trips, int nx, double dx,
                         int order, int width, double scale,
                         int row_end = -1) {
    const int half = width / 2;
    if (row_end < 0) row_end = nx;
    for (int i = 1; i < row_end; ++i) {
        int lo = std::clamp(i - half, 0, nx - width);
        std::vector<double> nodes(width);
        for (int j = 0; j < width; ++j) nodes[j] = (lo + j - i) * dx;
        std::vector<double> w = fd_weights(0.0, nodes, order);
        for (int j = 0; j < width; ++j) {
            trips.emplace_back(i, lo + j, scale * w[j]);
        }
    }
}

}  // namespace

std::vector<double> fd_weights(double z, const std::vector<double>& nodes,
                               int m) {
    const int n = static_cast<int>(nodes.size());
    if (n <= m) throw StabilityViolation("stencil too small for derivative");
    std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
    double c1 = 1.0;
    double c4 = nodes[0] - z;
    c[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        double c5 = c4;
        c4 = nodes[i] - z;
        for (int j = 0; j < i; ++j) {
            const double c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) {
                    c[i][k] =
                        c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) {
                c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (int j = 0; j < n; ++j) w[j] = c[j][m];
    return w;
}

void OracleGrid::validate() const {
    if (nx < 64) throw StabilityViolation("need nx >= 64");
    if (!(x_max > 0.0)) throw StabilityViolation("need x_max > 0");
    if (!(dt > 0.0) || dt > 1.0) {
        throw StabilityViolation("need 0 < dt <= 1");
    }
    if (bc_right == RightBC::Sponge && sponge_width >= x_max) {
        throw StabilityViolation("sponge layer swallows the whole domain");
    }
}

double OracleGrid::usable_width() const {
    if (bc_right != RightBC::Sponge) return x_max;
    double w = (sponge_width > 0.0) ? sponge_width : 0.15 * x_max;
    return x_max - w;
}

OracleResult run_kdv(double omega0, const OracleGrid& grid, double t_final,
                     const std::vector<double>& snapshot_times) {
    grid.validate();
    if (t_final < 0.0) throw StabilityViolation("need t_final >= 0");
    // The front propagates no faster than the maximum group velocity 1.
    if (t_final > grid.usable_width()) {
        throw FrontExitedDomain(
            "wavefront would reach the absorbing layer before t_final");
    }
    const int nx = grid.nx;
    const double dx = grid.dx();
    const double w =
        (grid.sponge_width > 0.0) ? grid.sponge_width : 0.15 * grid.x_max;
    const double xs = grid.x_max - w;

    // L = -d_x - d_xxx - sigma(x).  Row 0 is reserved for the Dirichlet
    // boundary value; the last kRightRows rows hold u = 0, which keeps the
    // spectrum of the closure in the left half-plane (fully biased stencils
    // at the outflow end have growing modes).
    constexpr int kRightRows = 3;
    std::vector<Triplet> trips;
    add_derivative_rows(trips, nx, dx, 1, 5, -1.0, nx - kRightRows);
    add_derivative_rows(trips, nx, dx, 3, 7, -1.0, nx - kRightRows);
    if (grid.bc_right == OracleGrid::RightBC::Sponge) {
        for (int i = 1; i < nx - kRightRows; ++i) {
            trips.emplace_back(i, i, -sponge_sigma(i * dx, xs, w));
        }
    }
    SpMat L(nx, nx);
    L.setFromTriplets(trips.begin(), trips.end());

    OracleResult out;
    out.x.resize(nx);
    for (int i = 0; i < nx; ++i) out.x[i] = i * dx;
    Eigen::VectorXd u = Eigen::VectorXd::Zero(nx);
    double t = 0.0;
    if (t_final == 0.0) {
        out.snapshots.push_back({0.0, std::vector<double>(nx, 0.0)});
        return out;
    }

    Eigen::SparseLU<SpMat> lu;
    SpMat B;
    double h_factored = -1.0;
    auto refactor = [&](double h) {
        SpMat eye(nx, nx);
        eye.setIdentity();
        SpMat A = eye - (0.5 * h) * L;
        B = eye + (0.5 * h) * L;
        // Dirichlet rows: u(0, t_{n+1}) imposed directly, u = 0 at the
        // trailing nodes.
        auto keep = [nx](int r, int, double) {
            return r != 0 && r < nx - kRightRows;
        };
        A.prune(keep);
        B.prune(keep);
        A.coeffRef(0, 0) = 1.0;
        for (int i = nx - kRightRows; i < nx; ++i) A.coeffRef(i, i) = 1.0;
        A.makeCompressed();
        B.makeCompressed();
        lu.compute(A);
        if (lu.info() != Eigen::Success) {
            throw StabilityViolation("Crank-Nicolson factorization failed");
        }
        h_factored = h;
    };

    for (double t_snap : snapshot_schedule(t_final, snapshot_times)) {
        const double span = t_snap - t;
        const long steps = std::max(1L, std::lround(std::ceil(span / grid.dt)));
        const double h = span / steps;
        if (std::abs(h - h_factored) > 1e-15) refactor(h);
        for (long s = 0; s < steps; ++s) {
            const double tn1 = t + h;
            Eigen::VectorXd rhs = B * u;
            rhs[0] = -std::sin(omega0 * tn1);
            u = lu.solve(rhs);
            t = tn1;
        }
        out.snapshots.push_back(
            {t, std::vector<double>(u.data(), u.data() + nx)});
    }
    return out;
}

OracleResult run_bbm(double omega0, const OracleGrid& grid, double t_final,
                     const std::vector<double>& snapshot_times) {
    grid.validate();
    if (t_final < 0.0) throw StabilityViolation("need t_final >= 0");
    if (t_final > grid.usable_width()) {
        throw FrontExitedDomain(
            "wavefront would reach the absorbing layer before t_final");
    }
    const int nx = grid.nx;
    const double dx = grid.dx();
    const double w =
        (grid.sponge_width > 0.0) ? grid.sponge_width : 0.15 * grid.x_max;
    const double xs = grid.x_max - w;

    // Elliptic operator M = 1 - d_xx with Dirichlet rows for the rate
    // variable v = u_t: v(0) = g0'(t), v(x_max) = 0.
    std::vector<Triplet> mt;
    mt.emplace_back(0, 0, 1.0);
    mt.emplace_back(nx - 1, nx - 1, 1.0);
    for (int i = 1; i < nx - 1; ++i) {
        int lo = std::clamp(i - 2, 0, nx - 5);
        std::vector<double> nodes(5);
        for (int j = 0; j < 5; ++j) nodes[j] = (lo + j - i) * dx;
        std::vector<double> w2 = fd_weights(0.0, nodes, 2);
        mt.emplace_back(i, i, 1.0);
        for (int j = 0; j < 5; ++j) mt.emplace_back(i, lo + j, -w2[j]);
    }
    SpMat M(nx, nx);
    M.setFromTriplets(mt.begin(), mt.end());
    M.makeCompressed();
    Eigen::SparseLU<SpMat> lu;
    lu.compute(M);
    if (lu.info() != Eigen::Success) {
        throw StabilityViolation("elliptic factorization failed");
    }

    std::vector<Triplet> d1t;
    add_derivative_rows(d1t, nx, dx, 1, 5, 1.0);
    SpMat D1(nx, nx);
    D1.setFromTriplets(d1t.begin(), d1t.end());

    Eigen::VectorXd sigma = Eigen::VectorXd::Zero(nx);
    if (grid.bc_right == OracleGrid::RightBC::Sponge) {
        for (int i = 0; i < nx; ++i) {
            sigma[i] = sponge_sigma(i * dx, xs, w);
        }
    }

    auto rate = [&](double tt, const Eigen::VectorXd& uu) -> Eigen::VectorXd {
        Eigen::VectorXd rhs = -(D1 * uu);
        rhs[0] = -omega0 * std::cos(omega0 * tt);  // d/dt of -sin(w0 t)
        rhs[nx - 1] = 0.0;
        Eigen::VectorXd v = lu.solve(rhs);
        return v - sigma.cwiseProduct(uu);
    };

    OracleResult out;
    out.x.resize(nx);
    for (int i = 0; i < nx; ++i) out.x[i] = i * dx;
    Eigen::VectorXd u = Eigen::VectorXd::Zero(nx);
    double t = 0.0;
    if (t_final == 0.0) {
        out.snapshots.push_back({0.0, std::vector<double>(nx, 0.0)});
        return out;
    }
    for (double t_snap : snapshot_schedule(t_final, snapshot_times)) {
        const double span = t_snap - t;
        const long steps = std::max(1L, std::lround(std::ceil(span / grid.dt)));
        const double h = span / steps;
        for (long s = 0; s < steps; ++s) {
            Eigen::VectorXd k1 = rate(t, u);
            Eigen::VectorXd k2 = rate(t + 0.5 * h, u + 0.5 * h * k1);
            Eigen::VectorXd k3 = rate(t + 0.5 * h, u + 0.5 * h * k2);
            Eigen::VectorXd k4 = rate(t + h, u + h * k3);
            u += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            t += h;
        }
        out.snapshots.push_back(
            {t, std::vector<double>(u.data(), u.data() + nx)});
    }
    return out;
}

}  // namespace halfline

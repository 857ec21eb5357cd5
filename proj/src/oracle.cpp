#include "barriertop/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <lapacke.h>
#include <numbers>
#include <stdexcept>

#include "barriertop/errors.hpp"

namespace barriertop {

namespace {
constexpr double kPi = std::numbers::pi;
}

double CappedPotential::operator()(double q) const {
    if (q > q_match) {
        const double d = q - q_match;
        return v_plus + dv_plus * d + 0.5 * k_c * d * d;
    }
    if (q < -q_match) {
        const double d = q + q_match;
        return v_minus + dv_minus * d + 0.5 * k_c * d * d;
    }
    return scaled_potential(base, q);
}

double CappedPotential::lower_bound() const {
    // each quadratic piece has vertex value V(s) - V'(s)^2/(2 k_c)
    double m = std::min(v_plus - dv_plus * dv_plus / (2.0 * k_c),
                        v_minus - dv_minus * dv_minus / (2.0 * k_c));
    // the core is a polynomial on a compact interval; sample densely
    for (int i = 0; i <= 400; ++i) {
        const double q = -q_match + 2.0 * q_match * i / 400.0;
        m = std::min(m, scaled_potential(base, q));
    }
    return m;
}

CappedPotential build_capped_potential(const BarrierParams& p, double q_match, double k_c) {
    if (!(q_match > 0.0)) throw std::domain_error("build_capped_potential: q_match must be positive");
    if (!(k_c > 0.0)) throw std::domain_error("build_capped_potential: k_c must be positive");
    CappedPotential cp;
    cp.base = p;
    cp.q_match = q_match;
    cp.k_c = k_c;
    cp.v_plus = scaled_potential(p, q_match);
    cp.v_minus = scaled_potential(p, -q_match);
    cp.dv_plus = scaled_potential_derivative(p, q_match);
    cp.dv_minus = scaled_potential_derivative(p, -q_match);
    return cp;
}

namespace {

// sinc-DVR kinetic matrix for H = -d^2/dq^2 on a uniform grid
Eigen::MatrixXd dvr_hamiltonian(const GridSpec& grid, const CappedPotential& pot) {
    const int N = grid.N;
    const double h = grid.h();
    Eigen::MatrixXd H(N, N);
    const double diag = kPi * kPi / (3.0 * h * h);
    for (int i = 0; i < N; ++i) {
        H(i, i) = diag + pot(grid.point(i));
        for (int j = 0; j < i; ++j) {
            const int d = i - j;
            const double sign = (d % 2 == 0) ? 1.0 : -1.0;
            const double t = sign * 2.0 / (h * h * d * d);
            H(i, j) = t;
            H(j, i) = t;
        }
    }
    return H;
}

} // namespace

ExactDensityGrid exact_density(const GridSpec& grid, const CappedPotential& pot,
                               double theta) {
    if (grid.N < 3) throw std::domain_error("exact_density: need at least 3 grid points");
    if (!(theta > 0.0)) throw std::domain_error("exact_density: theta must be positive");

    Eigen::MatrixXd H = dvr_hamiltonian(grid, pot);
    const int N = grid.N;
    Eigen::VectorXd w(N);
    const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', N, H.data(), N, w.data());
    if (info != 0) throw NumericalError("exact_density: eigensolver did not converge");

    ExactDensityGrid out;
    out.theta = theta;
    out.grid = grid;
    out.E0 = w(0);

    int kept = 0;
    while (kept < N && theta * (w(kept) - out.E0) <= 46.0) ++kept;
    out.modes_kept = kept;

    const double h = grid.h();
    Eigen::VectorXd weights(kept);
    for (int n = 0; n < kept; ++n) weights(n) = std::exp(-theta * (w(n) - out.E0));
    const auto U = H.leftCols(kept);
    out.rho_shifted = (U * weights.asDiagonal() * U.transpose()) / h;

    double bmax = 0.0;
    for (int n = 0; n < kept; ++n)
        bmax = std::max({bmax, std::abs(U(0, n)), std::abs(U(N - 1, n))});
    out.boundary_amplitude = bmax / std::sqrt(h);
    out.boundary_warning = out.boundary_amplitude > 1e-8;
    if (out.boundary_warning)
        std::cerr << "# warning: retained eigenfunction amplitude "
                  << out.boundary_amplitude << " at the grid boundary\n";
    return out;
}

ExactDensityGrid trotter_density(const GridSpec& grid, const CappedPotential& pot,
                                 double theta, int slices, double E0_shift) {
    if (slices < 2 || (slices & (slices - 1)) != 0)
        throw std::domain_error("trotter_density: slices must be a power of two >= 2");
    if (!(theta > 0.0)) throw std::domain_error("trotter_density: theta must be positive");

    const int N = grid.N;
    const double h = grid.h();
    const double tau = theta / slices;

    // symmetric split-step kernel: e^{-tau V/2} e^{-tau T} e^{-tau V/2},
    // free kernel for mass 1/2: sqrt(1/(4 pi tau)) exp(-x^2/(4 tau))
    Eigen::VectorXd half(N);
    for (int i = 0; i < N; ++i) half(i) = std::exp(-0.5 * tau * pot(grid.point(i)));
    const double norm = std::sqrt(1.0 / (4.0 * kPi * tau));

    Eigen::MatrixXd B(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j <= i; ++j) {
            const double x = grid.point(i) - grid.point(j);
            const double v = h * half(i) * norm * std::exp(-x * x / (4.0 * tau)) * half(j);
            B(i, j) = v;
            B(j, i) = v;
        }

    double logscale = 0.0;
    int steps = 0;
    for (int s = slices; s > 1; s /= 2) ++steps;
    for (int s = 0; s < steps; ++s) {
        Eigen::MatrixXd sq = B * B;
        const double m = sq.cwiseAbs().maxCoeff();
        if (!(m > 0.0) || !std::isfinite(m))
            throw NumericalError("trotter_density: kernel underflowed during squaring");
        B = sq / m;
        logscale = 2.0 * logscale + std::log(m);
    }

    ExactDensityGrid out;
    out.theta = theta;
    out.grid = grid;
    out.E0 = E0_shift;
    out.modes_kept = 0;
    out.rho_shifted = B * (std::exp(logscale + theta * E0_shift) / h);
    return out;
}

double ExactDensityGrid::diagonal_at(double q) const {
    const int N = grid.N;
    const double h = grid.h();
    if (q < grid.point(0) || q > grid.point(N - 1))
        throw std::invalid_argument("diagonal_at: point outside grid");
    // 4-point Lagrange interpolation on the diagonal
    int i1 = static_cast<int>(std::floor((q - grid.point(0)) / h));
    i1 = std::clamp(i1, 1, N - 3);
    const double t = (q - grid.point(i1)) / h; // in [0,1] away from the edges
    const double ym1 = rho_shifted(i1 - 1, i1 - 1);
    const double y0 = rho_shifted(i1, i1);
    const double y1 = rho_shifted(i1 + 1, i1 + 1);
    const double y2 = rho_shifted(i1 + 2, i1 + 2);
    const double c_m1 = -t * (t - 1.0) * (t - 2.0) / 6.0;
    const double c_0 = (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
    const double c_1 = -(t + 1.0) * t * (t - 2.0) / 2.0;
    const double c_2 = (t + 1.0) * t * (t - 1.0) / 6.0;
    return c_m1 * ym1 + c_0 * y0 + c_1 * y1 + c_2 * y2;
}

CompareMetrics compare_distributions(const std::vector<std::pair<double, double>>& semiclassical,
                                     const ExactDensityGrid& exact,
                                     double window_lo, double window_hi) {
    if (window_lo >= window_hi)
        throw std::invalid_argument("compare_distributions: empty window");
    if (window_lo < exact.grid.point(0) || window_hi > exact.grid.point(exact.grid.N - 1))
        throw std::invalid_argument("compare_distributions: window outside grid");

    // semiclassical normalization point P(0): exact entry or linear interpolation
    double p0 = 0.0;
    bool found = false;
    for (std::size_t i = 0; i < semiclassical.size(); ++i) {
        if (std::abs(semiclassical[i].first) < 1e-12) {
            p0 = semiclassical[i].second;
            found = true;
            break;
        }
        if (i + 1 < semiclassical.size() && semiclassical[i].first < 0.0 &&
            semiclassical[i + 1].first > 0.0) {
            const auto [qa, pa] = semiclassical[i];
            const auto [qb, pb] = semiclassical[i + 1];
            p0 = pa + (pb - pa) * (0.0 - qa) / (qb - qa);
            found = true;
            break;
        }
    }
    if (!found || !(p0 > 0.0))
        throw std::invalid_argument("compare_distributions: cannot normalize at q = 0");
    const double e0 = exact.diagonal_at(0.0);

    CompareMetrics m;
    int count = 0;
    for (const auto& [q, P] : semiclassical) {
        if (q < window_lo || q > window_hi) continue;
        const double pe = exact.diagonal_at(q) / e0;
        const double ps = P / p0;
        const double rel = std::abs(ps - pe) / std::abs(pe);
        m.max_rel = std::max(m.max_rel, rel);
        m.mean_rel += rel;
        ++count;
    }
    if (count == 0) throw std::invalid_argument("compare_distributions: no points in window");
    m.mean_rel /= count;
    return m;
}

} // namespace barriertop

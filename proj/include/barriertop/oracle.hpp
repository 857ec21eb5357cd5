#pragma once

// Numerically exact reference density matrix for validation: grid
// diagonalization of the capped-barrier Hamiltonian H = -d^2/dq^2 + V(q)
// (mass 1/2 in the scaled units) on a sinc-DVR grid, plus a Trotter
// matrix-squaring cross-check.

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "barriertop/model.hpp"

namespace barriertop {

struct GridSpec {
    double L = 15.0; // half width, grid on [-L, L]
    int N = 1500;    // number of points, N >= 3

    double h() const { return 2.0 * L / (N - 1); }
    double point(int i) const { return -L + i * h(); }
};

// The barrier potential continued outside [-q_match, q_match] by upward
// quadratic pieces, C^1 at the seams:
//   V(q) = V(s) + V'(s)(q - s) + (k_c/2)(q - s)^2,  s = +-q_match.
// Equals the barrier potential exactly inside and is bounded below, so
// e^{-theta H} exists without the remote wells dominating.
struct CappedPotential {
    BarrierParams base;
    double q_match = 8.0;
    double k_c = 1.0;
    double v_plus = 0.0, v_minus = 0.0;   // V(+-q_match)
    double dv_plus = 0.0, dv_minus = 0.0; // V'(+-q_match)

    double operator()(double q) const;
    double lower_bound() const; // min over both quadratic continuations and the core
};

CappedPotential build_capped_potential(const BarrierParams& p, double q_match,
                                       double k_c = 1.0);

// rho_shifted(i,j) = sum_n e^{-theta (E_n - E0)} psi_n(q_i) psi_n(q_j);
// symmetric, positive semidefinite, diagonal strictly positive.
struct ExactDensityGrid {
    double theta = 0.0;
    GridSpec grid;
    Eigen::MatrixXd rho_shifted;
    double E0 = 0.0;
    int modes_kept = 0;
    double boundary_amplitude = 0.0; // max |psi_n(+-L)| over retained modes
    bool boundary_warning = false;   // set when boundary_amplitude > 1e-8

    // diagonal interpolated at q (cubic), i.e. the unnormalized P(q)
    double diagonal_at(double q) const;
};

// Dense symmetric eigensolve of the sinc-DVR Hamiltonian; modes with
// theta (E_n - E0) > 46 are dropped.
ExactDensityGrid exact_density(const GridSpec& grid, const CappedPotential& pot,
                               double theta);

// Symmetric split-step short-time kernel composed by repeated matrix
// squaring (slices a power of two >= 2), with per-squaring rescaling.
// E0_shift is applied so the result is comparable to exact_density's
// shifted kernel; agreement is O(1/slices^2).
ExactDensityGrid trotter_density(const GridSpec& grid, const CappedPotential& pot,
                                 double theta, int slices, double E0_shift = 0.0);

struct CompareMetrics {
    double max_rel = 0.0;
    double mean_rel = 0.0;
};

// Both distributions are normalized by their value at q = 0 (removing the
// Z and energy-shift conventions), then compared pointwise on the window.
CompareMetrics compare_distributions(const std::vector<std::pair<double, double>>& semiclassical,
                                     const ExactDensityGrid& exact,
                                     double window_lo, double window_hi);

} // namespace barriertop

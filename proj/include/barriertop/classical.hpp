#pragma once

// Classical mechanics in the inverted barrier: Fourier-mode equations of
// motion, the cubic equation for the marginal mode amplitude, bifurcation
// geometry, and the minimal action kept to order 1 near the critical
// temperature theta = pi.

#include <utility>
#include <vector>

#include "barriertop/model.hpp"

namespace barriertop {

// ---------------------------------------------------------------------------
// mode data

// lambda_k = (pi k / theta)^2 - 1
double mode_eigenvalue(double theta, int k);

// b_k = (2 pi k / theta) [q - (-1)^k q'], i.e. 4 pi k r/theta for odd k
// and 2 pi k z/theta for even k.
double mode_source(double theta, const Endpoints& ep, int k);

// D_{k1...kn} = 2 int_0^1 prod_j sin(pi k_j x) dx, computed exactly by
// product-to-sum expansion of the sine product (no quadrature error).
// Symmetric in the indices; obeys the parity selection rule
// (zero when n even and sum k_i odd, or n odd and sum k_i even).
double overlap_coefficient(const std::vector<int>& indices);

// ---------------------------------------------------------------------------
// cubic amplitude equation and its geometry

enum class Stability { stable, unstable };

// One real root Q of the scaled cubic
//   3 a4 Q^3 + (16/3pi) a3 eps^{-1/3} Q^2 + lambda1 eps^{-2/3} Q = (2pi/theta^2) r,
// where Q = eps^{2/3} Q_1 / (2 theta). Stable iff the derivative of
// (LHS - RHS) in Q is positive there.
struct CubicSolution {
    double Q;
    Stability stability;
    bool stable() const { return stability == Stability::stable; }
};

// All real roots at a given (theta, r), ascending in Q. One or three
// distinct roots except exactly on the bifurcation curves (two, one
// of them degenerate).
struct BranchSet {
    std::vector<CubicSolution> solutions;
    double theta = 0.0;
    double r = 0.0;
};

// Critical point of the perturbed bifurcation problem:
//   Q_c = -16 a3/(27 pi a4) eps^{-1/3},  lambda_c = 9 a4 Q_c^2 eps^{2/3}
//   r_c = (3 a4 theta^2 / 2 pi) Q_c^3,   lambda_0 = (3/4) lambda_c,  Q_0 = (3/2) Q_c.
// For a3 = 0 everything collapses to zero (symmetric pitchfork).
struct CriticalData {
    double lambda_c = 0.0;
    double r_c = 0.0;
    double Q_c = 0.0;
    double lambda_0 = 0.0;
    double Q_0 = 0.0;
    double theta = 0.0; // the theta at which r_c was evaluated
};

// r_c carries an explicit theta^2 factor; by default it is evaluated
// self-consistently at the critical temperature theta(lambda_c). The
// at_query policy substitutes the caller's theta instead.
enum class ThetaPolicy { at_critical, at_query };

CriticalData critical_point(const BarrierParams& p,
                            ThetaPolicy policy = ThetaPolicy::at_critical,
                            double theta_query = 0.0);

// Bifurcation curves r_pm(lambda1) = r_c [3 lambda1/lambda_c - 2
// +- 2 (1 - lambda1/lambda_c)^{3/2}]; real only for lambda1 <= lambda_c
// (throws std::domain_error above). The cubic has three real roots for r
// strictly between the two curves and one outside.
std::pair<double, double> bifurcation_boundaries(const BarrierParams& p, double lambda1);

// Line r_e(lambda1) = r_c (3 lambda1/lambda_c - 2) along which Q = Q_c
// is always a root of the cubic.
double line_re(const BarrierParams& p, double lambda1);

// Closed-form roots (Cardano/trigonometric) with one Newton polish each;
// residuals <= 1e-12 relative to the coefficient scale. Degenerate pairs
// within the classification band are collapsed.
BranchSet solve_cubic(const BarrierParams& p, double theta, double r);

// ---------------------------------------------------------------------------
// mode vectors and actions

// Fourier amplitudes of the classical path, q(s) = (1/theta) sum Q_k sin(pi k s/theta).
// amplitudes[k-1] holds Q_k.
struct ModeVector {
    double theta = 0.0;
    std::vector<double> amplitudes;

    int kmax() const { return static_cast<int>(amplitudes.size()); }
    double Q(int k) const { return amplitudes.at(static_cast<std::size_t>(k) - 1); }
};

// Q_k = [b_k - a3 (eps/theta) D_{11k} Q1^2 - a4 (eps/theta)^2 D_{111k} Q1^3] / lambda_k
// for k >= 2 (Q1 passed through unchanged). Requires lambda_k != 0 for all
// 2 <= k <= kmax, i.e. theta < 2 pi.
ModeVector higher_modes(const BarrierParams& p, double theta, const Endpoints& ep,
                        double Q1, int kmax);

// Harmonic minimal action, valid for 0 < theta < pi:
//   S = -(r^2/2) tan(theta/2) + (z^2/8) cot(theta/2)
double harmonic_action(double theta, double z, double r);

// Minimal action as a function of the scaled marginal amplitude Q, keeping
// every contribution of order 1 near theta = pi (consumes a3..a6; higher
// coefficients affect only the full-mode solver, not this formula).
// Valid for theta in (0, 2pi); the removable 0/0 structures at theta = pi
// are evaluated by series. Throws std::domain_error outside the window.
double classical_action(const BarrierParams& p, double theta, double z, double r, double Q);

// Coefficient functions of the order-1 action, exposed for tests.
// cap_lambda multiplies r^2/theta, cap_omega multiplies z^2/theta;
// cap_lambda -> 3/2 and cap_omega -> 0 as theta -> pi.
double action_coeff_lambda(double theta);
double action_coeff_omega(double theta);
// Sum of squared three-mode overlaps over the driven modes,
// C33 = sum_{k odd >= 3} D_{11k}^2 / lambda_k.
double action_coeff_c33(double theta);
// Source-overlap resummation entering the a3 r Q^2 term,
// B3(theta, r) = sum_{k odd >= 3} D_{11k} b_k / lambda_k.
double action_coeff_b3(double theta, double r);

// Exact action of the truncated Fourier path: boundary term, per-mode
// quadratic terms for k <= kmax, anharmonic sums (all stored a_n) truncated
// at k <= kmax, evaluated without quadrature error. With harmonic_tail the
// modes beyond kmax are completed by their harmonic values b_k/lambda_k and
// the tail is resummed in closed form (digamma), removing the O(1/kmax)
// truncation error of the quadratic part.
double action_functional(const BarrierParams& p, double theta, const Endpoints& ep,
                         const ModeVector& modes, bool harmonic_tail = true);

// Newton iteration on the kmax-dimensional truncation of the full
// equations of motion lambda_k Q_k = b_k - sum_n a_n (eps/theta)^{n-2}
// sum D_{...k} Q..Q, started from init (e.g. the cubic reduction).
// Converges to residual inf-norm <= 1e-10 or throws NumericalError.
ModeVector solve_full_modes(const BarrierParams& p, double theta, const Endpoints& ep,
                            int kmax, const ModeVector& init);

// Residual of the truncated equations of motion at the given modes (inf-norm).
double mode_equation_residual(const BarrierParams& p, double theta, const Endpoints& ep,
                              const ModeVector& modes);

// Scaled amplitude Q = eps^{2/3} Q1 / (2 theta) of a mode vector.
double scaled_amplitude(const BarrierParams& p, const ModeVector& modes);

} // namespace barriertop

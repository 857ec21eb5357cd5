#pragma once

// Quantum fluctuations about the classical paths: the marginal-mode
// coefficient Lambda_1(Q), the quartic fluctuation potential, its extrema,
// the one-dimensional marginal-mode integral K(Q), and the harmonic
// fluctuation prefactor.

#include <vector>

#include "barriertop/classical.hpp"
#include "barriertop/model.hpp"

namespace barriertop {

// Lambda_1(Q) = lambda1 - lambda_c + 9 a4 eps^{2/3} (Q - Q_c)^2.
// Vanishes at the critical point; equals eps^{2/3} times the Q-derivative
// of the cubic's left-minus-right side, so its sign is the branch stability.
double lambda1_coeff(const BarrierParams& p, const CriticalData& crit,
                     double lambda1, double Q);
double lambda1_coeff(const BarrierParams& p, double lambda1, double Q);

// Fluctuation potential of the marginal mode, regrouped as
//   V(Q, Y1) = c2 Y1^2 + c3 Y1^3 + c4 Y1^4
// with c2 = Lambda_1(Q)/(8 theta), c3 = 3 a4 eps^{4/3} (Q - Q_c)/(8 theta^2),
// c4 = 3 a4 eps^2 / (64 theta^3) > 0 whenever a4 > 0.
struct FluctuationPotentialSpec {
    double theta = 0.0;
    double lambda1 = 0.0;
    double Q = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double c4 = 0.0;
};

FluctuationPotentialSpec make_fluctuation_spec(const BarrierParams& p,
                                               const CriticalData& crit,
                                               double theta, double Q);
FluctuationPotentialSpec make_fluctuation_spec(const BarrierParams& p,
                                               double theta, double Q);

double fluc_potential(const FluctuationPotentialSpec& spec, double Y1);

// Stationary points of V(Q, Y1). Always contains 0; the off-origin pair
// appears when 9 c3^2 - 32 c2 c4 >= 0. Each returned Y satisfies
// dV/dY1 = 0 to within 1e-10. After the shift Q + eps^{2/3} Y/(2 theta)
// the extrema are roots of the cubic amplitude equation.
std::vector<double> fluc_extrema(const FluctuationPotentialSpec& spec);

// Marginal-mode integral K(Q) = sqrt(1/(8 pi theta)) int dY1 exp(-V(Q,Y1)).
struct MarginalIntegral {
    double value = 0.0;
    double quadrature_error = 0.0;
    double truncation_bound = 0.0;
};

// Adaptive Gauss-Kronrod on [-B, B] with B chosen so V(+-B) >= 46
// (integrand below 1e-20); relative error <= 1e-10 or NumericalError.
// The pure-Gaussian case c3 = c4 = 0, c2 > 0 is evaluated in closed form
// (K = Lambda_1^{-1/2}); c4 < 0, or c4 = 0 with a divergent remainder,
// is a domain error.
MarginalIntegral marginal_integral(const FluctuationPotentialSpec& spec);

// High-temperature fluctuation prefactor [4 pi sin(theta)]^{-1/2},
// 0 < theta < pi (singular at the critical temperature).
double harmonic_prefactor(double theta);

// Prefactor of the general near-critical result, sqrt(lambda1/(4 pi sin theta)),
// continued through theta = pi by series (limit 1/(pi sqrt 2)). Valid on
// (0, 2pi) where lambda1 and sin(theta) change sign together.
double critical_prefactor(double theta);

// Coefficient of Y1^2 in the second variation (times 8 theta), for a full
// mode vector: lambda1 + sum_{n=3,4} a_n (n-1) (eps/theta)^{n-2}
// sum D_{k1..k_{n-2} 1 1} Q_{k1}..Q_{k_{n-2}}. With the single mode
// Q1 = 2 theta Q eps^{-2/3} this equals Lambda_1(Q) identically.
double frechet2_coefficient(const BarrierParams& p, double theta, const ModeVector& modes);

} // namespace barriertop

#pragma once

// Assembly of the semiclassical equilibrium density matrix rho_theta(z, r):
// regime selection and the individual regime formulas, plus the diagonal
// position distribution P(q). Normalization convention Z = 1 throughout.

#include <optional>
#include <string>
#include <vector>

#include "barriertop/classical.hpp"
#include "barriertop/fluctuations.hpp"
#include "barriertop/model.hpp"

namespace barriertop {

enum class RegimeTag {
    high_temperature, // harmonic result, theta well below pi
    gaussian_single,  // single branch, Gaussian fluctuations
    critical,         // full quartic fluctuation potential (caustic region)
    two_branch,       // two stable branches, comparable actions
    dominant_branch,  // two stable branches, one action smaller by >= 1
};

const char* to_string(RegimeTag tag);

// Per-branch audit record.
struct BranchAction {
    double Q = 0.0;
    Stability stability = Stability::stable;
    double action = 0.0;
    double Lambda1 = 0.0;
};

struct SemiclassicalDensity {
    double value = 0.0;
    RegimeTag regime = RegimeTag::high_temperature;
    double prefactor = 0.0; // the sqrt(...) factor outside the branch sum
    std::vector<BranchAction> actions;
    std::optional<double> K_value;
};

// Harmonic (inverted-oscillator) density matrix, 0 < theta < pi:
//   rho = (4 pi sin theta)^{-1/2} exp[-(r^2/2) tan(theta/2) + (z^2/8) cot(theta/2)]
SemiclassicalDensity rho_high_t(double theta, double z, double r);

// Single-branch Gaussian result sqrt(lambda1/(4 pi sin theta Lambda1(Q))) e^{-S}.
// Domain error if Lambda1(Q) <= 0.
SemiclassicalDensity rho_gaussian(const BarrierParams& p, double theta, double z,
                                  double r, const CubicSolution& branch);

// General near-critical result sqrt(lambda1/(4 pi sin theta)) K(Q) e^{-S};
// independent of the branch inserted, up to higher-order corrections.
SemiclassicalDensity rho_critical(const BarrierParams& p, double theta, double z,
                                  double r, const CubicSolution& branch);

// Sum of two Gaussian branch contributions (both stable, Lambda1 > 0 each).
SemiclassicalDensity rho_two_branch(const BarrierParams& p, double theta, double z,
                                    double r, const CubicSolution& qs1,
                                    const CubicSolution& qs2);

// Single-branch Gaussian formula at the smaller-action stable branch;
// requires two stable branches with action difference >= 1.
SemiclassicalDensity rho_dominant(const BarrierParams& p, double theta, double z,
                                  double r, const BranchSet& branches);

// Regime decision at threshold kappa * eps on |Lambda1(Q)| (ties resolve
// toward critical, the formula with the widest validity).
std::pair<RegimeTag, BranchSet> select_regime(const BarrierParams& p, double theta,
                                              double z, double r, double kappa);

// Dispatcher: selects the regime and evaluates the corresponding formula,
// returning the full audit record. kappa defaults to 10.
SemiclassicalDensity density(const BarrierParams& p, double theta, double z, double r,
                             double kappa = 10.0);

// Diagonal distribution P(q) = rho(z = 0, r = q).
double position_distribution(const BarrierParams& p, double theta, double q,
                             double kappa = 10.0);

// Every regime formula evaluated unconditionally at one point, for the
// overlay curves of the distribution sweep. A column is clamped (to `clamp`,
// with its bit set in clamped_mask) when the formula's precondition fails,
// the value is not finite, or it exceeds the clamp.
struct FormulaColumns {
    double high_t = 0.0;
    double gaussian = 0.0;
    double critical = 0.0;
    double two_branch = 0.0;
    double dominant = 0.0;
    unsigned clamped_mask = 0; // 1=high_t 2=gaussian 4=critical 8=two_branch 16=dominant
};

FormulaColumns evaluate_all_formulas(const BarrierParams& p, double theta, double z,
                                     double r, double kappa, double clamp = 1e12);

} // namespace barriertop

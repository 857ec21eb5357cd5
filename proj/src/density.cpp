#include "barriertop/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "barriertop/errors.hpp"

namespace barriertop {

namespace {
constexpr double kPi = std::numbers::pi;
}

const char* to_string(RegimeTag tag) {
    switch (tag) {
        case RegimeTag::high_temperature: return "high_temperature";
        case RegimeTag::gaussian_single: return "gaussian_single";
        case RegimeTag::critical: return "critical";
        case RegimeTag::two_branch: return "two_branch";
        case RegimeTag::dominant_branch: return "dominant_branch";
    }
    return "?";
}

SemiclassicalDensity rho_high_t(double theta, double z, double r) {
    SemiclassicalDensity out;
    out.regime = RegimeTag::high_temperature;
    out.prefactor = harmonic_prefactor(theta); // throws for theta >= pi
    const double S = harmonic_action(theta, z, r);
    out.actions.push_back(BranchAction{0.0, Stability::stable, S, 0.0});
    out.value = out.prefactor * std::exp(-S);
    return out;
}

namespace {

BranchAction make_branch_action(const BarrierParams& p, const CriticalData& crit,
                                double theta, double z, double r,
                                const CubicSolution& branch) {
    BranchAction ba;
    ba.Q = branch.Q;
    ba.stability = branch.stability;
    ba.action = classical_action(p, theta, z, r, branch.Q);
    ba.Lambda1 = lambda1_coeff(p, crit, lambda1_from_theta(theta), branch.Q);
    return ba;
}

} // namespace

SemiclassicalDensity rho_gaussian(const BarrierParams& p, double theta, double z,
                                  double r, const CubicSolution& branch) {
    const CriticalData crit = critical_point(p);
    SemiclassicalDensity out;
    out.regime = RegimeTag::gaussian_single;
    BranchAction ba = make_branch_action(p, crit, theta, z, r, branch);
    if (!(ba.Lambda1 > 0.0))
        throw std::domain_error("rho_gaussian: Lambda1(Q) must be positive");
    out.prefactor = critical_prefactor(theta);
    out.actions.push_back(ba);
    out.value = out.prefactor / std::sqrt(ba.Lambda1) * std::exp(-ba.action);
    return out;
}

SemiclassicalDensity rho_critical(const BarrierParams& p, double theta, double z,
                                  double r, const CubicSolution& branch) {
    const CriticalData crit = critical_point(p);
    SemiclassicalDensity out;
    out.regime = RegimeTag::critical;
    BranchAction ba = make_branch_action(p, crit, theta, z, r, branch);
    out.prefactor = critical_prefactor(theta);
    const MarginalIntegral K = marginal_integral(make_fluctuation_spec(p, crit, theta, branch.Q));
    out.K_value = K.value;
    out.actions.push_back(ba);
    out.value = out.prefactor * K.value * std::exp(-ba.action);
    return out;
}

SemiclassicalDensity rho_two_branch(const BarrierParams& p, double theta, double z,
                                    double r, const CubicSolution& qs1,
                                    const CubicSolution& qs2) {
    if (!qs1.stable() || !qs2.stable())
        throw std::domain_error("rho_two_branch: both branches must be stable");
    const CriticalData crit = critical_point(p);
    SemiclassicalDensity out;
    out.regime = RegimeTag::two_branch;
    out.prefactor = critical_prefactor(theta);
    double sum = 0.0;
    for (const CubicSolution* b : {&qs1, &qs2}) {
        BranchAction ba = make_branch_action(p, crit, theta, z, r, *b);
        if (!(ba.Lambda1 > 0.0))
            throw std::domain_error("rho_two_branch: Lambda1 must be positive on both branches");
        sum += std::exp(-ba.action) / std::sqrt(ba.Lambda1);
        out.actions.push_back(ba);
    }
    out.value = out.prefactor * sum;
    return out;
}

SemiclassicalDensity rho_dominant(const BarrierParams& p, double theta, double z,
                                  double r, const BranchSet& branches) {
    const CriticalData crit = critical_point(p);
    std::vector<BranchAction> stable;
    for (const CubicSolution& b : branches.solutions)
        if (b.stable()) stable.push_back(make_branch_action(p, crit, theta, z, r, b));
    if (stable.size() != 2)
        throw std::domain_error("rho_dominant: requires exactly two stable branches");
    if (std::abs(stable[0].action - stable[1].action) < 1.0)
        throw std::domain_error("rho_dominant: action difference below 1");
    const BranchAction& win =
        (stable[0].action <= stable[1].action) ? stable[0] : stable[1];
    if (!(win.Lambda1 > 0.0))
        throw std::domain_error("rho_dominant: Lambda1 must be positive");
    SemiclassicalDensity out;
    out.regime = RegimeTag::dominant_branch;
    out.prefactor = critical_prefactor(theta);
    out.actions.push_back(win);
    out.value = out.prefactor / std::sqrt(win.Lambda1) * std::exp(-win.action);
    return out;
}

std::pair<RegimeTag, BranchSet> select_regime(const BarrierParams& p, double theta,
                                              double z, double r, double kappa) {
    if (!(kappa > 0.0)) throw std::domain_error("select_regime: kappa must be positive");
    const BranchSet bs = solve_cubic(p, theta, r);
    const CriticalData crit = critical_point(p);
    const double lam1 = lambda1_from_theta(theta);
    const double threshold = kappa * p.epsilon;

    bool any_marginal = false;
    for (const CubicSolution& b : bs.solutions)
        if (std::abs(lambda1_coeff(p, crit, lam1, b.Q)) <= threshold) any_marginal = true;
    if (any_marginal) return {RegimeTag::critical, bs};

    std::vector<const CubicSolution*> stable;
    for (const CubicSolution& b : bs.solutions)
        if (b.stable()) stable.push_back(&b);

    if (bs.solutions.size() == 1) {
        return {theta < 0.5 * kPi ? RegimeTag::high_temperature : RegimeTag::gaussian_single, bs};
    }
    if (stable.size() == 2) {
        const double s1 = classical_action(p, theta, z, r, stable[0]->Q);
        const double s2 = classical_action(p, theta, z, r, stable[1]->Q);
        return {std::abs(s1 - s2) < 1.0 ? RegimeTag::two_branch : RegimeTag::dominant_branch, bs};
    }
    // degenerate two-root sets land here; the touching pair is marginal by
    // construction, treat as critical
    return {RegimeTag::critical, bs};
}

namespace {

// the branch whose |Lambda1| is smallest: inside the caustic region every
// branch gives the same answer to the computed order, this one is the most
// symmetric choice and keeps the dispatcher deterministic
CubicSolution most_marginal_branch(const BarrierParams& p, const CriticalData& crit,
                                   double theta, const BranchSet& bs) {
    const double lam1 = lambda1_from_theta(theta);
    const CubicSolution* best = &bs.solutions.front();
    double bestAbs = std::numeric_limits<double>::infinity();
    for (const CubicSolution& b : bs.solutions) {
        const double la = std::abs(lambda1_coeff(p, crit, lam1, b.Q));
        if (la < bestAbs) {
            bestAbs = la;
            best = &b;
        }
    }
    return *best;
}

} // namespace

SemiclassicalDensity density(const BarrierParams& p, double theta, double z, double r,
                             double kappa) {
    auto [tag, bs] = select_regime(p, theta, z, r, kappa);
    const CriticalData crit = critical_point(p);
    switch (tag) {
        case RegimeTag::high_temperature:
            return rho_high_t(theta, z, r);
        case RegimeTag::gaussian_single:
            return rho_gaussian(p, theta, z, r, bs.solutions.front());
        case RegimeTag::critical:
            return rho_critical(p, theta, z, r, most_marginal_branch(p, crit, theta, bs));
        case RegimeTag::two_branch:
        case RegimeTag::dominant_branch: {
            std::vector<CubicSolution> stable;
            for (const CubicSolution& b : bs.solutions)
                if (b.stable()) stable.push_back(b);
            if (tag == RegimeTag::two_branch)
                return rho_two_branch(p, theta, z, r, stable.at(0), stable.at(1));
            return rho_dominant(p, theta, z, r, bs);
        }
    }
    throw NumericalError("density: unreachable regime");
}

double position_distribution(const BarrierParams& p, double theta, double q, double kappa) {
    return density(p, theta, 0.0, q, kappa).value;
}

FormulaColumns evaluate_all_formulas(const BarrierParams& p, double theta, double z,
                                     double r, double kappa, double clamp) {
    FormulaColumns cols;
    const BranchSet bs = solve_cubic(p, theta, r);

    const auto clamped = [clamp](double v, bool bad) {
        return (bad || !std::isfinite(v) || v > clamp) ? clamp : v;
    };

    // high-temperature column
    {
        bool bad = false;
        double v = 0.0;
        try {
            v = rho_high_t(theta, z, r).value;
        } catch (const std::domain_error&) {
            bad = true;
        }
        cols.high_t = clamped(v, bad);
        if (cols.high_t == clamp) cols.clamped_mask |= 1u;
    }
    // Gaussian column: the branch of smallest |Q| (harmonic continuation)
    {
        bool bad = false;
        double v = 0.0;
        const CubicSolution* pick = &bs.solutions.front();
        for (const CubicSolution& b : bs.solutions)
            if (std::abs(b.Q) < std::abs(pick->Q)) pick = &b;
        try {
            v = rho_gaussian(p, theta, z, r, *pick).value;
        } catch (const std::exception&) {
            bad = true;
        }
        cols.gaussian = clamped(v, bad);
        if (cols.gaussian == clamp) cols.clamped_mask |= 2u;
    }
    // critical column
    {
        bool bad = false;
        double v = 0.0;
        try {
            const CriticalData crit = critical_point(p);
            v = rho_critical(p, theta, z, r, most_marginal_branch(p, crit, theta, bs)).value;
        } catch (const std::exception&) {
            bad = true;
        }
        cols.critical = clamped(v, bad);
        if (cols.critical == clamp) cols.clamped_mask |= 4u;
    }
    // two-branch and dominant columns need two stable branches
    {
        std::vector<CubicSolution> stable;
        for (const CubicSolution& b : bs.solutions)
            if (b.stable()) stable.push_back(b);
        bool bad2 = stable.size() != 2, badd = stable.size() != 2;
        double v2 = 0.0, vd = 0.0;
        if (!bad2) {
            try {
                v2 = rho_two_branch(p, theta, z, r, stable[0], stable[1]).value;
            } catch (const std::exception&) {
                bad2 = true;
            }
        }
        if (!badd) {
            try {
                const CriticalData crit = critical_point(p);
                BranchAction a0 = make_branch_action(p, crit, theta, z, r, stable[0]);
                BranchAction a1 = make_branch_action(p, crit, theta, z, r, stable[1]);
                const BranchAction& win = (a0.action <= a1.action) ? a0 : a1;
                if (!(win.Lambda1 > 0.0)) throw std::domain_error("Lambda1 <= 0");
                vd = critical_prefactor(theta) / std::sqrt(win.Lambda1) * std::exp(-win.action);
            } catch (const std::exception&) {
                badd = true;
            }
        }
        cols.two_branch = clamped(v2, bad2);
        if (cols.two_branch == clamp) cols.clamped_mask |= 8u;
        cols.dominant = clamped(vd, badd);
        if (cols.dominant == clamp) cols.clamped_mask |= 16u;
    }
    return cols;
}

} // namespace barriertop

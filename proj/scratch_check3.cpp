// scratch: kmax dependence of the reduction gap, plus density checks
#include <cmath>
#include <cstdio>
#include <numbers>

#include "barriertop/classical.hpp"
#include "barriertop/density.hpp"
#include "barriertop/fluctuations.hpp"
#include "barriertop/model.hpp"

using namespace barriertop;

int main() {
    const double pi = std::numbers::pi;

    std::printf("== kmax dependence of dQ at eps=0.001, r=r_c ==\n");
    for (double eps : {0.01, 0.001}) {
        BarrierParams p = BarrierParams::cubic_quartic(0.2, 1.0, eps);
        const CriticalData cd = critical_point(p);
        const double l1 = 0.5 * cd.lambda_c;
        const double theta = theta_from_lambda1(l1);
        const double r = cd.r_c;
        Endpoints ep = Endpoints::from_rz(r, 0.0);
        BranchSet bs = solve_cubic(p, theta, r);
        const auto& b = bs.solutions.front();
        for (int kmax : {16, 32, 64, 128}) {
            ModeVector init = higher_modes(p, theta, ep,
                                           2.0 * theta * b.Q * std::pow(eps, -2.0 / 3.0), kmax);
            ModeVector full = solve_full_modes(p, theta, ep, kmax, init);
            std::printf("eps=%.3f kmax=%3d dQ=%+.6e dS=%+.6e\n", eps, kmax,
                        scaled_amplitude(p, full) - b.Q,
                        action_functional(p, theta, ep, full) -
                            classical_action(p, theta, 0.0, r, b.Q));
        }
    }

    std::printf("== criterion 6: harmonic density ==\n");
    {
        BarrierParams p;
        p.epsilon = 0.01; // all a_n zero
        double worst = 0.0;
        for (double theta : {0.3, 1.0, 2.0, 3.0})
            for (double r : {-2.0, -0.7, 0.0, 1.3, 2.0})
                for (double z : {-1.5, 0.0, 0.8, 2.0}) {
                    const SemiclassicalDensity d = density(p, theta, z, r);
                    const double ref = harmonic_prefactor(theta) *
                                       std::exp(-harmonic_action(theta, z, r));
                    worst = std::max(worst, std::abs(d.value - ref) / ref);
                }
        std::printf("max rel deviation from closed form: %.3e\n", worst);
    }

    std::printf("== criterion 8: branch independence of rho_critical ==\n");
    for (double eps : {0.01, 0.001}) {
        BarrierParams p = BarrierParams::cubic_quartic(0.2, 1.0, eps);
        const CriticalData cd = critical_point(p);
        double worst = 0.0;
        for (int i = 0; i < 5; ++i) {
            const double l1 = cd.lambda_c * (0.2 + 0.15 * i);
            const double theta = theta_from_lambda1(l1);
            auto [rm, rp] = bifurcation_boundaries(p, l1);
            const double lo = std::min(rm, rp), hi = std::max(rm, rp);
            const double r = lo + (hi - lo) * 0.5;
            BranchSet bs = solve_cubic(p, theta, r);
            if (bs.solutions.size() != 3) { std::printf("  (2 roots at i=%d)\n", i); continue; }
            double vmin = 1e300, vmax = -1e300;
            for (const auto& b : bs.solutions) {
                const double v = rho_critical(p, theta, 0.1, r, b).value;
                vmin = std::min(vmin, v);
                vmax = std::max(vmax, v);
            }
            worst = std::max(worst, (vmax - vmin) / vmin);
        }
        std::printf("eps=%.3f max relative spread = %.4f (allowance 5 sqrt(eps) = %.3f)\n", eps,
                    worst, 5.0 * std::sqrt(eps));
    }

    std::printf("== criterion 9: seams ==\n");
    {
        BarrierParams p = BarrierParams::cubic_quartic(0.2, 1.0, 0.01);
        const CriticalData cd = critical_point(p);
        // gaussian seam at Lambda1 = 20 eps along r_e
        const double l1 = cd.lambda_c + 20.0 * p.epsilon;
        const double theta = theta_from_lambda1(l1);
        const double r = line_re(p, l1);
        BranchSet bs = solve_cubic(p, theta, r);
        std::printf("roots=%zu Q=%.5f (Q_c=%.5f)\n", bs.solutions.size(), bs.solutions[0].Q,
                    cd.Q_c);
        for (double z : {0.0, 0.5}) {
            const double vc = rho_critical(p, theta, z, r, bs.solutions[0]).value;
            const double vg = rho_gaussian(p, theta, z, r, bs.solutions[0]).value;
            std::printf("z=%.1f  critical=%.8f gaussian=%.8f rel=%.4e\n", z, vc, vg,
                        std::abs(vc - vg) / vg);
        }
        // two-branch seam: find dS ~ 0 locus at lambda1 = -6 lambda_0-ish
        auto dS_at = [&](double l1q, double rq) {
            const double th = theta_from_lambda1(l1q);
            BranchSet b = solve_cubic(p, th, rq);
            double s[2];
            int i = 0;
            for (const auto& x : b.solutions)
                if (x.stable()) s[i++] = classical_action(p, th, 0.0, rq, x.Q);
            return s[1] - s[0];
        };
        const double l1q = -0.06;
        const double thq = theta_from_lambda1(l1q);
        auto [rm, rp] = bifurcation_boundaries(p, l1q);
        double lo = std::min(rm, rp) + 0.02 * std::abs(rm - rp);
        double hi = std::max(rm, rp) - 0.02 * std::abs(rm - rp);
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (dS_at(l1q, mid) > 0.0 == (dS_at(l1q, hi) > 0.0)) hi = mid;
            else lo = mid;
        }
        const double rstar = 0.5 * (lo + hi);
        BranchSet b = solve_cubic(p, thq, rstar);
        std::printf("dS=0 at r*=%.6f (band %.4f..%.4f)\n", rstar, std::min(rm, rp),
                    std::max(rm, rp));
        const CubicSolution* st[2];
        int i = 0;
        for (const auto& x : b.solutions)
            if (x.stable()) st[i++] = &x;
        for (const auto* x : st)
            std::printf("  stable Q=%.5f Lambda1=%.5f (20eps=0.2)\n", x->Q,
                        lambda1_coeff(p, lambda1_from_theta(thq), x->Q));
        const double v2 = rho_two_branch(p, thq, 0.0, rstar, *st[0], *st[1]).value;
        const double vc = rho_critical(p, thq, 0.0, rstar, *st[0]).value;
        const double vc2 = rho_critical(p, thq, 0.0, rstar, *st[1]).value;
        std::printf("two_branch=%.8f critical(b1)=%.8f critical(b2)=%.8f rel=%.4e / %.4e\n", v2,
                    vc, vc2, std::abs(vc - v2) / v2, std::abs(vc2 - v2) / v2);
    }

    std::printf("== criterion 10 sketch (q=0 columns) ==\n");
    {
        BarrierParams p = BarrierParams::cubic_quartic(0.2, 1.0, 0.01);
        const CriticalData cd = critical_point(p);
        for (double frac : {-1.0, -0.5, 0.0, 0.3, 0.6, 0.74, 0.76, 1.0, 2.0}) {
            const double l1 = frac * cd.lambda_c;
            const double theta = theta_from_lambda1(l1);
            FormulaColumns f = evaluate_all_formulas(p, theta, 0.0, 0.0, 10.0);
            std::printf("l1/lc=%+.2f crit=%.5f gauss=%.4g two=%.4g dom=%.4g mask=%u\n", frac,
                        f.critical, f.gaussian, f.two_branch, f.dominant, f.clamped_mask);
        }
    }
    return 0;
}

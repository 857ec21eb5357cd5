// scratch: seam frontier, scaled-family spread, trend config, oracle sanity
#include <cmath>
#include <cstdio>
#include <numbers>

#include "barriertop/classical.hpp"
#include "barriertop/density.hpp"
#include "barriertop/fluctuations.hpp"
#include "barriertop/model.hpp"
#include "barriertop/oracle.hpp"

using namespace barriertop;

int main() {
    const double pi = std::numbers::pi;

    std::printf("== criterion 9 two-branch seam at the Lambda1 >= 20 eps frontier ==\n");
    {
        BarrierParams p = BarrierParams::cubic_quartic(0.2, 1.0, 0.01);
        auto dS_at = [&](double l1q, double rq) {
            const double th = theta_from_lambda1(l1q);
            BranchSet b = solve_cubic(p, th, rq);
            double s[2];
            int i = 0;
            for (const auto& x : b.solutions)
                if (x.stable()) s[i++] = classical_action(p, th, 0.0, rq, x.Q);
            return s[1] - s[0];
        };
        for (double l1 : {-0.07, -0.08, -0.10, -0.12, -0.15}) {
            const double th = theta_from_lambda1(l1);
            auto [rm, rp] = bifurcation_boundaries(p, l1);
            double lo = std::min(rm, rp) + 0.02 * std::abs(rm - rp);
            double hi = std::max(rm, rp) - 0.02 * std::abs(rm - rp);
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                if ((dS_at(l1, mid) > 0.0) == (dS_at(l1, hi) > 0.0)) hi = mid;
                else lo = mid;
            }
            const double rstar = 0.5 * (lo + hi);
            BranchSet b = solve_cubic(p, th, rstar);
            const CubicSolution* st[2];
            int i = 0;
            double lmin = 1e9;
            for (const auto& x : b.solutions) {
                if (x.stable()) st[i++] = &x;
                lmin = std::min(lmin, lambda1_coeff(p, l1, x.Q));
            }
            const double L1a = lambda1_coeff(p, l1, st[0]->Q);
            const double L1b = lambda1_coeff(p, l1, st[1]->Q);
            const double v2 = rho_two_branch(p, th, 0.0, rstar, *st[0], *st[1]).value;
            double rel[3];
            int j = 0;
            for (const auto& x : b.solutions) {
                const double vc = rho_critical(p, th, 0.0, rstar, x).value;
                rel[j++] = std::abs(vc - v2) / v2;
            }
            std::printf("l1=%+.3f r*=%.5f L1=(%.3f,%.3f) dS=%.2e rel(asc branches) = %.4f %.4f %.4f\n",
                        l1, rstar, L1a, L1b, dS_at(l1, rstar), rel[0], rel[1], rel[2]);
        }
    }

    std::printf("== criterion 8 with admissible scaling at the comparison epsilon ==\n");
    {
        double worst01 = 0.0, worst001 = 0.0;
        for (int pass = 0; pass < 2; ++pass) {
            const double eps = pass == 0 ? 0.01 : 0.001;
            const double a3 = 0.2 * std::cbrt(eps / 0.01);
            BarrierParams p = BarrierParams::cubic_quartic(a3, 1.0, eps);
            const CriticalData cd = critical_point(p);
            double worst = 0.0;
            for (int i = 0; i < 20; ++i) {
                const double u = 0.15 + 0.8 * i / 19.0;
                const double l1 = cd.lambda_c * u;
                const double th = theta_from_lambda1(l1);
                auto [rm, rp] = bifurcation_boundaries(p, l1);
                const double t = 0.2 + 0.6 * ((i * 7) % 20) / 19.0;
                const double r = std::min(rm, rp) + (std::max(rm, rp) - std::min(rm, rp)) * t;
                BranchSet bs = solve_cubic(p, th, r);
                if (bs.solutions.size() != 3) continue;
                double vmin = 1e300, vmax = -1e300;
                for (const auto& bbb : bs.solutions) {
                    const double v = rho_critical(p, th, 0.0, r, bbb).value;
                    vmin = std::min(vmin, v);
                    vmax = std::max(vmax, v);
                }
                worst = std::max(worst, (vmax - vmin) / vmin);
            }
            (pass == 0 ? worst01 : worst001) = worst;
        }
        std::printf("spread(eps=0.01,a3=0.2) = %.5f, spread(eps=0.001,a3 scaled) = %.5f\n",
                    worst01, worst001);
    }

    std::printf("== criterion 7 trend at lambda1 = 2 lambda_c, z = 0.5 ==\n");
    for (double eps : {0.01, 0.003, 0.001}) {
        BarrierParams p = BarrierParams::cubic_quartic(0.2, 1.0, eps);
        const CriticalData cd = critical_point(p);
        const double l1 = 2.0 * cd.lambda_c;
        const double theta = theta_from_lambda1(l1);
        double maxdq = 0.0, maxds = 0.0;
        for (double r : {0.0, cd.r_c, -2.0 * cd.r_c}) {
            Endpoints ep = Endpoints::from_rz(r, 0.5);
            BranchSet bs = solve_cubic(p, theta, r);
            for (const auto& b : bs.solutions) {
                ModeVector init = higher_modes(p, theta, ep,
                                               2.0 * theta * b.Q * std::pow(eps, -2.0 / 3.0), 32);
                ModeVector full = solve_full_modes(p, theta, ep, 32, init);
                maxdq = std::max(maxdq, std::abs(scaled_amplitude(p, full) - b.Q));
                maxds = std::max(maxds, std::abs(action_functional(p, theta, ep, full) -
                                                 classical_action(p, theta, 0.5, r, b.Q)));
            }
        }
        std::printf("eps=%.3f  max|dQ|=%.4e  max|dS|=%.4e  bound=%.3f\n", eps, maxdq, maxds,
                    5.0 * std::pow(eps, 2.0 / 3.0));
    }

    std::printf("== oracle: harmonic well sanity (L=12, N=1200) ==\n");
    {
        // stable well V = +q^2/4: flip the barrier sign via a tiny trick:
        // build a BarrierParams with no anharmonicity and negate in a wrapper.
        // The capped potential only wraps the barrier, so test with the DVR
        // pieces directly through a fake CappedPotential around +q^2/4:
        BarrierParams flat;
        flat.epsilon = 0.5;
        CappedPotential well = build_capped_potential(flat, 60.0); // effectively -q^2/4 inside
        // use the identity: -V_barrier(q) = +q^2/4 when all a_n = 0
        // (handled by a dedicated helper in the tests; here assemble manually)
        GridSpec g{12.0, 1200};
        // direct check of exact_density on the WELL via base params trick:
        // scaled_potential with a4>0, eps large makes a confining well, but for
        // the pure harmonic comparison we need V=q^2/4 exactly; emulate by
        // evaluating the Mehler kernel against a hand-built DVR here is done in
        // the real tests; just run exact_density on the capped double well to
        // smoke-test LAPACK and PSD:
        BarrierParams p = BarrierParams::cubic_quartic(0.2, 1.0, 0.1);
        CappedPotential pot = build_capped_potential(p, 8.0);
        ExactDensityGrid ex = exact_density(g, pot, 0.9 * pi);
        std::printf("E0=%.6f modes=%d rho(0,0)shifted=%.6e boundary=%.2e\n", ex.E0,
                    ex.modes_kept, ex.rho_shifted(600, 600), ex.boundary_amplitude);
        ExactDensityGrid tr = trotter_density(g, pot, 0.9 * pi, 1024, ex.E0);
        double maxrel = 0.0;
        for (int i = 300; i <= 900; i += 10) {
            const double a = ex.rho_shifted(i, i), b = tr.rho_shifted(i, i);
            maxrel = std::max(maxrel, std::abs(a - b) / a);
        }
        std::printf("trotter(1024) max rel on central diag = %.3e\n", maxrel);
    }
    return 0;
}

// scratch: trotter debug + criterion 7/8 trend candidates
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

    std::printf("== trotter debug ==\n");
    {
        BarrierParams p = BarrierParams::cubic_quartic(0.2, 1.0, 0.1);
        CappedPotential pot = build_capped_potential(p, 8.0);
        GridSpec g{12.0, 600};
        const double theta = 1.0;
        ExactDensityGrid ex = exact_density(g, pot, theta);
        for (int slices : {256, 1024}) {
            ExactDensityGrid tr = trotter_density(g, pot, theta, slices, ex.E0);
            std::printf("slices=%d center: exact=%.8e trotter=%.8e ratio=%.6f\n", slices,
                        ex.rho_shifted(300, 300), tr.rho_shifted(300, 300),
                        tr.rho_shifted(300, 300) / ex.rho_shifted(300, 300));
        }
    }

    std::printf("== criterion 7, fixed section-5 reference points ==\n");
    {
        BarrierParams ref = BarrierParams::cubic_quartic(0.2, 1.0, 0.01);
        const CriticalData cd_ref = critical_point(ref);
        const double rc = cd_ref.r_c;
        for (double z : {0.0, 0.5}) {
            std::printf("z = %.1f\n", z);
            for (double eps : {0.01, 0.003, 0.001}) {
                BarrierParams p = BarrierParams::cubic_quartic(0.2, 1.0, eps);
                const double l1 = 0.5 * cd_ref.lambda_c;
                const double theta = theta_from_lambda1(l1);
                double bound_all = 0.0, harm_dq = 0.0, harm_ds = 0.0;
                for (double r : {0.0, rc, -2.0 * rc}) {
                    Endpoints ep = Endpoints::from_rz(r, z);
                    BranchSet bs = solve_cubic(p, theta, r);
                    const CubicSolution* harm = &bs.solutions.front();
                    for (const auto& b : bs.solutions)
                        if (std::abs(b.Q) < std::abs(harm->Q)) harm = &b;
                    for (const auto& b : bs.solutions) {
                        ModeVector init = higher_modes(
                            p, theta, ep, 2.0 * theta * b.Q * std::pow(eps, -2.0 / 3.0), 32);
                        ModeVector full = solve_full_modes(p, theta, ep, 32, init);
                        const double dq = std::abs(scaled_amplitude(p, full) - b.Q);
                        const double ds = std::abs(action_functional(p, theta, ep, full) -
                                                   classical_action(p, theta, z, r, b.Q));
                        bound_all = std::max(bound_all, std::max(dq, ds));
                        if (&b == harm && r != 0.0) {
                            harm_dq = std::max(harm_dq, dq);
                            harm_ds = std::max(harm_ds, ds);
                        }
                    }
                }
                std::printf("  eps=%.3f max(all)=%.3e  harm dQ=%.4e dS=%.4e\n", eps, bound_all,
                            harm_dq, harm_ds);
            }
        }
    }

    std::printf("== criterion 8 spread digits ==\n");
    for (int mode = 0; mode < 2; ++mode) {
        std::printf(mode == 0 ? "scaled family:\n" : "fixed a3, near-cusp points:\n");
        for (double eps : {0.01, 0.001}) {
            const double a3 = mode == 0 ? 0.2 * std::cbrt(eps / 0.01) : 0.2;
            BarrierParams p = BarrierParams::cubic_quartic(a3, 1.0, eps);
            const CriticalData cd = critical_point(p);
            double worst = 0.0;
            for (int i = 0; i < 20; ++i) {
                const double u = mode == 0 ? (0.15 + 0.8 * i / 19.0) : (0.82 + 0.16 * i / 19.0);
                const double l1 = cd.lambda_c * u;
                const double th = theta_from_lambda1(l1);
                auto [rm, rp] = bifurcation_boundaries(p, l1);
                const double t = 0.2 + 0.6 * ((i * 7) % 20) / 19.0;
                const double r = std::min(rm, rp) + (std::max(rm, rp) - std::min(rm, rp)) * t;
                BranchSet bs = solve_cubic(p, th, r);
                if (bs.solutions.size() != 3) continue;
                double vmin = 1e300, vmax = -1e300;
                for (const auto& b : bs.solutions) {
                    const double v = rho_critical(p, th, 0.0, r, b).value;
                    vmin = std::min(vmin, v);
                    vmax = std::max(vmax, v);
                }
                worst = std::max(worst, (vmax - vmin) / vmin);
            }
            std::printf("  eps=%.3f a3=%.5f  max spread = %.8f\n", eps, a3, worst);
        }
    }
    return 0;
}

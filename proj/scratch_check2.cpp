// scratch validation for acceptance-style checks, not part of the build
#include <cmath>
#include <cstdio>
#include <numbers>

#include "barriertop/classical.hpp"
#include "barriertop/fluctuations.hpp"
#include "barriertop/model.hpp"

using namespace barriertop;

int main() {
    const double pi = std::numbers::pi;

    // criterion 7 configuration: §5 shape, lambda1 = lambda_c/2, r in {0, r_c, -2 r_c}
    std::printf("== criterion 7 trend ==\n");
    for (double eps : {0.01, 0.003, 0.001}) {
        BarrierParams p = BarrierParams::cubic_quartic(0.2, 1.0, eps);
        const CriticalData cd = critical_point(p);
        const double l1 = 0.5 * cd.lambda_c;
        const double theta = theta_from_lambda1(l1);
        for (double r : {0.0, cd.r_c, -2.0 * cd.r_c}) {
            Endpoints ep = Endpoints::from_rz(r, 0.0);
            BranchSet bs = solve_cubic(p, theta, r);
            double maxdq = 0.0, maxds = 0.0;
            for (const auto& b : bs.solutions) {
                ModeVector init = higher_modes(p, theta, ep,
                                               2.0 * theta * b.Q * std::pow(eps, -2.0 / 3.0), 32);
                ModeVector full = solve_full_modes(p, theta, ep, 32, init);
                maxdq = std::max(maxdq, std::abs(scaled_amplitude(p, full) - b.Q));
                maxds = std::max(maxds, std::abs(action_functional(p, theta, ep, full) -
                                                 classical_action(p, theta, 0.0, r, b.Q)));
            }
            std::printf("eps=%.3f r=%+.5f roots=%zu  max|dQ|=%.3e  max|dS|=%.3e  bound=%.3f\n",
                        eps, r, bs.solutions.size(), maxdq, maxds,
                        5.0 * std::pow(eps, 2.0 / 3.0));
        }
    }

    // criterion 13: stability exchange at r=0
    std::printf("== criterion 13 ==\n");
    {
        BarrierParams p = BarrierParams::cubic_quartic(0.2, 1.0, 0.01);
        const CriticalData cd = critical_point(p);
        auto diff = [&](double l1) {
            const double theta = theta_from_lambda1(l1);
            BranchSet bs = solve_cubic(p, theta, 0.0);
            double best = 0.0;
            for (const auto& b : bs.solutions)
                if (b.stable() && std::abs(b.Q) > 1e-9)
                    best = classical_action(p, theta, 0.0, 0.0, b.Q);
            return best; // S(Q_s) - S(0), S(0) = 0
        };
        double lo = 1e-4, hi = cd.lambda_0 - 1e-6;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (diff(mid) > 0.0) hi = mid;
            else lo = mid;
        }
        std::printf("exchange at lambda1 = %.8f, 2/3 lambda_c = %.8f, |diff| = %.2e, window %.3f\n",
                    lo, 2.0 * cd.lambda_c / 3.0, std::abs(lo - 2.0 * cd.lambda_c / 3.0),
                    5.0 * std::pow(0.01, 2.0 / 3.0));
    }

    // criterion 4: K(Q) Gaussian reduction and pure-quartic closed form
    std::printf("== criterion 4 ==\n");
    {
        BarrierParams p = BarrierParams::cubic_quartic(0.2, 1.0, 0.01);
        const double theta = pi;
        for (double L1 : {0.5, 1.0, 2.0}) {
            FluctuationPotentialSpec s;
            s.theta = theta;
            s.c2 = L1 / (8.0 * theta);
            s.c3 = 1e-6 * 3.0 * std::pow(0.01, 4.0 / 3.0) * 0.1 / (8.0 * theta * theta);
            s.c4 = 1e-6 * 3.0 * 1e-4 / (64.0 * theta * theta * theta);
            const MarginalIntegral K = marginal_integral(s);
            std::printf("L1=%.1f  K=%.10f  L1^{-1/2}=%.10f  rel=%.2e (err %.1e)\n", L1, K.value,
                        1.0 / std::sqrt(L1), std::abs(K.value - 1.0 / std::sqrt(L1)) * std::sqrt(L1),
                        K.quadrature_error);
        }
        // pure quartic
        const CriticalData cd = critical_point(p);
        const double theta_c = theta_from_lambda1(cd.lambda_c);
        FluctuationPotentialSpec s = make_fluctuation_spec(p, cd, theta_c, cd.Q_c);
        std::printf("pure quartic: c2=%.2e c3=%.2e c4=%.6e\n", s.c2, s.c3, s.c4);
        s.c2 = 0.0;
        s.c3 = 0.0; // exactly at the critical point
        const MarginalIntegral K = marginal_integral(s);
        const double closed = std::sqrt(1.0 / (8.0 * pi * theta_c)) * 2.0 * std::tgamma(1.25) *
                              std::pow(1.0 / s.c4, 0.25);
        std::printf("quartic K=%.12f closed=%.12f rel=%.2e\n", K.value, closed,
                    std::abs(K.value - closed) / closed);
    }

    // criterion 5: prefactor continuity
    std::printf("== criterion 5 ==\n");
    {
        const double f0 = 1.0 / (pi * std::sqrt(2.0));
        const double fm = critical_prefactor(pi - 1e-4);
        const double fp = critical_prefactor(pi + 1e-4);
        std::printf("f(pi)=%.12f one-sided dev %.3e / %.3e, two-sided %.3e\n",
                    critical_prefactor(pi) - f0, fm - f0, fp - f0, 0.5 * (fm + fp) - f0);
    }
    return 0;
}

#include "barriertop/classical.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "barriertop/errors.hpp"
#include "trigpoly.hpp"

namespace barriertop {

namespace {
constexpr double kPi = std::numbers::pi;
}

double mode_eigenvalue(double theta, int k) {
    if (!(theta > 0.0)) throw std::domain_error("mode_eigenvalue: theta must be positive");
    if (k < 1) throw std::domain_error("mode_eigenvalue: k must be a positive integer");
    const double nu = kPi * k / theta;
    return nu * nu - 1.0;
}

double mode_source(double theta, const Endpoints& ep, int k) {
    if (!(theta > 0.0)) throw std::domain_error("mode_source: theta must be positive");
    if (k < 1) throw std::domain_error("mode_source: k must be a positive integer");
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return (2.0 * kPi * k / theta) * (ep.q - sign * ep.qprime);
}

double overlap_coefficient(const std::vector<int>& indices) {
    if (indices.size() < 2)
        throw std::domain_error("overlap_coefficient: need at least two indices");
    detail::TrigPoly poly = detail::TrigPoly::one();
    for (int k : indices) {
        if (k < 1) throw std::domain_error("overlap_coefficient: indices must be positive");
        poly = detail::multiply_by_sine(poly, k);
    }
    return 2.0 * detail::integral01(poly);
}

// ---------------------------------------------------------------------------
// critical point and bifurcation geometry

CriticalData critical_point(const BarrierParams& p, ThetaPolicy policy, double theta_query) {
    const double a3 = p.a3();
    const double a4 = p.a4();
    CriticalData cd;
    if (a3 == 0.0) {
        // symmetric pitchfork: the critical point sits at the origin
        cd.theta = (policy == ThetaPolicy::at_query) ? theta_query : kPi;
        return cd;
    }
    if (!(a4 > 0.0))
        throw std::domain_error("critical_point: a4 must be positive for a3 != 0");
    cd.Q_c = -16.0 * a3 / (27.0 * kPi * a4) * std::pow(p.epsilon, -1.0 / 3.0);
    cd.lambda_c = 9.0 * a4 * cd.Q_c * cd.Q_c * std::pow(p.epsilon, 2.0 / 3.0);
    cd.lambda_0 = 0.75 * cd.lambda_c;
    cd.Q_0 = 1.5 * cd.Q_c;
    cd.theta = (policy == ThetaPolicy::at_query) ? theta_query
                                                 : theta_from_lambda1(cd.lambda_c);
    cd.r_c = (3.0 * a4 * cd.theta * cd.theta / (2.0 * kPi)) * cd.Q_c * cd.Q_c * cd.Q_c;
    return cd;
}

std::pair<double, double> bifurcation_boundaries(const BarrierParams& p, double lambda1) {
    const CriticalData cd = critical_point(p);
    if (p.a3() == 0.0) {
        if (lambda1 > 0.0)
            throw std::domain_error("bifurcation_boundaries: lambda1 above lambda_c, no real curves");
        return {0.0, 0.0};
    }
    if (lambda1 > cd.lambda_c)
        throw std::domain_error("bifurcation_boundaries: lambda1 above lambda_c, no real curves");
    const double t = lambda1 / cd.lambda_c;
    const double wing = 2.0 * std::pow(1.0 - t, 1.5);
    const double rm = cd.r_c * (3.0 * t - 2.0 - wing);
    const double rp = cd.r_c * (3.0 * t - 2.0 + wing);
    return {rm, rp};
}

double line_re(const BarrierParams& p, double lambda1) {
    if (p.a3() == 0.0) return 0.0;
    const CriticalData cd = critical_point(p);
    return cd.r_c * (3.0 * lambda1 / cd.lambda_c - 2.0);
}

// ---------------------------------------------------------------------------
// cubic amplitude equation

namespace {

struct CubicCoeffs {
    double A, B, C, D; // A Q^3 + B Q^2 + C Q + D = 0
};

CubicCoeffs cubic_coeffs(const BarrierParams& p, double theta, double r) {
    const double e13 = std::pow(p.epsilon, -1.0 / 3.0);
    CubicCoeffs c;
    c.A = 3.0 * p.a4();
    c.B = (16.0 / (3.0 * kPi)) * p.a3() * e13;
    c.C = lambda1_from_theta(theta) * e13 * e13;
    c.D = -(2.0 * kPi / (theta * theta)) * r;
    return c;
}

double cubic_value(const CubicCoeffs& c, double Q) {
    return ((c.A * Q + c.B) * Q + c.C) * Q + c.D;
}

double cubic_slope(const CubicCoeffs& c, double Q) {
    return (3.0 * c.A * Q + 2.0 * c.B) * Q + c.C;
}

double residual_scale(const CubicCoeffs& c, double Q) {
    const double m = std::max(1.0, std::abs(Q));
    const double cmax = std::max({std::abs(c.A), std::abs(c.B), std::abs(c.C),
                                  std::abs(c.D), 1e-300});
    return cmax * m * m * m;
}

double polish_root(const CubicCoeffs& c, double Q) {
    double best = Q;
    double bestAbs = std::abs(cubic_value(c, Q));
    double x = Q;
    for (int it = 0; it < 8; ++it) {
        const double f = cubic_value(c, x);
        const double fp = cubic_slope(c, x);
        if (fp == 0.0) break;
        const double step = f / fp;
        x -= step;
        const double fa = std::abs(cubic_value(c, x));
        if (fa < bestAbs) {
            bestAbs = fa;
            best = x;
        }
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    return best;
}

std::vector<double> real_cubic_roots(const CubicCoeffs& c) {
    std::vector<double> roots;
    if (c.A == 0.0) {
        if (c.B == 0.0) {
            if (c.C == 0.0) throw NumericalError("solve_cubic: degenerate equation");
            roots.push_back(-c.D / c.C);
            return roots;
        }
        const double disc = c.C * c.C - 4.0 * c.B * c.D;
        if (disc < 0.0) return roots;
        const double s = std::sqrt(disc);
        // stable quadratic roots
        const double q = -0.5 * (c.C + std::copysign(s, c.C));
        roots.push_back(q / c.B);
        if (q != 0.0) roots.push_back(c.D / q);
        else roots.push_back(0.0);
        return roots;
    }
    const double shift = c.B / (3.0 * c.A);
    const double pp = (3.0 * c.A * c.C - c.B * c.B) / (3.0 * c.A * c.A);
    const double qq = (2.0 * c.B * c.B * c.B - 9.0 * c.A * c.B * c.C +
                       27.0 * c.A * c.A * c.D) /
                      (27.0 * c.A * c.A * c.A);
    const double disc = -4.0 * pp * pp * pp - 27.0 * qq * qq;
    // classify with a degenerate band on the normalized discriminant
    const double tscale = std::max({std::sqrt(std::abs(pp)), std::cbrt(std::abs(qq)), 1e-150});
    const double discn = disc / std::pow(tscale, 6);
    if (disc >= 0.0 && discn <= 1e-12) {
        // on (or numerically on) a bifurcation curve: double root d, simple root -2d
        if (std::abs(pp) <= 1e-12 * tscale * tscale) {
            roots.push_back(-shift); // triple root
        } else {
            const double d = -1.5 * qq / pp;
            roots.push_back(d - shift);
            roots.push_back(-2.0 * d - shift);
        }
    } else if (disc > 0.0) {
        // three distinct real roots: trigonometric form
        const double m = 2.0 * std::sqrt(-pp / 3.0);
        double arg = 3.0 * qq / (pp * m);
        arg = std::clamp(arg, -1.0, 1.0);
        const double phi = std::acos(arg);
        for (int k = 0; k < 3; ++k)
            roots.push_back(m * std::cos(phi / 3.0 - 2.0 * kPi * k / 3.0) - shift);
    } else {
        // one real root
        const double sq = std::sqrt(std::max(0.0, qq * qq / 4.0 + pp * pp * pp / 27.0));
        const double u = -std::copysign(std::cbrt(std::abs(qq) / 2.0 + sq), qq);
        const double v = (u != 0.0) ? -pp / (3.0 * u) : 0.0;
        roots.push_back(u + v - shift);
    }
    return roots;
}

} // namespace

BranchSet solve_cubic(const BarrierParams& p, double theta, double r) {
    if (!(theta > 0.0)) throw std::domain_error("solve_cubic: theta must be positive");
    const CubicCoeffs c = cubic_coeffs(p, theta, r);
    std::vector<double> roots = real_cubic_roots(c);
    for (double& q : roots) q = polish_root(c, q);
    std::sort(roots.begin(), roots.end());

    // collapse numerically coincident roots (degenerate on bifurcation curves)
    std::vector<double> unique;
    for (double q : roots) {
        if (!unique.empty() &&
            std::abs(q - unique.back()) <= 1e-9 * std::max(1.0, std::abs(q)))
            continue;
        unique.push_back(q);
    }

    BranchSet bs;
    bs.theta = theta;
    bs.r = r;
    for (double q : unique) {
        const double res = std::abs(cubic_value(c, q));
        if (res > 1e-12 * residual_scale(c, q))
            throw NumericalError("solve_cubic: root polish did not converge");
        const Stability st = cubic_slope(c, q) > 0.0 ? Stability::stable : Stability::unstable;
        bs.solutions.push_back(CubicSolution{q, st});
    }
    return bs;
}

// ---------------------------------------------------------------------------
// mode vectors

ModeVector higher_modes(const BarrierParams& p, double theta, const Endpoints& ep,
                        double Q1, int kmax) {
    if (kmax < 1) throw std::domain_error("higher_modes: kmax must be >= 1");
    ModeVector mv;
    mv.theta = theta;
    mv.amplitudes.assign(static_cast<std::size_t>(kmax), 0.0);
    mv.amplitudes[0] = Q1;
    const double et = p.epsilon / theta;
    const double a3 = p.a3();
    const double a4 = p.a4();
    for (int k = 2; k <= kmax; ++k) {
        const double lk = mode_eigenvalue(theta, k);
        if (std::abs(lk) < 1e-12)
            throw std::domain_error("higher_modes: lambda_k vanishes (theta at a multiple of pi)");
        double src = mode_source(theta, ep, k);
        if (k % 2 == 1) { // even-k overlaps with two 1-indices vanish by parity
            const double d11k = overlap_coefficient({1, 1, k});
            const double d111k = overlap_coefficient({1, 1, 1, k});
            src -= a3 * et * d11k * Q1 * Q1;
            src -= a4 * et * et * d111k * Q1 * Q1 * Q1;
        }
        mv.amplitudes[static_cast<std::size_t>(k) - 1] = src / lk;
    }
    return mv;
}

double scaled_amplitude(const BarrierParams& p, const ModeVector& modes) {
    return std::pow(p.epsilon, 2.0 / 3.0) * modes.Q(1) / (2.0 * modes.theta);
}

// ---------------------------------------------------------------------------
// actions

double harmonic_action(double theta, double z, double r) {
    if (!(theta > 0.0 && theta < kPi))
        throw std::domain_error("harmonic_action: requires 0 < theta < pi");
    const double t = std::tan(0.5 * theta);
    return -0.5 * r * r * t + 0.125 * z * z / t;
}

namespace {

// cot(d/2) - 2/d = -(d/6 + d^3/360 + d^5/15120 + d^7/604800 + d^9/23950080 + ...)
double cot_half_defect(double d) {
    const double d2 = d * d;
    return d * (1.0 / 6.0 +
                d2 * (1.0 / 360.0 +
                      d2 * (1.0 / 15120.0 +
                            d2 * (1.0 / 604800.0 + d2 / 23950080.0))));
}

} // namespace

double action_coeff_lambda(double theta) {
    const double d = kPi - theta;
    if (std::abs(d) < 0.3) {
        // removable 0/0 at theta = pi; limit value 3/2
        return (3.0 * kPi - d) / (2.0 * kPi - d) + 0.5 * (kPi - d) * cot_half_defect(d);
    }
    return 2.0 * kPi * kPi / (kPi * kPi - theta * theta) -
           0.5 * theta * std::tan(0.5 * theta);
}

double action_coeff_omega(double theta) {
    return 0.125 * theta * std::cos(0.5 * theta) / std::sin(0.5 * theta);
}

namespace {

// G = 1/3 + pi^2/(pi^2 - theta^2) - (pi^2 / 4 theta) tan(theta/2);
// removable 0/0 at theta = pi with limit 1/12.
double action_coeff_g(double theta) {
    const double d = kPi - theta;
    if (std::abs(d) < 0.3) {
        return 1.0 / 3.0 - kPi * kPi / (2.0 * (2.0 * kPi - d) * (kPi - d)) +
               (kPi * kPi / (4.0 * (kPi - d))) * cot_half_defect(d);
    }
    return 1.0 / 3.0 + kPi * kPi / (kPi * kPi - theta * theta) -
           (kPi * kPi / (4.0 * theta)) * std::tan(0.5 * theta);
}

} // namespace

double action_coeff_b3(double theta, double r) {
    return -32.0 * r * theta * action_coeff_g(theta) /
           (4.0 * kPi * kPi - theta * theta);
}

double action_coeff_c33(double theta) {
    double sum = 0.0;
    for (int k = 3; k <= 99; k += 2) {
        const double kk = static_cast<double>(k) * k;
        const double d11k = -8.0 / (kPi * k * (kk - 4.0)); // = D_{11k} for odd k
        sum += d11k * d11k * theta * theta / (kPi * kPi * kk - theta * theta);
    }
    return sum;
}

double classical_action(const BarrierParams& p, double theta, double z, double r, double Q) {
    if (!(theta > 0.0) || theta >= 2.0 * kPi)
        throw std::domain_error("classical_action: requires 0 < theta < 2 pi");
    const double a3 = p.a3();
    const double a4 = p.a4();
    const double a5 = p.an(5);
    const double a6 = p.an(6);
    const double e13 = std::pow(p.epsilon, -1.0 / 3.0);
    const double e23 = e13 * e13;
    const double lam3 = mode_eigenvalue(theta, 3);

    const double Q2 = Q * Q, Q3 = Q2 * Q, Q4 = Q2 * Q2, Q5 = Q4 * Q, Q6 = Q4 * Q2;

    double S = (r * r / theta) * action_coeff_lambda(theta) +
               (z * z / theta) * action_coeff_omega(theta);
    S -= (kPi * r / theta) * e23 * Q;
    S -= (8.0 * a3 * theta / (9.0 * kPi)) * e23 * e13 * Q3;
    S -= 0.75 * a4 * theta * e23 * Q4;
    // couplings through the driven k >= 2 modes
    S += a3 * e13 * Q2 * action_coeff_b3(theta, r);
    S -= 6.0 * kPi * a4 * r * Q3 / (theta * lam3);
    S -= 2.0 * a3 * a3 * theta * action_coeff_c33(theta) * e23 * Q4;
    S -= (16.0 / (15.0 * kPi)) * a3 * a4 * theta * e13 * Q5 / lam3;
    S -= 0.5 * a4 * a4 * theta * Q6 / lam3;
    // pure fifth/sixth-order anharmonicities
    S += (256.0 / (75.0 * kPi)) * a5 * theta * e13 * Q5;
    S += (5.0 / 3.0) * a6 * theta * Q6;
    return S;
}

namespace {

// sum_{k > K} 1/(k^2 - x^2) over all integers, via digamma
double inv_quadratic_tail(int K, double x) {
    using boost::math::digamma;
    if (x == 0.0) return boost::math::trigamma(static_cast<double>(K) + 1.0);
    return (digamma(K + 1.0 + x) - digamma(K + 1.0 - x)) / (2.0 * x);
}

} // namespace

double action_functional(const BarrierParams& p, double theta, const Endpoints& ep,
                         const ModeVector& modes, bool harmonic_tail) {
    if (!(theta > 0.0) || theta >= 2.0 * kPi)
        throw std::domain_error("action_functional: requires 0 < theta < 2 pi");
    const int kmax = modes.kmax();
    const double r = ep.r, z = ep.z;

    double bracket = z * z;
    for (int k = 1; k <= kmax; ++k) {
        const double lk = mode_eigenvalue(theta, k);
        const double bk = mode_source(theta, ep, k);
        const double Qk = modes.amplitudes[static_cast<std::size_t>(k) - 1];
        const double g = (k % 2 == 1) ? 4.0 * r * r : z * z;
        bracket += 0.5 * lk * Qk * Qk - bk * Qk + 2.0 * g;
    }

    // anharmonic sums: sum_{k1..kn} D Q..Q = 2 int_0^1 u(x)^n dx
    detail::TrigPoly power = detail::multiply_by_sine_series(detail::TrigPoly::one(),
                                                             modes.amplitudes);
    int current = 1;
    for (int n = 3; n <= p.max_order(); ++n) {
        while (current < n) {
            power = detail::multiply_by_sine_series(power, modes.amplitudes);
            ++current;
        }
        const double an = p.an(n);
        if (an == 0.0) continue;
        bracket += (an / n) * std::pow(p.epsilon / theta, n - 2) * 2.0 *
                   detail::integral01(power);
    }

    double S = bracket / (4.0 * theta);

    if (harmonic_tail) {
        const double x = theta / kPi;
        const double pref = theta * theta / (kPi * kPi);
        const double tail_all = pref * inv_quadratic_tail(kmax, x);
        const int J = kmax / 2;
        const double tail_even = pref * 0.25 * inv_quadratic_tail(J, 0.5 * x);
        const double tail_odd = tail_all - tail_even;
        S -= (4.0 * r * r * tail_odd + z * z * tail_even) / (2.0 * theta);
    }
    return S;
}

// ---------------------------------------------------------------------------
// full mode solve (Newton)

namespace {

struct ModeSystem {
    const BarrierParams& p;
    double theta;
    const Endpoints& ep;
    int kmax;
    std::vector<double> lambda, source;

    ModeSystem(const BarrierParams& p_, double theta_, const Endpoints& ep_, int kmax_)
        : p(p_), theta(theta_), ep(ep_), kmax(kmax_) {
        lambda.resize(static_cast<std::size_t>(kmax));
        source.resize(static_cast<std::size_t>(kmax));
        for (int k = 1; k <= kmax; ++k) {
            lambda[static_cast<std::size_t>(k) - 1] = mode_eigenvalue(theta, k);
            source[static_cast<std::size_t>(k) - 1] = mode_source(theta, ep, k);
        }
    }

    // residual F_k = lambda_k Q_k - b_k + sum_n a_n (eps/theta)^{n-2} 2 int u^{n-1} sin_k
    Eigen::VectorXd residual(const std::vector<double>& Q) const {
        Eigen::VectorXd F(kmax);
        for (int k = 1; k <= kmax; ++k)
            F(k - 1) = lambda[static_cast<std::size_t>(k) - 1] * Q[static_cast<std::size_t>(k) - 1] -
                       source[static_cast<std::size_t>(k) - 1];
        detail::TrigPoly power = detail::multiply_by_sine_series(detail::TrigPoly::one(), Q);
        int current = 1;
        for (int n = 3; n <= p.max_order(); ++n) {
            while (current < n - 1) {
                power = detail::multiply_by_sine_series(power, Q);
                ++current;
            }
            const double an = p.an(n);
            if (an == 0.0) continue;
            const double cn = an * std::pow(p.epsilon / theta, n - 2);
            for (int k = 1; k <= kmax; ++k)
                F(k - 1) += cn * 2.0 * detail::integral01_times_sin(power, k);
        }
        return F;
    }

    Eigen::MatrixXd jacobian(const std::vector<double>& Q) const {
        Eigen::MatrixXd J = Eigen::MatrixXd::Zero(kmax, kmax);
        for (int k = 0; k < kmax; ++k) J(k, k) = lambda[static_cast<std::size_t>(k)];
        detail::TrigPoly power = detail::TrigPoly::one();
        int current = 0;
        for (int n = 3; n <= p.max_order(); ++n) {
            while (current < n - 2) {
                power = detail::multiply_by_sine_series(power, Q);
                ++current;
            }
            const double an = p.an(n);
            if (an == 0.0) continue;
            const double cn = an * std::pow(p.epsilon / theta, n - 2) * (n - 1);
            std::vector<double> ctab(static_cast<std::size_t>(2 * kmax) + 1, 0.0);
            for (int m = 0; m <= 2 * kmax; ++m)
                ctab[static_cast<std::size_t>(m)] = detail::integral01_times_cos(power, m);
            for (int k = 1; k <= kmax; ++k)
                for (int l = 1; l <= kmax; ++l)
                    J(k - 1, l - 1) += cn * (ctab[static_cast<std::size_t>(std::abs(k - l))] -
                                             ctab[static_cast<std::size_t>(k + l)]);
        }
        return J;
    }
};

} // namespace

double mode_equation_residual(const BarrierParams& p, double theta, const Endpoints& ep,
                              const ModeVector& modes) {
    ModeSystem sys(p, theta, ep, modes.kmax());
    return sys.residual(modes.amplitudes).lpNorm<Eigen::Infinity>();
}

ModeVector solve_full_modes(const BarrierParams& p, double theta, const Endpoints& ep,
                            int kmax, const ModeVector& init) {
    if (kmax < 1) throw std::domain_error("solve_full_modes: kmax must be >= 1");
    ModeSystem sys(p, theta, ep, kmax);

    std::vector<double> Q(static_cast<std::size_t>(kmax), 0.0);
    const std::size_t ncopy = std::min(Q.size(), init.amplitudes.size());
    std::copy_n(init.amplitudes.begin(), ncopy, Q.begin());

    constexpr double tol = 1e-10;
    constexpr int max_iter = 60;
    Eigen::VectorXd F = sys.residual(Q);
    double res = F.lpNorm<Eigen::Infinity>();
    for (int it = 0; it < max_iter; ++it) {
        if (res <= tol) {
            ModeVector out;
            out.theta = theta;
            out.amplitudes = Q;
            return out;
        }
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys.jacobian(Q));
        Eigen::VectorXd step = lu.solve(-F);
        if (!step.allFinite())
            throw NumericalError("solve_full_modes: singular Jacobian (near a bifurcation?)");
        // backtrack if the step overshoots
        double scale = 1.0;
        for (int bt = 0; bt < 8; ++bt) {
            std::vector<double> trial = Q;
            for (int k = 0; k < kmax; ++k) trial[static_cast<std::size_t>(k)] += scale * step(k);
            Eigen::VectorXd Ft = sys.residual(trial);
            const double rt = Ft.lpNorm<Eigen::Infinity>();
            if (rt < res || scale < 1e-3) {
                Q = std::move(trial);
                F = std::move(Ft);
                res = rt;
                break;
            }
            scale *= 0.5;
        }
    }
    if (res <= tol) {
        ModeVector out;
        out.theta = theta;
        out.amplitudes = Q;
        return out;
    }
    throw NumericalError("solve_full_modes: Newton did not reach residual tolerance");
}

} // namespace barriertop

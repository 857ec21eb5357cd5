#include "barriertop/fluctuations.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "barriertop/errors.hpp"
#include "trigpoly.hpp"

namespace barriertop {

namespace {
constexpr double kPi = std::numbers::pi;
}

double lambda1_coeff(const BarrierParams& p, const CriticalData& crit,
                     double lambda1, double Q) {
    const double dq = Q - crit.Q_c;
    return lambda1 - crit.lambda_c +
           9.0 * p.a4() * std::pow(p.epsilon, 2.0 / 3.0) * dq * dq;
}

double lambda1_coeff(const BarrierParams& p, double lambda1, double Q) {
    return lambda1_coeff(p, critical_point(p), lambda1, Q);
}

FluctuationPotentialSpec make_fluctuation_spec(const BarrierParams& p,
                                               const CriticalData& crit,
                                               double theta, double Q) {
    FluctuationPotentialSpec spec;
    spec.theta = theta;
    spec.lambda1 = lambda1_from_theta(theta);
    spec.Q = Q;
    const double a4 = p.a4();
    const double eps = p.epsilon;
    spec.c2 = lambda1_coeff(p, crit, spec.lambda1, Q) / (8.0 * theta);
    spec.c3 = 3.0 * a4 * std::pow(eps, 4.0 / 3.0) * (Q - crit.Q_c) / (8.0 * theta * theta);
    spec.c4 = 3.0 * a4 * eps * eps / (64.0 * theta * theta * theta);
    return spec;
}

FluctuationPotentialSpec make_fluctuation_spec(const BarrierParams& p,
                                               double theta, double Q) {
    return make_fluctuation_spec(p, critical_point(p), theta, Q);
}

double fluc_potential(const FluctuationPotentialSpec& spec, double Y1) {
    return ((spec.c4 * Y1 + spec.c3) * Y1 + spec.c2) * Y1 * Y1;
}

std::vector<double> fluc_extrema(const FluctuationPotentialSpec& spec) {
    std::vector<double> out{0.0};
    const double a = 4.0 * spec.c4;
    const double b = 3.0 * spec.c3;
    const double c = 2.0 * spec.c2;
    if (a == 0.0) {
        if (b != 0.0) out.push_back(-c / b);
        return out;
    }
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return out;
    const double s = std::sqrt(disc);
    const double qq = -0.5 * (b + std::copysign(s, b));
    double y1 = qq / a;
    double y2 = (qq != 0.0) ? c / qq : 0.0;
    if (y1 > y2) std::swap(y1, y2);
    out.push_back(y1);
    if (disc > 0.0) out.push_back(y2);
    return out;
}

MarginalIntegral marginal_integral(const FluctuationPotentialSpec& spec) {
    if (spec.c4 < 0.0)
        throw std::domain_error("marginal_integral: quartic coefficient must be nonnegative");
    MarginalIntegral out;
    if (spec.c4 == 0.0) {
        if (spec.c3 != 0.0 || spec.c2 <= 0.0)
            throw std::domain_error("marginal_integral: integral diverges without a quartic term");
        // pure Gaussian: K = (8 theta c2)^{-1/2} = Lambda1^{-1/2}
        out.value = 1.0 / std::sqrt(8.0 * spec.theta * spec.c2);
        out.quadrature_error = 0.0;
        out.truncation_bound = 0.0;
        return out;
    }

    // truncation bound: integrand below 1e-20 of its plateau, V(+-B) >= 46
    double B = std::max(1.0, std::pow(46.0 / spec.c4, 0.25));
    for (double y : fluc_extrema(spec)) B = std::max(B, 2.0 * std::abs(y));
    int guard = 0;
    while (fluc_potential(spec, B) < 46.0 || fluc_potential(spec, -B) < 46.0) {
        B *= 1.3;
        if (++guard > 200)
            throw NumericalError("marginal_integral: could not bound the integrand");
    }

    const auto f = [&spec](double y) { return std::exp(-fluc_potential(spec, y)); };
    double err = 0.0;
    const double integral =
        boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, -B, B, 15, 1e-12, &err);
    if (!(integral > 0.0) || !std::isfinite(integral))
        throw NumericalError("marginal_integral: quadrature failed");
    if (err > 1e-10 * integral)
        throw NumericalError("marginal_integral: quadrature error above tolerance");
    out.value = std::sqrt(1.0 / (8.0 * kPi * spec.theta)) * integral;
    out.quadrature_error = std::sqrt(1.0 / (8.0 * kPi * spec.theta)) * err;
    out.truncation_bound = B;
    return out;
}

double harmonic_prefactor(double theta) {
    if (!(theta > 0.0 && theta < kPi))
        throw std::domain_error("harmonic_prefactor: requires 0 < theta < pi");
    return 1.0 / std::sqrt(4.0 * kPi * std::sin(theta));
}

double critical_prefactor(double theta) {
    if (!(theta > 0.0) || theta >= 2.0 * kPi)
        throw std::domain_error("critical_prefactor: requires 0 < theta < 2 pi");
    const double t = kPi - theta;
    double ratio; // lambda1 / sin(theta), positive on both sides of pi
    if (std::abs(t) < 1e-4) {
        const double t2 = t * t;
        ratio = (kPi + theta) / (theta * theta) * (1.0 + t2 / 6.0 + 7.0 * t2 * t2 / 360.0);
    } else {
        ratio = (kPi * kPi - theta * theta) / (theta * theta * std::sin(theta));
    }
    return std::sqrt(ratio / (4.0 * kPi));
}

double frechet2_coefficient(const BarrierParams& p, double theta, const ModeVector& modes) {
    double value = lambda1_from_theta(theta);
    // sin^2(pi x) weight: int u^p sin^2 = (int u^p - int u^p cos(2 pi x)) / 2
    detail::TrigPoly power = detail::multiply_by_sine_series(detail::TrigPoly::one(),
                                                             modes.amplitudes);
    for (int n = 3; n <= 4; ++n) {
        if (n == 4) power = detail::multiply_by_sine_series(power, modes.amplitudes);
        const double an = p.an(n);
        if (an == 0.0) continue;
        const double w = detail::integral01(power) - detail::integral01_times_cos(power, 2);
        value += an * (n - 1) * std::pow(p.epsilon / theta, n - 2) * w;
    }
    return value;
}

} // namespace barriertop

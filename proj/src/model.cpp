#include "barriertop/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace barriertop {

double scaled_potential(const BarrierParams& p, double q) {
    double v = -0.25 * q * q;
    for (const auto& [n, an] : p.a) {
        if (an == 0.0) continue;
        v += 0.5 * (an / n) * std::pow(p.epsilon, n - 2) * std::pow(q, n);
    }
    return v;
}

double scaled_potential_derivative(const BarrierParams& p, double q) {
    double d = -0.5 * q;
    for (const auto& [n, an] : p.a) {
        if (an == 0.0) continue;
        d += 0.5 * an * std::pow(p.epsilon, n - 2) * std::pow(q, n - 1);
    }
    return d;
}

double lambda1_from_theta(double theta) {
    if (!(theta > 0.0)) throw std::domain_error("lambda1_from_theta: theta must be positive");
    const double nu = std::numbers::pi / theta;
    return nu * nu - 1.0;
}

double theta_from_lambda1(double lambda1) {
    if (!(lambda1 > -1.0)) throw std::domain_error("theta_from_lambda1: requires lambda1 > -1");
    return std::numbers::pi / std::sqrt(1.0 + lambda1);
}

ThermoPoint ThermoPoint::from_theta(double theta) {
    return ThermoPoint{theta, lambda1_from_theta(theta)};
}

ThermoPoint ThermoPoint::from_lambda1(double lambda1) {
    return ThermoPoint{theta_from_lambda1(lambda1), lambda1};
}

Endpoints Endpoints::from_q(double q, double qprime) {
    return Endpoints{q, qprime, 0.5 * (q + qprime), q - qprime};
}

Endpoints Endpoints::from_rz(double r, double z) {
    return Endpoints{r + 0.5 * z, r - 0.5 * z, r, z};
}

std::vector<std::string> validate(const BarrierParams& p) {
    std::vector<std::string> bad;
    std::ostringstream os;
    if (!(p.epsilon > 0.0 && p.epsilon < 1.0)) {
        os.str("");
        os << "epsilon must lie in (0,1), got " << p.epsilon;
        bad.push_back(os.str());
    }
    if (!(p.a4() > 0.0)) {
        os.str("");
        os << "a4 must be positive (stabilizing quartic term), got " << p.a4();
        bad.push_back(os.str());
    }
    if (p.a3() < 0.0) {
        os.str("");
        os << "a3 must be nonnegative, got " << p.a3();
        bad.push_back(os.str());
    }
    const double a3cubed = p.a3() * p.a3() * p.a3();
    if (a3cubed > p.epsilon) {
        os.str("");
        os << "weak-asymmetry violated: a3^3 = " << a3cubed << " exceeds epsilon = " << p.epsilon;
        bad.push_back(os.str());
    }
    for (const auto& [n, an] : p.a) {
        if (n < 3) {
            os.str("");
            os << "coefficient index n = " << n << " below 3 is not part of the barrier shape";
            bad.push_back(os.str());
            continue;
        }
        if (std::abs(an) > 1.0) {
            os.str("");
            os << "|a_" << n << "| = " << std::abs(an) << " exceeds 1";
            bad.push_back(os.str());
        }
    }
    return bad;
}

} // namespace barriertop

#pragma once

// Dimensionless problem definition for a particle near the top of a weakly
// anharmonic potential barrier: scaled potential, temperature/eigenvalue
// conversions, endpoint coordinates. Everything here is immutable and pure.

#include <map>
#include <string>
#include <vector>

namespace barriertop {

// Scaled barrier shape
//   V(q) = -q^2/4 + (1/2) sum_{n>=3} (a_n/n) eps^{n-2} q^n
// with dimensionless anharmonicity coefficients a_n and expansion
// parameter eps in (0,1). Coefficients not stored are exactly zero.
struct BarrierParams {
    std::map<int, double> a; // n -> a_n, n >= 3
    double epsilon = 0.01;

    double an(int n) const {
        auto it = a.find(n);
        return it == a.end() ? 0.0 : it->second;
    }
    int max_order() const {
        int m = 2;
        for (const auto& [n, v] : a)
            if (v != 0.0 && n > m) m = n;
        return m;
    }
    double a3() const { return an(3); }
    double a4() const { return an(4); }

    static BarrierParams cubic_quartic(double a3, double a4, double epsilon) {
        BarrierParams p;
        p.a[3] = a3;
        p.a[4] = a4;
        p.epsilon = epsilon;
        return p;
    }
};

// V(q); total function, no domain restrictions.
double scaled_potential(const BarrierParams& p, double q);
// dV/dq, used by the oracle's C^1 continuation.
double scaled_potential_derivative(const BarrierParams& p, double q);

// lambda_1 = (pi/theta)^2 - 1; theta = pi/sqrt(1 + lambda_1).
// The crossover (caustic) sits at theta = pi where lambda_1 = 0.
double lambda1_from_theta(double theta);
double theta_from_lambda1(double lambda1); // throws std::domain_error for lambda1 <= -1

// Inverse temperature and the lowest fluctuation eigenvalue, interconvertible.
struct ThermoPoint {
    double theta;
    double lambda1;

    static ThermoPoint from_theta(double theta);
    static ThermoPoint from_lambda1(double lambda1);
};

// Endpoints of the imaginary-time path, stored redundantly in both the
// (q, q') and the sum/difference representation r = (q+q')/2, z = q-q'.
struct Endpoints {
    double q;
    double qprime;
    double r;
    double z;

    static Endpoints from_q(double q, double qprime);
    static Endpoints from_rz(double r, double z);
};

// Checks the assumptions behind the closed-form results: a4 > 0, a3 >= 0,
// weak asymmetry a3^3 <= eps, |a_n| <= 1, eps in (0,1). Returns one message
// per violated invariant; empty means valid. Callers decide whether to abort.
std::vector<std::string> validate(const BarrierParams& p);

} // namespace barriertop

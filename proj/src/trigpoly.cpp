#include "trigpoly.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace barriertop::detail {

namespace {

void ensure_size(TrigPoly& p, int max_freq) {
    if (static_cast<int>(p.cosc.size()) <= max_freq) {
        p.cosc.resize(static_cast<std::size_t>(max_freq) + 1, 0.0);
        p.sinc.resize(static_cast<std::size_t>(max_freq) + 1, 0.0);
    }
}

// accumulate c * cos(pi m x) with possibly negative m
void add_cos(TrigPoly& p, int m, double c) {
    m = std::abs(m);
    p.cosc[static_cast<std::size_t>(m)] += c;
}

// accumulate c * sin(pi m x) with possibly negative m; sin(-m) = -sin(m)
void add_sin(TrigPoly& p, int m, double c) {
    if (m == 0) return;
    if (m < 0) {
        p.sinc[static_cast<std::size_t>(-m)] -= c;
    } else {
        p.sinc[static_cast<std::size_t>(m)] += c;
    }
}

} // namespace

TrigPoly TrigPoly::one() {
    TrigPoly p;
    p.cosc.assign(1, 1.0);
    p.sinc.assign(1, 0.0);
    return p;
}

TrigPoly multiply_by_sine_series(const TrigPoly& poly, const std::vector<double>& Q) {
    const int pf = poly.max_freq();
    int kmax = 0;
    for (std::size_t i = 0; i < Q.size(); ++i)
        if (Q[i] != 0.0) kmax = static_cast<int>(i) + 1;

    TrigPoly out;
    ensure_size(out, pf + kmax);
    for (int k = 1; k <= kmax; ++k) {
        const double q = Q[static_cast<std::size_t>(k) - 1];
        if (q == 0.0) continue;
        for (int m = 0; m <= pf; ++m) {
            const double c = poly.cosc[static_cast<std::size_t>(m)];
            const double s = poly.sinc[static_cast<std::size_t>(m)];
            if (c != 0.0) {
                // cos(m) sin(k) = [sin(k+m) + sin(k-m)] / 2
                add_sin(out, k + m, 0.5 * q * c);
                add_sin(out, k - m, 0.5 * q * c);
            }
            if (s != 0.0) {
                // sin(m) sin(k) = [cos(k-m) - cos(k+m)] / 2
                add_cos(out, k - m, 0.5 * q * s);
                add_cos(out, k + m, -0.5 * q * s);
            }
        }
    }
    return out;
}

TrigPoly multiply_by_sine(const TrigPoly& poly, int k) {
    std::vector<double> Q(static_cast<std::size_t>(k), 0.0);
    Q[static_cast<std::size_t>(k) - 1] = 1.0;
    return multiply_by_sine_series(poly, Q);
}

double integral01(const TrigPoly& poly) {
    double total = poly.cosc.empty() ? 0.0 : poly.cosc[0];
    const double twopi = 2.0 / std::numbers::pi;
    for (int m = 1; m <= poly.max_freq(); m += 2)
        total += poly.sinc[static_cast<std::size_t>(m)] * twopi / m;
    return total;
}

double integral01_times_sin(const TrigPoly& poly, int k) {
    // sin-sin orthogonality plus the mixed cos-sin integral
    // int cos(pi m x) sin(pi k x) = (2k/pi)/(k^2 - m^2) for k+m odd, else 0.
    double total = 0.0;
    const int pf = poly.max_freq();
    if (k <= pf) total += 0.5 * poly.sinc[static_cast<std::size_t>(k)];
    const int start = (k % 2 == 0) ? 1 : 0; // m with k+m odd
    for (int m = start; m <= pf; m += 2) {
        const double c = poly.cosc[static_cast<std::size_t>(m)];
        if (c != 0.0)
            total += c * (2.0 * k / std::numbers::pi) / (static_cast<double>(k) * k - static_cast<double>(m) * m);
    }
    return total;
}

double integral01_times_cos(const TrigPoly& poly, int m) {
    double total = 0.0;
    const int pf = poly.max_freq();
    if (m == 0) {
        if (pf >= 0) total += poly.cosc[0];
    } else if (m <= pf) {
        total += 0.5 * poly.cosc[static_cast<std::size_t>(m)];
    }
    const int start = (m % 2 == 0) ? 1 : 2; // k' with k'+m odd
    for (int kp = start; kp <= pf; kp += 2) {
        const double s = poly.sinc[static_cast<std::size_t>(kp)];
        if (s != 0.0)
            total += s * (2.0 * kp / std::numbers::pi) / (static_cast<double>(kp) * kp - static_cast<double>(m) * m);
    }
    return total;
}

} // namespace barriertop::detail

#pragma once

// Internal exact arithmetic for trigonometric polynomials on [0, 1] built
// from products of sin(pi k x) basis functions. A TrigPoly stores cosine
// and sine coefficients by integer frequency; products are reduced with
// the product-to-sum identities, and integrals over [0, 1] use
//   int_0^1 sin(pi m x) dx = 2/(pi m) for odd m, 0 otherwise,
//   int_0^1 cos(pi m x) dx = [m == 0].
// All bookkeeping is plain double adds/multiplies, so the only error is
// roundoff; no quadrature enters production paths.

#include <cstddef>
#include <vector>

namespace barriertop::detail {

struct TrigPoly {
    std::vector<double> cosc; // cosc[m] * cos(pi m x)
    std::vector<double> sinc; // sinc[m] * sin(pi m x); sinc[0] unused

    static TrigPoly one();

    int max_freq() const { return static_cast<int>(cosc.size()) - 1; }
};

// P(x) * sum_k Q[k-1] sin(pi k x)
TrigPoly multiply_by_sine_series(const TrigPoly& poly, const std::vector<double>& Q);

// P(x) * sin(pi k x)
TrigPoly multiply_by_sine(const TrigPoly& poly, int k);

// int_0^1 P(x) dx
double integral01(const TrigPoly& poly);

// int_0^1 P(x) sin(pi k x) dx, k >= 1
double integral01_times_sin(const TrigPoly& poly, int k);

// int_0^1 P(x) cos(pi m x) dx, m >= 0
double integral01_times_cos(const TrigPoly& poly, int m);

} // namespace barriertop::detail

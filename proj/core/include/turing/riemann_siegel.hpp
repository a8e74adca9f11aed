#pragma once

// Riemann-Siegel machinery on the critical line: the rotation phase theta(t),
// the real function Z(t) = e^{i theta(t)} zeta(1/2 + it) with an estimated
// truncation remainder, Gram points theta(g_n) = n pi, and an empirical check
// of the growth bound |Z(t)| <= 2.53 t^{1/4}.

#include <turing/errors.hpp>

namespace turing {

// Asymptotic expansion of theta; accurate to well below 1e-9 for t >= 7.
double theta(double t);

// theta'(t) = log(t / 2 pi) / 2 + O(t^-2); positive for t > 2 pi e.
double theta_deriv(double t);

struct ZValue {
    double t;
    double value;
    double remainder_bound;  // envelope on the truncation error of the formula

    // Sign usable for zero counting only when the value clears the remainder.
    bool sign_determinate() const { return value > remainder_bound || value < -remainder_bound; }
    int sign() const { return value > 0.0 ? 1 : -1; }
};

// Z(t) through the main sum plus correction terms C_0..C_order (order in
// {0,1,2}); remainder_bound follows the standard empirical envelope
// c_order (t / 2 pi)^{-(2 order + 3)/4}.
ZValue z_function(double t, int order = 2);

struct GramPoint {
    long index;       // n >= -1
    double ordinate;  // theta(ordinate) = n pi
};

// Newton from the asymptotic inverse, with a bisection fallback;
// |theta(g_n) - n pi| < 1e-9.
GramPoint gram_point(long n);

struct GrowthReport {
    double t_lo = 0.0;
    double t_hi = 0.0;
    long samples = 0;
    double max_ratio = 0.0;  // max over samples of |Z(t)| / t^{1/4}
    double argmax_t = 0.0;
    double bound = 2.53;
    bool pass = false;

    bool operator==(const GrowthReport&) const = default;
};

// Samples |Z(t)| / t^{1/4} uniformly on [t_lo, t_hi]; pass iff max <= 2.53.
GrowthReport growth_check(double t_lo, double t_hi, long samples);

}  // namespace turing

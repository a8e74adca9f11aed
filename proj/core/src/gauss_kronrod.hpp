#pragma once

// Adaptive 15-point Gauss-Kronrod quadrature (QUADPACK qk15 nodes). Used for
// the prime-zeta integrals; integrands are smooth apart from a logarithmic
// spike when the left endpoint sits just above 1, which bisection absorbs.

#include <turing/errors.hpp>

#include <cmath>
#include <utility>

namespace turing::detail {

// Even indices are Kronrod-only nodes, odd indices (and the center) are the
// embedded 7-point Gauss nodes.
inline constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000,
};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
inline constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

template <typename F>
std::pair<double, double> gk15(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double kron = 0.0, gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double fv = (i == 7) ? f(mid) : f(mid - dx) + f(mid + dx);
        kron += kKronrodWeights[i] * fv;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fv;
    }
    kron *= half;
    gauss *= half;
    return {kron, std::fabs(kron - gauss)};
}

// Integrates f over [a, b] to absolute tolerance tol; throws convergence_error
// if the recursion cannot settle.
template <typename F>
double integrate(const F& f, double a, double b, double tol, int max_depth = 52) {
    if (a == b) return 0.0;
    auto [value, err] = gk15(f, a, b);
    // second test: the panel is already at the machine-noise floor
    if (err <= tol || err <= 2e-16 * (1.0 + std::fabs(value))) return value;
    if (max_depth <= 0 || (b - a) < 8e-16 * (std::fabs(a) + std::fabs(b)))
        throw convergence_error("integrate: adaptive depth exhausted");
    const double mid = 0.5 * (a + b);
    return integrate(f, a, mid, 0.5 * tol, max_depth - 1) +
           integrate(f, mid, b, 0.5 * tol, max_depth - 1);
}

}  // namespace turing::detail

#pragma once

// Euler-Maclaurin evaluation of zeta(sigma) and zeta'(sigma) for real
// sigma > 1. The Dirichlet series degenerates as sigma -> 1+, so the kernel
// uses this everywhere; the cutoff M is chosen from the explicit remainder
// bound (for real positive sigma the remainder is no larger than the first
// omitted correction term).

namespace turing::detail {

struct EmZeta {
    double zeta;
    double zeta_prime;
    double err_zeta;    // remainder bound actually achieved
    double err_prime;
};

// em_terms = number of Bernoulli correction pairs (B_2 .. B_{2*em_terms}).
// Throws convergence_error if tol is unreachable, validation_error on a bad
// sigma or em_terms outside [1, 30].
EmZeta em_zeta(double sigma, int em_terms, double tol);

}  // namespace turing::detail

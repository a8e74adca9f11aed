#pragma once

// Real-axis zeta kernel: zeta(sigma), zeta'(sigma)/zeta(sigma), semi-infinite
// and finite integrals of log zeta, and the four-integral combination I(d)
// that the Turing-method constants formulas consume.
//
// Everything here is a deterministic pure function of (inputs, spec). The
// integrals are evaluated through the termwise-integrated prime-power
// expansion
//
//   integral_c^inf log zeta(sigma) dsigma = sum_p sum_k p^(-kc) / (k^2 log p),
//
// with the primes above spec.prime_cutoff handled exactly through the prime
// zeta function P(u) = sum_j mu(j)/j * log zeta(ju) rather than truncated:
// a raw cutoff cannot reach 1e-9 for c near 1.

#include <turing/errors.hpp>

namespace turing {

struct QuadratureSpec {
    int prime_cutoff = 100;   // largest prime summed explicitly
    int power_cutoff = 64;    // largest prime-power exponent k
    int em_terms = 8;         // Euler-Maclaurin correction order (Bernoulli pairs)
    double tail_tol = 1e-9;   // required bound on all truncation tails

    // Throws validation_error unless prime_cutoff >= 2, power_cutoff >= 1,
    // 1 <= em_terms <= 30 and tail_tol > 0.
    void validate() const;
};

struct IOfD {
    double d;
    double value;
};

// zeta(sigma) for sigma > 1, absolute error <= spec.tail_tol.
double zeta_real(double sigma, const QuadratureSpec& spec = {});

// zeta'(sigma)/zeta(sigma) for sigma > 1; always negative.
double zeta_log_deriv(double sigma, const QuadratureSpec& spec = {});

// integral_c^inf log zeta(sigma) dsigma for c > 1; positive, decreasing in c.
double log_zeta_tail(double c, const QuadratureSpec& spec = {});

// integral_lo^hi log zeta(sigma) dsigma = tail(lo) - tail(hi), 1 < lo < hi.
double log_zeta_integral(double lo, double hi, const QuadratureSpec& spec = {});

// I(d) = 1/2 I[1+2d, inf) - I[1/2+d, inf) + 1/2 I[1+2d, 1+4d] - I[1/2+d, 1/2+2d]
// of log zeta, for 1/2 < d <= 1.
IOfD i_of_d(double d, const QuadratureSpec& spec = {});

// Drops the internal memo table (kept only so long-running searches do not
// recompute identical integrals). Results are unaffected; used by tests.
void clear_kernel_cache();

}  // namespace turing

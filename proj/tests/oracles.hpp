#pragma once

// Independent oracles for the test suites. These deliberately do not share
// code paths with the library: a separately written Euler-Maclaurin sum (run
// at double the correction order), a von Mangoldt sieve, adaptive Simpson
// quadrature (the library integrates with Gauss-Kronrod), a complex-argument
// zeta for |zeta(1/2+it)|, and plain brute-force grid scans.

#include <complex>
#include <functional>

namespace oracle {

// Euler-Maclaurin zeta(sigma), sigma > 1, with `terms` Bernoulli pairs.
double em_zeta(double sigma, int terms = 16, int m = 0);

// d/dsigma of log zeta via centered finite differences of em_zeta.
double log_zeta_deriv_fd(double sigma, double h = 1e-5);

// -sum Lambda(n) n^-sigma over n <= cutoff plus the integral tail estimate;
// usable for sigma >= 2.
double von_mangoldt_log_deriv(double sigma, long cutoff = 4'000'000);

// Adaptive Simpson quadrature to absolute tolerance tol.
double simpson(const std::function<double(double)>& f, double a, double b, double tol);

// integral_lo^hi log zeta via Simpson over the high-order Euler-Maclaurin sum.
double log_zeta_integral(double lo, double hi, double tol = 1e-10);

// integral_c^inf log zeta: Simpson on [c, c+72] plus the 2^-x analytic rest.
double log_zeta_tail(double c, double tol = 1e-10);

// I(d) assembled from the quadrature pieces above.
double i_of_d(double d);

// zeta(s) for complex s by Euler-Maclaurin; good to ~1e-10 for |Im s| <= 500.
std::complex<double> zeta_complex(std::complex<double> s);

// Sign changes of f on a uniform grid with `samples` points.
long grid_sign_changes(const std::function<double(double)>& f, double t_lo, double t_hi,
                       long samples);

// Root of f by bisection; requires a sign change on [lo, hi].
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-12);

}  // namespace oracle

#include "oracles.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracle {

namespace {

// B_2 .. B_40; the oracle runs at most 20 correction pairs.
const double kB[] = {
    1.0 / 6,       -1.0 / 30,        1.0 / 42,       -1.0 / 30,        5.0 / 66,
    -691.0 / 2730, 7.0 / 6,          -3617.0 / 510,  43867.0 / 798,    -174611.0 / 330,
    854513.0 / 138, -236364091.0 / 2730, 8553103.0 / 6, -23749461029.0 / 870,
    8615841276005.0 / 14322, -7709321041217.0 / 510, 2577687858367.0 / 6,
    -26315271553053477373.0 / 1919190, 2929993913841559.0 / 6,
    -261082718496449122051.0 / 13530,
};

}  // namespace

double em_zeta(double sigma, int terms, int m) {
    if (sigma <= 1.0) throw std::invalid_argument("oracle::em_zeta needs sigma > 1");
    if (terms < 1 || terms > 20) throw std::invalid_argument("oracle::em_zeta terms in [1,20]");
    if (m <= 0) m = 64;  // generous fixed cutoff; remainder ~ 64^-(sigma+2*terms+1)
    double s = 0.0;
    for (int n = m - 1; n >= 1; --n) s += std::pow(n, -sigma);
    s += std::pow(m, 1.0 - sigma) / (sigma - 1.0) + 0.5 * std::pow(m, -sigma);
    double num = sigma;  // (sigma)(sigma+1)...  built incrementally
    double fact = 2.0;   // (2j)!
    for (int j = 1; j <= terms; ++j) {
        if (j > 1) {
            fact *= (2 * j - 1) * (2 * j);
            num *= (sigma + 2 * j - 3) * (sigma + 2 * j - 2);
        }
        s += kB[j - 1] / fact * num * std::pow(m, -sigma - 2 * j + 1);
    }
    return s;
}

double log_zeta_deriv_fd(double sigma, double h) {
    return (std::log(em_zeta(sigma + h)) - std::log(em_zeta(sigma - h))) / (2.0 * h);
}

double von_mangoldt_log_deriv(double sigma, long cutoff) {
    if (sigma < 2.0) throw std::invalid_argument("von Mangoldt oracle needs sigma >= 2");
    // smallest-prime-factor sieve carrying Lambda(n) = log p iff n = p^k
    std::vector<std::int32_t> spf(cutoff + 1, 0);
    for (long p = 2; p <= cutoff; ++p) {
        if (spf[p] != 0) continue;
        for (long q = p; q <= cutoff; q += p)
            if (spf[q] == 0) spf[q] = static_cast<std::int32_t>(p);
    }
    double s = 0.0;
    for (long n = cutoff; n >= 2; --n) {
        const long p = spf[n];
        long m = n;
        while (m % p == 0) m /= p;
        if (m == 1) s += std::log(static_cast<double>(p)) * std::pow(n, -sigma);
    }
    // psi(x) ~ x turns the tail into integral_cutoff^inf u^-sigma du
    s += std::pow(static_cast<double>(cutoff), 1.0 - sigma) / (sigma - 1.0);
    return -s;
}

namespace {

double simpson_rec(const std::function<double(double)>& f, double a, double fa, double b,
                   double fb, double fm, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0) return left + right;
    if (std::fabs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double simpson(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, fa, b, fb, fm, whole, tol, 48);
}

double log_zeta_integral(double lo, double hi, double tol) {
    return simpson([](double s) { return std::log(em_zeta(s)); }, lo, hi, tol);
}

double log_zeta_tail(double c, double tol) {
    const double cut = c + 72.0;
    const double finite = simpson([](double s) { return std::log(em_zeta(s)); }, c, cut, tol);
    // log zeta(x) = 2^-x (1 + o(1)) out here; 3^-x term included for measure
    return finite + std::exp2(-cut) / std::log(2.0) + std::pow(3.0, -cut) / std::log(3.0);
}

double i_of_d(double d) {
    return 0.5 * log_zeta_tail(1 + 2 * d) - log_zeta_tail(0.5 + d) +
           0.5 * log_zeta_integral(1 + 2 * d, 1 + 4 * d) -
           log_zeta_integral(0.5 + d, 0.5 + 2 * d);
}

std::complex<double> zeta_complex(std::complex<double> s) {
    using C = std::complex<double>;
    const int m = std::max(24, static_cast<int>(3.0 * std::abs(s.imag())) + 8);
    const int terms = 12;
    C sum = 0.0;
    for (int n = 1; n < m; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));
    const double md = m;
    sum += std::exp((1.0 - s) * std::log(md)) / (s - 1.0);
    sum += 0.5 * std::exp(-s * std::log(md));
    C num = s;
    double fact = 2.0;
    for (int j = 1; j <= terms; ++j) {
        if (j > 1) {
            fact *= (2 * j - 1) * (2 * j);
            num *= (s + C(2.0 * j - 3.0)) * (s + C(2.0 * j - 2.0));
        }
        sum += kB[j - 1] / fact * num * std::exp((-s - C(2.0 * j - 1.0)) * std::log(md));
    }
    return sum;
}

long grid_sign_changes(const std::function<double(double)>& f, double t_lo, double t_hi,
                       long samples) {
    long changes = 0;
    double prev = f(t_lo);
    for (long i = 1; i < samples; ++i) {
        const double t = t_lo + (t_hi - t_lo) * static_cast<double>(i) /
                                    static_cast<double>(samples - 1);
        const double cur = f(t);
        if (prev * cur < 0.0) ++changes;
        if (cur != 0.0) prev = cur;
    }
    return changes;
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
    double flo = f(lo);
    if (flo * f(hi) > 0.0) throw std::invalid_argument("oracle::bisect needs a sign change");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (flo * fm <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace oracle

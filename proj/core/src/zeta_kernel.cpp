#include <turing/zeta_kernel.hpp>

#include "euler_maclaurin.hpp"
#include "gauss_kronrod.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace turing {

namespace {

constexpr double kEps = 1e-18;  // absolute floor for neglected pieces

void require(bool ok, const char* msg) {
    if (!ok) throw validation_error(msg);
}

const std::vector<int>& primes_up_to(int limit) {
    static std::vector<int> primes;
    static int sieved_to = 0;
    static std::mutex mu;
    std::scoped_lock lock(mu);
    if (limit > sieved_to) {
        const int n = std::max(limit, 1 << 12);
        std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
        primes.clear();
        for (int p = 2; p <= n; ++p) {
            if (composite[p]) continue;
            primes.push_back(p);
            for (long q = static_cast<long>(p) * p; q <= n; q += p) composite[q] = true;
        }
        sieved_to = n;
    }
    return primes;
}

// mu(1..kMoebiusMax) for the prime-zeta series.
constexpr int kMoebiusMax = 96;
const std::array<int, kMoebiusMax + 1>& moebius_table() {
    static const auto table = [] {
        std::array<int, kMoebiusMax + 1> mu{};
        mu[1] = 1;
        for (int n = 2; n <= kMoebiusMax; ++n) {
            int m = n, val = 1;
            for (int p = 2; p * p <= m; ++p) {
                if (m % p) continue;
                m /= p;
                if (m % p == 0) { val = 0; break; }
                val = -val;
            }
            if (val != 0 && m > 1) val = -val;
            mu[n] = val;
        }
        return mu;
    }();
    return table;
}

double log_zeta_em(double sigma, const QuadratureSpec& spec) {
    if (sigma > 41.0) {
        // log zeta(s) = 2^-s + 3^-s + O(4^-s), all below 1e-12 here
        return std::exp2(-sigma) + std::pow(3.0, -sigma);
    }
    return std::log(detail::em_zeta(sigma, spec.em_terms, std::min(spec.tail_tol, 1e-12)).zeta);
}

// Prime zeta P(u) = sum_p p^-u = sum_j mu(j)/j log zeta(ju), u > 1.
double prime_zeta(double u, const QuadratureSpec& spec) {
    const auto& mu = moebius_table();
    double s = 0.0;
    for (int j = 1; j <= kMoebiusMax; ++j) {
        if (mu[j] == 0) continue;
        const double x = j * u;
        if (x > 64.0 && j > 1) break;  // log zeta(x) < 2^(1-x)
        s += (mu[j] > 0 ? 1.0 : -1.0) / j * log_zeta_em(x, spec);
    }
    return s;
}

// sum over primes p <= cutoff of p^-u
double small_prime_sum(double u, int cutoff) {
    const auto& ps = primes_up_to(cutoff);
    double s = 0.0;
    for (int p : ps) {
        if (p > cutoff) break;
        s += std::pow(static_cast<double>(p), -u);
    }
    return s;
}

int next_prime_above(int cutoff) {
    const auto& ps = primes_up_to(cutoff + 500);
    const auto it = std::upper_bound(ps.begin(), ps.end(), cutoff);
    return *it;  // gap to the next prime is far below 500 for any valid cutoff
}

struct MemoKey {
    int op;
    std::uint64_t arg;
    int prime_cutoff, power_cutoff, em_terms;
    std::uint64_t tol;
    bool operator==(const MemoKey&) const = default;
};
struct MemoHash {
    std::size_t operator()(const MemoKey& k) const {
        const std::uint64_t packed = (static_cast<std::uint64_t>(k.op) << 56) ^
                                     (static_cast<std::uint64_t>(k.prime_cutoff) << 32) ^
                                     (static_cast<std::uint64_t>(k.power_cutoff) << 8) ^
                                     static_cast<std::uint64_t>(k.em_terms);
        std::size_t h = std::hash<std::uint64_t>{}(k.arg);
        h ^= std::hash<std::uint64_t>{}(packed) + (h << 6) + (h >> 2);
        h ^= std::hash<std::uint64_t>{}(k.tol) + (h << 3);
        return h;
    }
};

std::shared_mutex g_memo_mutex;
std::unordered_map<MemoKey, double, MemoHash> g_memo;

std::uint64_t bits(double x) {
    std::uint64_t u;
    static_assert(sizeof(u) == sizeof(x));
    std::memcpy(&u, &x, sizeof(u));
    return u;
}

template <typename F>
double memoized(int op, double arg, const QuadratureSpec& spec, const F& compute) {
    const MemoKey key{op, bits(arg), spec.prime_cutoff, spec.power_cutoff, spec.em_terms,
                      bits(spec.tail_tol)};
    {
        std::shared_lock lock(g_memo_mutex);
        auto it = g_memo.find(key);
        if (it != g_memo.end()) return it->second;
    }
    const double value = compute();
    std::unique_lock lock(g_memo_mutex);
    g_memo.emplace(key, value);
    return value;
}

// integral_y^inf of sum_{p > cutoff} p^-u du; adds neglected pieces to *dropped.
double large_prime_tail_integral(double y, const QuadratureSpec& spec, double* dropped) {
    const double q = static_cast<double>(next_prime_above(spec.prime_cutoff));
    const double lq = std::log(q);
    const double upper = y + std::max(4.0, 44.0 / lq);
    const auto integrand = [&](double u) {
        return prime_zeta(u, spec) - small_prime_sum(u, spec.prime_cutoff);
    };
    const double quad_tol = std::min(spec.tail_tol * 1e-3, 1e-13);
    const double value = detail::integrate(integrand, y, upper, quad_tol);
    // integral_upper^inf sum_{p>P} p^-u du <= q^-U (1 + q/(U-1)) / log q
    *dropped += std::pow(q, -upper) * (1.0 + q / (upper - 1.0)) / lq + quad_tol;
    return value;
}

double tail_impl(double c, const QuadratureSpec& spec) {
    double total = 0.0;
    double dropped = 0.0;

    // Explicit prime-power block: p <= prime_cutoff, k <= power_cutoff.
    for (int p : primes_up_to(spec.prime_cutoff)) {
        if (p > spec.prime_cutoff) break;
        const double lp = std::log(static_cast<double>(p));
        const double r = std::pow(static_cast<double>(p), -c);
        double pk = r;  // p^(-kc)
        int k = 1;
        while (k <= spec.power_cutoff) {
            const double term = pk / (static_cast<double>(k) * k * lp);
            total += term;
            pk *= r;
            ++k;
            if (term < kEps) break;
        }
        // geometric bound on everything past the last included power
        dropped += pk / (static_cast<double>(k) * k * lp * (1.0 - r));
    }

    // Primes above the cutoff, exact through the prime zeta function:
    // sum_k k^-2 integral_{kc}^inf sum_{p>P} p^-u du.
    const double q = static_cast<double>(next_prime_above(spec.prime_cutoff));
    for (int k = 1; k <= spec.power_cutoff; ++k) {
        const double y = k * c;
        const double bound =
            std::pow(q, -y) * (1.0 + q / (y - 1.0)) / (std::log(q) * k * k);
        if (bound < kEps) {
            dropped += 2.0 * bound;  // covers all remaining k as well
            break;
        }
        total += large_prime_tail_integral(y, spec, &dropped) / (static_cast<double>(k) * k);
    }

    if (dropped > spec.tail_tol)
        throw convergence_error("log_zeta_tail: truncation tail " + std::to_string(dropped) +
                                " exceeds tail_tol at the given cutoffs");
    return total;
}

}  // namespace

void QuadratureSpec::validate() const {
    require(prime_cutoff >= 2, "QuadratureSpec: prime_cutoff must be >= 2");
    require(prime_cutoff <= 10'000'000, "QuadratureSpec: prime_cutoff above 1e7 is unsupported");
    require(power_cutoff >= 1, "QuadratureSpec: power_cutoff must be >= 1");
    require(em_terms >= 1 && em_terms <= 30, "QuadratureSpec: em_terms must lie in [1, 30]");
    require(tail_tol > 0.0, "QuadratureSpec: tail_tol must be positive");
}

double zeta_real(double sigma, const QuadratureSpec& spec) {
    spec.validate();
    require(sigma > 1.0, "zeta_real: sigma must exceed 1");
    return memoized(1, sigma, spec, [&] {
        return detail::em_zeta(sigma, spec.em_terms, spec.tail_tol).zeta;
    });
}

double zeta_log_deriv(double sigma, const QuadratureSpec& spec) {
    spec.validate();
    require(sigma > 1.0, "zeta_log_deriv: sigma must exceed 1");
    return memoized(2, sigma, spec, [&] {
        const auto em = detail::em_zeta(sigma, spec.em_terms, spec.tail_tol);
        return em.zeta_prime / em.zeta;
    });
}

double log_zeta_tail(double c, const QuadratureSpec& spec) {
    spec.validate();
    require(c > 1.0, "log_zeta_tail: lower limit must exceed 1");
    return memoized(3, c, spec, [&] { return tail_impl(c, spec); });
}

double log_zeta_integral(double lo, double hi, const QuadratureSpec& spec) {
    spec.validate();
    require(lo > 1.0, "log_zeta_integral: lower limit must exceed 1");
    require(hi > lo, "log_zeta_integral: limits must satisfy lo < hi");
    return log_zeta_tail(lo, spec) - log_zeta_tail(hi, spec);
}

IOfD i_of_d(double d, const QuadratureSpec& spec) {
    spec.validate();
    require(d > 0.5 && d <= 1.0, "i_of_d: d must lie in (1/2, 1]");
    const double value = 0.5 * log_zeta_tail(1.0 + 2.0 * d, spec)
                       - log_zeta_tail(0.5 + d, spec)
                       + 0.5 * log_zeta_integral(1.0 + 2.0 * d, 1.0 + 4.0 * d, spec)
                       - log_zeta_integral(0.5 + d, 0.5 + 2.0 * d, spec);
    return IOfD{d, value};
}

void clear_kernel_cache() {
    std::unique_lock lock(g_memo_mutex);
    g_memo.clear();
}

}  // namespace turing

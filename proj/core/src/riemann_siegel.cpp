#include <turing/riemann_siegel.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

namespace turing {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

void require(bool ok, const char* msg) {
    if (!ok) throw validation_error(msg);
}

// ---------------------------------------------------------------------------
// Correction terms of the Riemann-Siegel formula.
//
// With p the fractional part of sqrt(t / 2 pi) and
//   Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p)
// (entire once the removable singularities at p = 1/4 + k/2 are filled in),
// the first three correction terms are
//   C0 = Psi,
//   C1 = -Psi'''/(96 pi^2),
//   C2 = Psi''/(64 pi^2) + Psi^(6)/(18432 pi^4).
// Derivatives come from a Cauchy contour (trapezoid rule on a circle of
// radius 0.31, nodes rotated half a step off the real axis so the removable
// singularities stay far from every node). Each C_j is then fitted once by a
// Chebyshev series on [0, 1]; Z evaluations only run Clenshaw recurrences.
// ---------------------------------------------------------------------------

std::complex<double> psi_entire(std::complex<double> w) {
    const auto num = std::cos(kTwoPi * (w * w - w - 0.0625));
    const auto den = std::cos(kTwoPi * w);
    return num / den;
}

// Psi derivatives 0..6 at real p via the contour integral.
std::array<double, 7> psi_derivatives(double p) {
    constexpr int kNodes = 256;
    constexpr double kRadius = 0.31;
    std::array<std::complex<double>, kNodes> vals;
    for (int j = 0; j < kNodes; ++j) {
        const double phi = kTwoPi * (j + 0.5) / kNodes;
        vals[j] = psi_entire(std::complex<double>(p + kRadius * std::cos(phi),
                                                  kRadius * std::sin(phi)));
    }
    std::array<double, 7> out{};
    double factorial = 1.0;
    for (int n = 0; n <= 6; ++n) {
        if (n > 0) factorial *= n;
        std::complex<double> s = 0.0;
        for (int j = 0; j < kNodes; ++j) {
            const double phi = kTwoPi * (j + 0.5) / kNodes;
            s += vals[j] * std::polar(1.0, -n * phi);
        }
        out[n] = factorial / std::pow(kRadius, n) * s.real() / kNodes;
    }
    return out;
}

struct ChebSeries {
    std::vector<double> coef;  // f(x) = sum_k coef[k] T_k(2x - 1) on [0, 1]

    double eval(double x) const {
        const double u = 2.0 * x - 1.0;
        double b1 = 0.0, b2 = 0.0;
        for (std::size_t k = coef.size(); k-- > 1;) {
            const double b0 = 2.0 * u * b1 - b2 + coef[k];
            b2 = b1;
            b1 = b0;
        }
        return u * b1 - b2 + coef[0];
    }
};

struct CorrectionTables {
    std::array<ChebSeries, 3> c;
};

const CorrectionTables& correction_tables() {
    static CorrectionTables tables;
    static std::once_flag once;
    std::call_once(once, [] {
        constexpr int kN = 96;  // Chebyshev points; the C_j are entire
        std::array<std::vector<double>, 3> samples;
        for (auto& s : samples) s.resize(kN);
        for (int i = 0; i < kN; ++i) {
            const double x = 0.5 + 0.5 * std::cos(kPi * (i + 0.5) / kN);
            const auto d = psi_derivatives(x);
            samples[0][i] = d[0];
            samples[1][i] = -d[3] / (96.0 * kPi * kPi);
            samples[2][i] = d[2] / (64.0 * kPi * kPi) +
                            d[6] / (18432.0 * kPi * kPi * kPi * kPi);
        }
        for (int j = 0; j < 3; ++j) {
            std::vector<double> coef(kN);
            for (int k = 0; k < kN; ++k) {
                double s = 0.0;
                for (int i = 0; i < kN; ++i)
                    s += samples[j][i] * std::cos(kPi * k * (i + 0.5) / kN);
                coef[k] = 2.0 * s / kN;
            }
            coef[0] *= 0.5;
            std::size_t keep = coef.size();
            while (keep > 8 && std::fabs(coef[keep - 1]) < 1e-15) --keep;
            coef.resize(keep);
            tables.c[j].coef = std::move(coef);
        }
    });
    return tables;
}

// Gabcke-style envelope constants for the remainder after C_0, C_1, C_2.
constexpr double kRemainderCoef[3] = {0.127, 0.053, 0.011};

}  // namespace

double theta(double t) {
    require(t > 1.0, "theta: t must exceed 1");
    const double t2 = t * t;
    return 0.5 * t * std::log(t / kTwoPi) - 0.5 * t - kPi / 8.0
           + 1.0 / (48.0 * t)
           + 7.0 / (5760.0 * t * t2)
           + 31.0 / (80640.0 * t * t2 * t2)
           + 127.0 / (430080.0 * t * t2 * t2 * t2);
}

double theta_deriv(double t) {
    require(t > 1.0, "theta_deriv: t must exceed 1");
    const double t2 = t * t;
    return 0.5 * std::log(t / kTwoPi)
           - 1.0 / (48.0 * t2)
           - 7.0 / (1920.0 * t2 * t2)
           - 31.0 / (16128.0 * t2 * t2 * t2)
           - 127.0 / (61440.0 * t2 * t2 * t2 * t2);
}

ZValue z_function(double t, int order) {
    require(t >= 5.0, "z_function: t must be at least 5");
    require(order >= 0 && order <= 2, "z_function: order must lie in {0, 1, 2}");

    const double x = t / kTwoPi;     // (t / 2 pi)
    const double a = std::sqrt(x);
    const long m = static_cast<long>(a);
    const double p = a - static_cast<double>(m);
    const double th = theta(t);

    double sum = 0.0;
    for (long n = 1; n <= m; ++n) {
        sum += std::cos(th - t * std::log(static_cast<double>(n))) /
               std::sqrt(static_cast<double>(n));
    }
    sum *= 2.0;

    const auto& tables = correction_tables();
    double corr = tables.c[0].eval(p);
    if (order >= 1) corr += tables.c[1].eval(p) / a;
    if (order >= 2) corr += tables.c[2].eval(p) / x;
    const double parity = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^(m+1)
    sum += parity * corr / std::sqrt(std::sqrt(x));

    ZValue out;
    out.t = t;
    out.value = sum;
    out.remainder_bound = kRemainderCoef[order] * std::pow(x, -(2.0 * order + 3.0) / 4.0);
    return out;
}

GramPoint gram_point(long n) {
    require(n >= -1, "gram_point: index must be at least -1");
    const double target = static_cast<double>(n) * kPi;

    // Invert the two-term asymptotic: y (log y - 1) = n + 1/8, t = 2 pi y.
    const double rhs = static_cast<double>(n) + 0.125;
    double y = std::max(2.0, rhs / std::max(1.0, std::log(std::max(rhs, 3.0))));
    for (int i = 0; i < 64; ++i) {
        const double f = y * (std::log(y) - 1.0) - rhs;
        const double df = std::log(y);
        if (std::fabs(df) < 1e-9) break;
        const double step = f / df;
        y -= step;
        if (y < 1.0 + 1e-9) y = 1.0 + 1e-9;
        if (std::fabs(step) < 1e-13 * y) break;
    }
    double t = kTwoPi * y;
    if (t <= kTwoPi + 0.1) t = kTwoPi + 0.1;

    bool converged = false;
    for (int i = 0; i < 64; ++i) {
        const double f = theta(t) - target;
        const double step = f / theta_deriv(t);
        t -= step;
        if (t <= kTwoPi) { t = kTwoPi + 0.05; }
        if (std::fabs(step) < 1e-12 * t) {
            converged = true;
            break;
        }
    }

    if (!converged || std::fabs(theta(t) - target) > 1e-10) {
        // Bisection fallback on an expanding bracket above 2 pi, where theta
        // is increasing.
        const double gap = kPi / theta_deriv(std::max(t, 10.0));
        double lo = std::max(kTwoPi + 1e-6, t - 2.0 * gap);
        double hi = std::max(t + 2.0 * gap, lo + 1.0);
        int guard = 0;
        while (theta(lo) > target) {
            lo = kTwoPi + 1e-6 + 0.5 * (lo - kTwoPi - 1e-6);
            if (++guard > 80)
                throw convergence_error("gram_point: failed to bracket index " + std::to_string(n));
        }
        guard = 0;
        while (theta(hi) < target) {
            hi += 2.0 * gap;
            if (++guard > 256)
                throw convergence_error("gram_point: failed to bracket index " + std::to_string(n));
        }
        for (int i = 0; i < 200 && hi - lo > 1e-13 * hi; ++i) {
            const double mid = 0.5 * (lo + hi);
            (theta(mid) < target ? lo : hi) = mid;
        }
        t = 0.5 * (lo + hi);
        if (std::fabs(theta(t) - target) > 1e-9)
            throw convergence_error("gram_point: residual too large at index " + std::to_string(n));
    }
    return GramPoint{n, t};
}

GrowthReport growth_check(double t_lo, double t_hi, long samples) {
    require(t_lo >= 5.0, "growth_check: t_lo must be at least 5");
    require(t_hi > t_lo, "growth_check: t_hi must exceed t_lo");
    require(samples >= 2, "growth_check: need at least 2 samples");

    GrowthReport report;
    report.t_lo = t_lo;
    report.t_hi = t_hi;
    report.samples = samples;
    report.bound = 2.53;
    for (long i = 0; i < samples; ++i) {
        const double t = t_lo + (t_hi - t_lo) * static_cast<double>(i) /
                                    static_cast<double>(samples - 1);
        const double ratio = std::fabs(z_function(t, 2).value) / std::pow(t, 0.25);
        if (ratio > report.max_ratio) {
            report.max_ratio = ratio;
            report.argmax_t = t;
        }
    }
    report.pass = report.max_ratio <= report.bound;
    return report;
}

}  // namespace turing

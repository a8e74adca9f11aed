#pragma once

// Closed-form Turing-method constants for the Riemann zeta-function,
// Dirichlet L-functions and Dedekind zeta-functions, together with the
// objective/budget functions they are optimized against and the Gram-block
// requirement of the Lehman--Brent criterion.
//
// Each family produces a pair (a, b) -- or a triple (a, b, g) for Dedekind --
// such that |integral_{t1}^{t2} S(t) dt| <= a + b log t2 (zeta), or the
// conductor/discriminant-weighted analogues. The free parameters are the
// convexity abscissa c in (1, 5/4] and the shift d in (1/2, 1].

#include <turing/zeta_kernel.hpp>

#include <optional>

namespace turing {

enum class Family { zeta, dirichlet, dedekind };

const char* family_name(Family f);

struct ConvexityParams {
    double c;  // convexity abscissa, 1 < c <= 5/4
    double d;  // shift parameter, 1/2 < d <= 1

    void validate() const;
    static bool admissible(double c, double d);
};

// A critical-line growth pair: |zeta(1/2+it)| <= K t^theta assumed for
// t > t_min. The default (2.53, 1/4, 128 pi) is the Lehman bound; alternate
// pairs (e.g. van der Corput style) are accepted but never derived here.
struct GrowthBound {
    double K = 2.53;
    double theta = 0.25;
    double t_min = 128.0 * 3.14159265358979323846;

    void validate() const;
};

struct TuringConstants {
    double a = 0.0;
    double b = 0.0;
    std::optional<double> g;  // Dedekind family only
    Family family = Family::zeta;
    double t0 = 0.0;  // height above which the constants are valid

    bool operator==(const TuringConstants&) const = default;
};

struct DedekindShape {
    int degree;      // N = r1 + 2 r2, positive
    int r1;          // real embeddings
    int r2;          // pairs of complex embeddings
    double abs_discriminant;  // |D_K| > 1

    void validate() const;
};

// (a, b) for the zeta family at the given convexity parameters and growth
// pair; valid above t0 = 168 pi.
TuringConstants zeta_constants(const ConvexityParams& p, const GrowthBound& growth = {},
                               const QuadratureSpec& spec = {});

// F(a, b, g_p) = b log(g_p / 2 pi) + a, the quantity minimized when choosing
// (c, d) for Gram-block applications at height g_p.
double zeta_objective(const TuringConstants& consts, double g_p);

// Least N such that N consecutive Rosser-satisfying Gram blocks ending at
// g_p certify the zero count: N >= b/(6 pi) log^2 g_p + (a - b log 2 pi)/(6 pi) log g_p.
long gram_block_requirement(const TuringConstants& consts, double g_p);

// (a, b) for primitive Dirichlet characters; bound reads a + b log(Q t2 / 2 pi).
TuringConstants dirichlet_constants(const ConvexityParams& p, double t0,
                                    const QuadratureSpec& spec = {});

// B(Q, t2) = 0.1592 log(Q t2 / 2 pi) (a + b log(Q t2 / 2 pi)).
double dirichlet_budget(const TuringConstants& consts, long conductor, double t2);

// (a, b, g) for Dedekind zeta-functions;
// bound reads a + b N + g log(|D_K| (t2 / 2 pi)^N).
TuringConstants dedekind_constants(const ConvexityParams& p, double t0,
                                   const QuadratureSpec& spec = {});

// B(D_K, t2, N) = ((b N + a) L + g L^2) / (2 pi), L = log(|D_K| (t2/2 pi)^N).
double dedekind_budget(const TuringConstants& consts, const DedekindShape& shape, double t2);

}  // namespace turing

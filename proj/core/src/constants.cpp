#include <turing/constants.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace turing {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kLog4 = 1.3862943611198906;  // log 4
constexpr double kZetaT0 = 168.0 * kPi;
// Box checks tolerate grid arithmetic landing a few ulps past the endpoints.
constexpr double kBoxTol = 1e-9;

void require(bool ok, const std::string& msg) {
    if (!ok) throw validation_error(msg);
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::zeta: return "zeta";
        case Family::dirichlet: return "dirichlet";
        case Family::dedekind: return "dedekind";
    }
    return "?";
}

bool ConvexityParams::admissible(double c, double d) {
    return c > 1.0 && c <= 1.25 + kBoxTol && d > 0.5 && d <= 1.0 + kBoxTol;
}

void ConvexityParams::validate() const {
    require(admissible(c, d),
            "ConvexityParams: require 1 < c <= 5/4 and 1/2 < d <= 1, got c=" +
                std::to_string(c) + " d=" + std::to_string(d));
}

void GrowthBound::validate() const {
    require(K > 0.0, "GrowthBound: K must be positive");
    require(theta > 0.0 && theta < 0.5, "GrowthBound: theta must lie in (0, 1/2)");
    require(t_min > 0.0, "GrowthBound: t_min must be positive");
}

void DedekindShape::validate() const {
    require(degree >= 1, "DedekindShape: degree must be positive");
    require(r1 >= 0 && r2 >= 0, "DedekindShape: signature entries must be nonnegative");
    require(degree == r1 + 2 * r2, "DedekindShape: degree must equal r1 + 2*r2");
    require(abs_discriminant > 1.0, "DedekindShape: |D_K| must exceed 1");
}

TuringConstants zeta_constants(const ConvexityParams& p, const GrowthBound& growth,
                               const QuadratureSpec& spec) {
    p.validate();
    growth.validate();
    require(growth.t_min <= kZetaT0,
            "zeta_constants: growth bound must hold from t_min <= 168 pi");

    constexpr double mu = 3e-6;
    const double d2 = p.d * p.d;
    const double pi_a =
        d2 * kLog4 * (-zeta_log_deriv(0.5 + p.d, spec) - 0.5 * std::log(kTwoPi) + 0.25)
        + 0.5 * d2 * std::log(kPi)
        - i_of_d(p.d, spec).value
        + 0.5 * (p.c - 0.5) * std::log(growth.K * zeta_real(p.c, spec))
        + log_zeta_tail(p.c, spec)
        + mu;

    TuringConstants out;
    out.a = pi_a / kPi;
    out.b = (growth.theta * (p.c - 0.5) + d2 * (kLog4 - 1.0)) / kTwoPi;
    out.family = Family::zeta;
    out.t0 = kZetaT0;
    return out;
}

double zeta_objective(const TuringConstants& consts, double g_p) {
    require(consts.family == Family::zeta, "zeta_objective: constants must be zeta-family");
    require(g_p > kTwoPi, "zeta_objective: g_p must exceed 2 pi");
    return consts.b * std::log(g_p / kTwoPi) + consts.a;
}

long gram_block_requirement(const TuringConstants& consts, double g_p) {
    require(consts.family == Family::zeta,
            "gram_block_requirement: constants must be zeta-family");
    require(g_p > kTwoPi, "gram_block_requirement: g_p must exceed 2 pi");
    const double lg = std::log(g_p);
    const double bound =
        (consts.b * lg * lg + (consts.a - consts.b * std::log(kTwoPi)) * lg) / (6.0 * kPi);
    return static_cast<long>(std::ceil(bound - 1e-9));
}

TuringConstants dirichlet_constants(const ConvexityParams& p, double t0,
                                    const QuadratureSpec& spec) {
    p.validate();
    require(t0 >= 50.0, "dirichlet_constants: t0 must be at least 50");

    const double d2 = p.d * p.d;
    const double pi_a =
        (p.c - 0.5) * std::log(zeta_real(p.c, spec))
        + log_zeta_tail(p.c, spec)
        - d2 * kLog4 * zeta_log_deriv(0.5 + p.d, spec)
        - i_of_d(p.d, spec).value
        + 15.0 * d2 / (t0 * t0);

    TuringConstants out;
    out.a = pi_a / kPi;
    out.b = (0.5 * (p.c - 0.5) * (p.c - 0.5) + d2 * (kLog4 - 1.0)) / kTwoPi;
    out.family = Family::dirichlet;
    out.t0 = t0;
    return out;
}

double dirichlet_budget(const TuringConstants& consts, long conductor, double t2) {
    require(consts.family == Family::dirichlet,
            "dirichlet_budget: constants must be dirichlet-family");
    require(conductor > 1, "dirichlet_budget: conductor must exceed 1");
    require(conductor * t2 > kTwoPi, "dirichlet_budget: require Q t2 / 2 pi > 1");
    const double lq = std::log(static_cast<double>(conductor) * t2 / kTwoPi);
    return 0.1592 * lq * (consts.a + consts.b * lq);
}

TuringConstants dedekind_constants(const ConvexityParams& p, double t0,
                                   const QuadratureSpec& spec) {
    p.validate();
    require(t0 > 0.0, "dedekind_constants: t0 must be positive");

    const double d2 = p.d * p.d;
    const double cm = p.c - 0.5;
    const double t02 = t0 * t0;
    const double log2 = std::numbers::ln2;

    const double pi_a = cm * (81.0 / (32.0 * t02) + std::log(3.0)) + 4.0 * d2 * log2 / t02;
    const double pi_b =
        cm * (std::log(zeta_real(p.c, spec)) + 81.0 * cm / (128.0 * t02))
        + log_zeta_tail(p.c, spec)
        + d2 * log2 * (log2 - 0.5 - 2.0 * zeta_log_deriv(0.5 + p.d, spec) + 8.0 / t02)
        - i_of_d(p.d, spec).value;
    const double pi_g = 0.25 * cm * cm + 0.5 * d2 * (kLog4 - 1.0);

    TuringConstants out;
    out.a = pi_a / kPi;
    out.b = pi_b / kPi;
    out.g = pi_g / kPi;
    out.family = Family::dedekind;
    out.t0 = t0;
    return out;
}

double dedekind_budget(const TuringConstants& consts, const DedekindShape& shape, double t2) {
    require(consts.family == Family::dedekind,
            "dedekind_budget: constants must be dedekind-family");
    require(consts.g.has_value(), "dedekind_budget: constants lack the g component");
    shape.validate();
    const double big_l =
        std::log(shape.abs_discriminant) + shape.degree * std::log(t2 / kTwoPi);
    require(big_l > 0.0, "dedekind_budget: log(|D_K| (t2/2pi)^N) must be positive");
    return ((consts.b * shape.degree + consts.a) * big_l + *consts.g * big_l * big_l) / kTwoPi;
}

}  // namespace turing

#include <turing/gram_scanner.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>

namespace turing {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZetaT0 = 168.0 * kPi;

void require(bool ok, const char* msg) {
    if (!ok) throw validation_error(msg);
}

struct Sample {
    double t;
    int sign;
};

// Evaluates a sign at t, nudging deterministically within +-shift_scale (and
// inside [lo, hi]) when |Z| sits under the remainder bound. Returns nullopt
// when no nudge helps.
std::optional<Sample> determinate_sample(double t, double shift_scale, double lo, double hi,
                                         const ScanPolicy& policy) {
    static constexpr double kShifts[] = {0.0, 1.0 / 16, -1.0 / 16, 1.0 / 8, -1.0 / 8,
                                         3.0 / 16, -3.0 / 16};
    for (double frac : kShifts) {
        const double tt = t + frac * shift_scale;
        if (tt < lo || tt > hi || tt < 5.0) continue;
        const ZValue z = z_function(tt, policy.z_order);
        if (z.sign_determinate()) return Sample{tt, z.sign()};
    }
    return std::nullopt;
}

// One scan pass at the given density multiplier. Returns nullopt if some
// sample could not be made sign-determinate.
std::optional<std::vector<SignChangeBracket>> scan_pass(double t_lo, double t_hi,
                                                        const ScanPolicy& policy,
                                                        double density) {
    std::vector<SignChangeBracket> brackets;
    std::optional<Sample> prev;
    double t = t_lo;
    for (;;) {
        const double step = policy.step_fraction * kPi / (theta_deriv(t) * density);
        const auto cur = determinate_sample(t, 0.25 * step, t_lo, t_hi, policy);
        if (!cur) return std::nullopt;
        if (!prev) {
            prev = cur;
        } else if (cur->t > prev->t) {
            if (prev->sign * cur->sign < 0) brackets.push_back({prev->t, cur->t});
            prev = cur;
        }
        if (t >= t_hi) break;
        t = std::min(t + step, t_hi);
    }
    return brackets;
}

long gram_parity(long n) { return (n % 2 == 0) ? 1 : -1; }

struct GramSignInfo {
    double ordinate;
    bool determinate;
    bool good;  // sign(Z(g_n)) * (-1)^n > 0
};

GramSignInfo gram_sign(long n, const ScanPolicy& policy) {
    const GramPoint g = gram_point(n);
    const ZValue z = z_function(g.ordinate, policy.z_order);
    GramSignInfo info;
    info.ordinate = g.ordinate;
    info.determinate = z.sign_determinate();
    info.good = info.determinate && z.sign() * gram_parity(n) > 0;
    return info;
}

bool rosser_pattern_ok(const std::vector<long>& counts) {
    const long total = std::accumulate(counts.begin(), counts.end(), 0L);
    const long p = static_cast<long>(counts.size());
    if (total != p) return false;
    if (p == 1) return true;  // total 1 in the single interval
    if (counts.front() % 2 != 0 || counts.back() % 2 != 0) return false;
    for (std::size_t i = 1; i + 1 < counts.size(); ++i)
        if (counts[i] % 2 == 0) return false;
    return true;
}

}  // namespace

void ScanPolicy::validate() const {
    require(step_fraction > 0.0 && step_fraction <= 0.25,
            "ScanPolicy: step_fraction must lie in (0, 1/4]");
    require(refine_factor >= 2, "ScanPolicy: refine_factor must be at least 2");
    require(max_depth >= 1, "ScanPolicy: max_depth must be at least 1");
    require(z_order >= 0 && z_order <= 2, "ScanPolicy: z_order must lie in {0, 1, 2}");
}

long GramBlock::total_count() const {
    return std::accumulate(counts.begin(), counts.end(), 0L);
}

bool is_good_gram_point(long n, const ScanPolicy& policy) {
    policy.validate();
    return gram_sign(n, policy).good;
}

std::vector<SignChangeBracket> scan_interval(double t_lo, double t_hi,
                                             const ScanPolicy& policy) {
    policy.validate();
    require(t_lo >= 10.0, "scan_interval: t_lo must be at least 10");
    require(t_hi >= t_lo, "scan_interval: t_hi must not precede t_lo");
    if (t_lo == t_hi) return {};

    long prev_count = -1;
    double density = 1.0;
    bool indeterminate_seen = false;
    for (int depth = 0; depth <= policy.max_depth; ++depth) {
        const auto pass = scan_pass(t_lo, t_hi, policy, density);
        density *= policy.refine_factor;
        if (!pass) {
            indeterminate_seen = true;
            prev_count = -1;
            continue;
        }
        if (prev_count >= 0 && prev_count == static_cast<long>(pass->size())) return *pass;
        prev_count = static_cast<long>(pass->size());
    }
    throw convergence_error(indeterminate_seen
                                ? "scan_interval: indeterminate sign persisted to max depth"
                                : "scan_interval: sign-change count did not stabilize");
}

BlockClassification classify_blocks(long n_lo, long n_hi, const ScanPolicy& policy) {
    policy.validate();
    require(n_lo < n_hi, "classify_blocks: need n_lo < n_hi");
    require(n_lo >= -1, "classify_blocks: Gram index must be at least -1");

    BlockClassification out;
    out.n_lo = n_lo;
    out.n_hi = n_hi;

    std::map<long, GramSignInfo> info;
    for (long i = n_lo; i <= n_hi; ++i) info.emplace(i, gram_sign(i, policy));
    require(info.at(n_lo).ordinate >= 10.0, "classify_blocks: range must start above t = 10");

    std::map<long, long> counts;
    for (long i = n_lo; i < n_hi; ++i) {
        counts[i] = static_cast<long>(
            scan_interval(info.at(i).ordinate, info.at(i + 1).ordinate, policy).size());
    }

    auto run_counts = [&](long from, long to) {
        std::vector<long> cs;
        for (long i = from; i < to; ++i) cs.push_back(counts.at(i));
        return cs;
    };

    long first_good = n_lo;
    while (first_good <= n_hi && !info.at(first_good).good) ++first_good;
    if (first_good > n_hi) {
        out.leading = PartialBlock{n_lo, static_cast<int>(n_hi - n_lo), run_counts(n_lo, n_hi)};
        return out;
    }
    if (first_good > n_lo)
        out.leading = PartialBlock{n_lo, static_cast<int>(first_good - n_lo),
                                   run_counts(n_lo, first_good)};

    long start = first_good;
    while (start < n_hi) {
        long end = start + 1;
        bool indeterminate = !info.at(start).determinate;
        while (end <= n_hi && !info.at(end).good) {
            indeterminate = indeterminate || !info.at(end).determinate;
            ++end;
        }
        if (end > n_hi) {
            out.trailing = PartialBlock{start, static_cast<int>(n_hi - start),
                                        run_counts(start, n_hi)};
            break;
        }
        GramBlock block;
        block.start_index = start;
        block.p_len = static_cast<int>(end - start);
        block.counts = run_counts(start, end);
        block.indeterminate = indeterminate || !info.at(end).determinate;
        block.rosser_ok = !block.indeterminate && rosser_pattern_ok(block.counts);
        out.blocks.push_back(std::move(block));
        start = end;
    }
    return out;
}

CertificationReport certify(long n, long p, const TuringConstants& consts,
                            const CertifyOptions& options) {
    options.policy.validate();
    require(consts.family == Family::zeta, "certify: constants must be zeta-family");
    require(p > n, "certify: need p > n");
    require(options.scan_from >= 10.0 && options.scan_from < 14.0,
            "certify: scan_from must lie in [10, 14), below the first zero");

    const GramPoint gn = gram_point(n);
    const GramPoint gp = gram_point(p);
    require(gn.ordinate > kZetaT0, "certify: g_n must exceed 168 pi");

    CertificationReport report;
    report.n = n;
    report.p = p;
    report.g_n = gn.ordinate;
    report.g_p = gp.ordinate;
    report.constants_used = consts;
    report.required_blocks = gram_block_requirement(consts, gp.ordinate);

    const BlockClassification cls = classify_blocks(n, p, options.policy);
    if (cls.leading || cls.trailing)
        throw certification_error(certification_error::kind::misaligned_run,
                                  "certify: run [g_" + std::to_string(n) + ", g_" +
                                      std::to_string(p) + ") is not block-aligned",
                                  cls.leading ? cls.leading->start_index
                                              : cls.trailing->start_index);
    for (const auto& block : cls.blocks) {
        if (block.indeterminate)
            throw certification_error(certification_error::kind::indeterminate_sign,
                                      "certify: indeterminate sign in block at index " +
                                          std::to_string(block.start_index),
                                      block.start_index);
        if (!block.rosser_ok)
            throw certification_error(certification_error::kind::rosser_violation,
                                      "certify: Rosser's rule fails for the block at index " +
                                          std::to_string(block.start_index) + " (length " +
                                          std::to_string(block.p_len) + ", " +
                                          std::to_string(block.total_count()) + " zeros)",
                                      block.start_index);
    }
    report.blocks_used = static_cast<long>(cls.blocks.size());
    if (report.blocks_used < report.required_blocks)
        throw certification_error(
            certification_error::kind::insufficient_blocks,
            "certify: only " + std::to_string(report.blocks_used) + " Rosser blocks, need " +
                std::to_string(report.required_blocks));

    // Forward flanking run starting at g_p closes N(g_p) <= p + 1.
    long q = p;
    double gq_ord = gp.ordinate;
    while (report.forward_blocks < gram_block_requirement(consts, gq_ord)) {
        long r = q + 1;
        bool indeterminate = false;
        GramSignInfo ri = gram_sign(r, options.policy);
        while (!ri.good) {
            indeterminate = indeterminate || !ri.determinate;
            ++r;
            if (r - q > 64)
                throw certification_error(certification_error::kind::misaligned_run,
                                          "certify: no good Gram point found after index " +
                                              std::to_string(q),
                                          q);
            ri = gram_sign(r, options.policy);
        }
        if (indeterminate)
            throw certification_error(certification_error::kind::indeterminate_sign,
                                      "certify: indeterminate sign in the forward run at index " +
                                          std::to_string(q),
                                      q);
        std::vector<long> cs;
        double prev_ord = gq_ord;
        for (long i = q; i < r; ++i) {
            const double next_ord = (i + 1 == r) ? ri.ordinate : gram_point(i + 1).ordinate;
            cs.push_back(static_cast<long>(
                scan_interval(prev_ord, next_ord, options.policy).size()));
            prev_ord = next_ord;
        }
        if (!rosser_pattern_ok(cs))
            throw certification_error(certification_error::kind::rosser_violation,
                                      "certify: Rosser's rule fails in the forward run at index " +
                                          std::to_string(q),
                                      q);
        ++report.forward_blocks;
        q = r;
        gq_ord = ri.ordinate;
        if (report.forward_blocks > 512)
            throw certification_error(certification_error::kind::insufficient_blocks,
                                      "certify: forward run grew unreasonably long", q);
    }

    // Locate every zero below g_n; combined with N(g_n) <= n + 1 from the main
    // run this pins N(g_n) = n + 1.
    const long below =
        static_cast<long>(scan_interval(options.scan_from, gn.ordinate, options.policy).size());
    if (below != n + 1)
        throw certification_error(certification_error::kind::count_mismatch,
                                  "certify: located " + std::to_string(below) +
                                      " zeros below g_n, expected " + std::to_string(n + 1));

    long located = below;
    for (const auto& block : cls.blocks) located += block.total_count();
    report.lower_count = located;
    report.upper_bound = p + 1;
    if (located != p + 1)
        throw certification_error(certification_error::kind::count_mismatch,
                                  "certify: located " + std::to_string(located) +
                                      " zeros up to g_p, expected " + std::to_string(p + 1));

    // Counting-formula cross-check; a mismatch here is a hard failure.
    const long from_theta = std::lround(theta(gp.ordinate) / kPi + 1.0);
    if (from_theta != p + 1)
        throw certification_error(certification_error::kind::count_mismatch,
                                  "certify: counting-formula cross-check failed: theta gives " +
                                      std::to_string(from_theta) + ", certified " +
                                      std::to_string(p + 1));

    report.certified = true;
    report.exact_count = p + 1;
    return report;
}

}  // namespace turing

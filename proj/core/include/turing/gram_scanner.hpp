#pragma once

// Sign-change scanning of Z(t), Gram-block classification under Rosser's
// rule, and exact zero-count certification via the Lehman--Brent criterion:
// if N consecutive Gram blocks with union [g_n, g_p) satisfy Rosser's rule
// and N >= b/(6 pi) log^2 g_p + (a - b log 2 pi)/(6 pi) log g_p, then
// N(g_n) <= n+1 and N(g_p) >= p+1.
//
// A sign is treated as indeterminate whenever |Z(t)| falls below the formula
// remainder bound; indeterminate signs poison certification, they are never
// guessed.

#include <turing/constants.hpp>
#include <turing/riemann_siegel.hpp>

#include <optional>
#include <vector>

namespace turing {

struct ScanPolicy {
    double step_fraction = 0.25;  // step <= step_fraction * pi / theta'(t)
    int refine_factor = 4;        // density multiplier between stability passes
    int max_depth = 8;            // bounded refinement depth
    int z_order = 2;              // Riemann-Siegel correction order

    void validate() const;
};

struct SignChangeBracket {
    double t_lo, t_hi;  // sign(Z(t_lo)) * sign(Z(t_hi)) < 0, both determinate
};

// All sign changes of Z on [t_lo, t_hi]; the count must be stable under one
// refine_factor-times denser pass, else the scan refines again up to
// max_depth before failing.
std::vector<SignChangeBracket> scan_interval(double t_lo, double t_hi,
                                             const ScanPolicy& policy = {});

struct GramBlock {
    long start_index = 0;            // n: the block is (g_n, g_{n+p_len}]
    int p_len = 0;                   // number of Gram intervals
    std::vector<long> counts;        // sign changes per Gram interval
    bool rosser_ok = false;          // block holds exactly p_len zeros, right parities
    bool indeterminate = false;      // some sign in the block was indeterminate

    long total_count() const;
};

// A run at the range boundary that starts or ends at a bad Gram point; it is
// reported but never classified.
struct PartialBlock {
    long start_index = 0;
    int length = 0;
    std::vector<long> counts;
};

struct BlockClassification {
    long n_lo = 0, n_hi = 0;
    std::vector<GramBlock> blocks;
    std::optional<PartialBlock> leading;
    std::optional<PartialBlock> trailing;
};

// Partitions [g_{n_lo}, g_{n_hi}) into maximal Gram blocks.
BlockClassification classify_blocks(long n_lo, long n_hi, const ScanPolicy& policy = {});

// True when sign(Z(g_n)) (-1)^n > 0 with a determinate sign, i.e. g_n can
// start or end a Gram block.
bool is_good_gram_point(long n, const ScanPolicy& policy = {});

struct CertificationReport {
    long n = 0, p = 0;
    double g_n = 0.0, g_p = 0.0;       // ordinates of the range endpoints
    long blocks_used = 0;              // Rosser-satisfying blocks in [g_n, g_p)
    long required_blocks = 0;          // Lehman--Brent requirement at g_p
    long forward_blocks = 0;           // flanking Rosser run starting at g_p
    bool certified = false;
    long lower_count = 0;              // zeros located up to g_p
    long upper_bound = 0;              // N(g_p) bound from the forward run
    std::optional<long> exact_count;   // N(g_p), present when both sides close
    TuringConstants constants_used;

    bool operator==(const CertificationReport&) const = default;
};

struct CertifyOptions {
    ScanPolicy policy;
    double scan_from = 10.0;  // bottom scan start; below the first zero ordinate
};

// Certifies N(g_p) = p + 1 exactly: the run [g_n, g_p) must be block-aligned,
// Rosser-satisfying and at least required_blocks long; a forward Rosser run
// starting at g_p closes the upper bound and a bottom scan locates the n+1
// zeros below g_n. Requires g_n > 168 pi. Throws certification_error on any
// Rosser violation, misalignment, indeterminate sign or count mismatch.
CertificationReport certify(long n, long p, const TuringConstants& consts,
                            const CertifyOptions& options = {});

}  // namespace turing

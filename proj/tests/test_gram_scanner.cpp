#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <turing/gram_scanner.hpp>

#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

using namespace turing;

namespace {

constexpr double kPi = std::numbers::pi;

TuringConstants fresh_constants() {
    return zeta_constants({1.10, 0.75});
}

long oracle_count(double t_lo, double t_hi) {
    // 64x the quarter-gap scanning density
    const double mean_gap = kPi / theta_deriv(0.5 * (t_lo + t_hi));
    const long samples = std::max<long>(64, static_cast<long>(
        64.0 * 4.0 * (t_hi - t_lo) / mean_gap));
    return oracle::grid_sign_changes(
        [](double t) { return z_function(t, 2).value; }, t_lo, t_hi, samples);
}

}  // namespace

TEST_CASE("one bracket between the first two Gram points") {
    const auto brackets =
        scan_interval(gram_point(0).ordinate, gram_point(1).ordinate);
    REQUIRE(brackets.size() == 1);
    const auto& b = brackets.front();
    CHECK(z_function(b.t_lo, 2).sign() * z_function(b.t_hi, 2).sign() < 0);
    CHECK(b.t_lo < b.t_hi);
}

TEST_CASE("degenerate range yields no brackets") {
    CHECK(scan_interval(50.0, 50.0).empty());
    CHECK_THROWS_AS(scan_interval(9.0, 50.0), validation_error);
    CHECK_THROWS_AS(scan_interval(60.0, 50.0), validation_error);
}

TEST_CASE("scan matches the 64x-density oracle on [g_0, g_100]") {
    const double lo = gram_point(0).ordinate;
    const double hi = gram_point(100).ordinate;
    const auto brackets = scan_interval(lo, hi);
    CHECK(static_cast<long>(brackets.size()) == oracle_count(lo, hi));
    // brackets are ordered and sign-consistent
    for (std::size_t i = 1; i < brackets.size(); ++i)
        CHECK(brackets[i - 1].t_hi <= brackets[i].t_lo);
}

TEST_CASE("scan policy validation") {
    ScanPolicy p;
    p.step_fraction = 0.3;
    CHECK_THROWS_AS(scan_interval(20.0, 30.0, p), validation_error);
    p = ScanPolicy{};
    p.refine_factor = 1;
    CHECK_THROWS_AS(scan_interval(20.0, 30.0, p), validation_error);
    p = ScanPolicy{};
    p.z_order = 5;
    CHECK_THROWS_AS(scan_interval(20.0, 30.0, p), validation_error);
}

TEST_CASE("Gram's-law region classifies into length-1 Rosser blocks") {
    const auto cls = classify_blocks(0, 60);
    CHECK(!cls.leading);
    CHECK(!cls.trailing);
    REQUIRE(cls.blocks.size() == 60);
    for (const auto& b : cls.blocks) {
        CHECK(b.p_len == 1);
        CHECK(b.rosser_ok);
        CHECK(!b.indeterminate);
        CHECK(b.total_count() == 1);
    }
}

TEST_CASE("block structure on [g_0, g_126] matches the fine-grid oracle placement") {
    const auto cls = classify_blocks(0, 126);
    CHECK(!cls.leading);
    long zeros = 0;
    long covered = 0;
    for (const auto& b : cls.blocks) {
        zeros += b.total_count();
        covered += b.p_len;
        CHECK(b.rosser_ok);  // Rosser's rule holds throughout this range
        if (b.rosser_ok) CHECK(b.total_count() == b.p_len);
    }
    if (cls.trailing) {
        covered += cls.trailing->length;
        zeros += std::accumulate(cls.trailing->counts.begin(), cls.trailing->counts.end(), 0L);
    }
    CHECK(covered == 126);
    // oracle: total zeros in [g_0, g_126)
    CHECK(zeros == oracle_count(gram_point(0).ordinate, gram_point(126).ordinate));

    // g_126 is the first bad Gram point, so a length-2 block appears at 125
    bool has_len2 = false;
    for (const auto& b : cls.blocks)
        if (b.start_index == 125 && b.p_len == 2) has_len2 = true;
    const bool in_trailing = cls.trailing && cls.trailing->start_index == 125;
    CHECK((has_len2 || in_trailing));
}

TEST_CASE("the first Gram-law failure forms a (0, 2) block") {
    const auto cls = classify_blocks(120, 130);
    bool found = false;
    for (const auto& b : cls.blocks) {
        if (b.start_index == 125) {
            found = true;
            CHECK(b.p_len == 2);
            CHECK(b.rosser_ok);
            REQUIRE(b.counts.size() == 2);
            CHECK(b.counts[0] % 2 == 0);
            CHECK(b.counts[1] % 2 == 0);
            CHECK(b.total_count() == 2);
        }
    }
    CHECK(found);
}

TEST_CASE("classify flags a partial block at a bad boundary") {
    // g_126 is bad, so starting there leaves a leading partial run
    const auto cls = classify_blocks(126, 140);
    REQUIRE(cls.leading.has_value());
    CHECK(cls.leading->start_index == 126);
    CHECK(cls.leading->length == 1);
    CHECK_THROWS_AS(classify_blocks(10, 10), validation_error);
}

TEST_CASE("certify end-to-end on [g_289, g_730]") {
    const auto consts = fresh_constants();
    const auto report = certify(289, 730, consts);
    CHECK(report.certified);
    CHECK(report.required_blocks == 1);
    CHECK(report.blocks_used >= report.required_blocks);
    REQUIRE(report.exact_count.has_value());
    CHECK(*report.exact_count == 731);
    CHECK(report.lower_count == 731);
    CHECK(report.upper_bound == 731);
    CHECK(*report.exact_count == std::lround(theta(report.g_p) / kPi + 1.0));
    CHECK(report.constants_used == consts);

    // the certified run itself holds exactly p - n zeros
    const auto cls = classify_blocks(289, 730);
    long in_range = 0;
    for (const auto& b : cls.blocks) in_range += b.total_count();
    CHECK(in_range == 730 - 289);
}

TEST_CASE("desk-scale completeness: [g_0, g_2000] count stable under 4x refinement") {
    const double lo = gram_point(0).ordinate;
    const double hi = gram_point(2000).ordinate;
    const auto base = scan_interval(lo, hi);
    ScanPolicy dense;
    dense.step_fraction = 0.0625;
    const auto fine = scan_interval(lo, hi, dense);
    CHECK(base.size() == fine.size());
}

TEST_CASE("certify requirement arithmetic at g_p near 1100") {
    // log g_p ~ 7.0: 0.0031 * 49 + 0.104 * 7 ~ 0.88 -> one block suffices
    const auto consts = fresh_constants();
    CHECK(gram_block_requirement(consts, 1100.0) == 1);
}

TEST_CASE("certify is monotone when the Rosser run is enlarged") {
    const auto consts = fresh_constants();
    const auto base = certify(289, 730, consts);
    REQUIRE(base.certified);
    for (long extra : {1L, 3L}) {
        long p = 730 + extra;
        while (!is_good_gram_point(p)) ++p;
        const auto wider = certify(289, p, consts);
        CHECK(wider.certified);
        CHECK(*wider.exact_count == p + 1);
    }
}

TEST_CASE("certify rejects bad inputs") {
    const auto consts = fresh_constants();
    // family mismatch
    auto dirichlet = dirichlet_constants({1.17, 0.88}, 50.0);
    CHECK_THROWS_AS(certify(289, 730, dirichlet), validation_error);
    // threshold: g_288 = 527.7 < 168 pi = 527.79
    CHECK_THROWS_AS(certify(288, 730, consts), validation_error);
    CHECK_THROWS_AS(certify(730, 289, consts), validation_error);
    // misaligned run: 290 is good, 300 is good, but 299?
    // find a bad index above 289 and certify from it
    long bad = 290;
    while (is_good_gram_point(bad)) ++bad;
    CHECK_THROWS_AS(certify(bad, 730, consts), certification_error);
}

TEST_CASE("certified count is stable under a 4x denser scan") {
    const auto consts = fresh_constants();
    CertifyOptions dense;
    dense.policy.step_fraction = 0.0625;  // 4x the default density
    const auto base = certify(289, 730, consts);
    const auto fine = certify(289, 730, consts, dense);
    CHECK(*base.exact_count == *fine.exact_count);
    CHECK(base.blocks_used == fine.blocks_used);
}

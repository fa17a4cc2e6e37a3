#include "fixtures.hpp"
#include "oracle.hpp"

#include "tsallis/entropy.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace tsallis;

namespace {

ThresholdPair at(int t, int s) { return {static_cast<GrayLevel>(t), static_cast<GrayLevel>(s)}; }

} // namespace

TEST_CASE("class_probability_p2")
{
    const JointHistogram single = fixtures::from_cells({{100, 100, 1}});
    const PrefixTables ts = build_prefix_tables(single, 0.5);
    CHECK(class_probability_p2(ts, at(255, 255)) == 1.0);
    CHECK(class_probability_p2(ts, at(99, 99)) == 0.0);

    std::mt19937_64 rng(31);
    oracle::Grid g{256, {}};
    for (int k = 0; k < 60; ++k)
        g.cells.push_back({static_cast<int>(rng() % 256), static_cast<int>(rng() % 256), 1 + rng() % 20});
    const JointHistogram h = fixtures::to_histogram(g);
    double direct = 0.0;
    for (int i = 0; i <= 37; ++i)
        for (int j = 0; j <= 120; ++j)
            direct += h.p(i, j);
    CHECK(std::abs(class_probability_p2(build_prefix_tables(h, 0.5), at(37, 120)) - direct) <= 1e-12);
}

TEST_CASE("Tsallis class entropies, analytic cases")
{
    // Object: one cell. Background: one cell.
    const JointHistogram one = fixtures::from_cells({{10, 10, 3}, {200, 200, 5}});
    for (double q : {0.1, 0.5, 0.999, 1.001, 2.0, 3.5}) {
        const ClassEntropies e = tsallis_class_entropies(build_prefix_tables(one, q), at(100, 100));
        REQUIRE(e.valid);
        CHECK(e.sA == 0.0);
        CHECK(e.sB == 0.0);
    }

    // Object: two equal cells.
    const JointHistogram two = fixtures::from_cells({{10, 10, 1}, {20, 20, 1}, {200, 200, 2}});
    const ClassEntropies e2 = tsallis_class_entropies(build_prefix_tables(two, 2.0), at(100, 100));
    CHECK(e2.valid);
    CHECK(e2.p2 == 0.5);
    CHECK(e2.sA == doctest::Approx(0.5).epsilon(1e-14));
    const ClassEntropies eh = tsallis_class_entropies(build_prefix_tables(two, 0.5), at(100, 100));
    CHECK(eh.sA == doctest::Approx((1.0 - 2.0 * std::sqrt(0.5)) / -0.5).epsilon(1e-14));
    CHECK(eh.sA == doctest::Approx(0.828427).epsilon(1e-6));
}

TEST_CASE("uniform n-cell class at q=2 has entropy 1 - 1/n")
{
    for (int n : {2, 3, 5, 8, 13}) {
        oracle::Grid g{256, {{250, 250, 1}}};
        for (int k = 0; k < n; ++k)
            g.cells.push_back({k, k, 4});
        const auto tbl = build_prefix_tables(fixtures::to_histogram(g), 2.0);
        const ClassEntropies e = tsallis_class_entropies(tbl, at(100, 100));
        CHECK(e.sA == doctest::Approx(1.0 - 1.0 / n).epsilon(1e-14));
    }
}

TEST_CASE("Shannon class entropies, analytic cases")
{
    const JointHistogram two = fixtures::from_cells({{10, 10, 1}, {20, 20, 1}, {200, 200, 2}});
    const ClassEntropies e = shannon_class_entropies(build_prefix_tables(two, 1.0), at(100, 100));
    CHECK(e.valid);
    CHECK(e.sA == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(e.sB == 0.0);

    const JointHistogram three = fixtures::from_cells({{1, 1, 2}, {2, 2, 1}, {3, 3, 1}, {90, 90, 7}});
    const ClassEntropies e3 = shannon_class_entropies(build_prefix_tables(three, 1.0), at(50, 50));
    CHECK(e3.sA == doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-14));
    CHECK(e3.sA == doctest::Approx(1.039721).epsilon(1e-6));
}

TEST_CASE("single-cell classes are exactly zero for every q")
{
    std::mt19937_64 rng(4);
    for (int k = 0; k < 50; ++k) {
        const auto a = 1 + rng() % 1000;
        const auto b = 1 + rng() % 1000;
        const JointHistogram h = fixtures::from_cells({{30, 40, a}, {150, 160, b}});
        for (double q : {0.05, 0.3, 1.0, 1.7}) {
            const auto tbl = build_prefix_tables(h, q);
            const ClassEntropies e = q == 1.0 ? shannon_class_entropies(tbl, at(90, 90))
                                              : tsallis_class_entropies(tbl, at(90, 90));
            CHECK(e.sA == 0.0);
            CHECK(e.sB == 0.0);
        }
    }
}

TEST_CASE("combine_pseudo_additive")
{
    CHECK(combine_pseudo_additive({0.3, 0.4, 0.5, true}, 1.0) == doctest::Approx(0.7));
    CHECK(combine_pseudo_additive({0.5, 0.5, 0.5, true}, 2.0) == 0.75);

    const double s = 2.0 * std::sqrt(2.0) - 2.0;
    // Two independent uniform 2-state systems compose to a uniform 4-state one.
    const double four_state = (1.0 - 4.0 * std::sqrt(0.25)) / -0.5;
    CHECK(combine_pseudo_additive({s, s, 0.5, true}, 0.5) == doctest::Approx(four_state).epsilon(1e-14));
    CHECK(four_state == 2.0);

    CHECK(combine_pseudo_additive({1.0, 1.0, 0.0, false}, 0.5) == kInvalidCriterion);
    CHECK(combine_pseudo_additive({1.0, 1.0, 1.0, false}, 1.0) == kInvalidCriterion);
}

TEST_CASE("invalid candidates give the sentinel")
{
    const JointHistogram h = fixtures::from_cells({{50, 50, 1}, {200, 200, 1}});
    for (double q : {0.5, 1.0, 2.0}) {
        const auto tbl = build_prefix_tables(h, q);
        CHECK(criterion(tbl, at(255, 255)) == kInvalidCriterion);
        CHECK(criterion(tbl, at(49, 255)) == kInvalidCriterion);
        CHECK(criterion(tbl, at(255, 49)) == kInvalidCriterion);
        CHECK(criterion(tbl, at(200, 200)) == kInvalidCriterion);
    }
}

TEST_CASE("empty background quadrant follows the formulas")
{
    // Remaining mass sits off-diagonal in quadrant 1.
    const JointHistogram h = fixtures::from_cells({{10, 10, 1}, {10, 20, 1}, {200, 5, 2}});
    const ThresholdPair pair = at(100, 100);
    for (double q : {0.5, 2.0}) {
        const ClassEntropies e = tsallis_class_entropies(build_prefix_tables(h, q), pair);
        REQUIRE(e.valid);
        CHECK(e.p2 == 0.5);
        CHECK(e.sB == 1.0 / (q - 1.0));
    }
    const ClassEntropies sh = shannon_class_entropies(build_prefix_tables(h, 1.0), pair);
    CHECK(sh.sB == doctest::Approx(std::log(0.5)).epsilon(1e-15));
}

TEST_CASE("criterion agrees with the direct-sum oracle")
{
    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 10; ++trial) {
        const oracle::Grid g = fixtures::random_grid(rng, 12);
        const JointHistogram h = fixtures::to_histogram(g);
        for (double q : {0.1, 0.5, 1.0, 2.0}) {
            const auto tbl = build_prefix_tables(h, q);
            for (int t = 0; t < 13; ++t)
                for (int s = 0; s < 13; ++s) {
                    const double want = oracle::criterion(g, t, s, q);
                    const double got = criterion(tbl, at(t, s));
                    if (std::isinf(want))
                        CHECK(got == kInvalidCriterion);
                    else
                        CHECK(std::abs(got - want) <= 1e-10 * std::max(1.0, std::abs(want)));
                }
        }
    }
}

TEST_CASE("criterion is bit-identical under integer scaling of counts")
{
    std::mt19937_64 rng(12);
    const JointHistogram h = fixtures::to_histogram(fixtures::random_grid(rng, 40, 0.3, 500));
    for (std::uint64_t k : {2u, 7u, 100u}) {
        const JointHistogram hk = h.scaled(k);
        for (double q : {0.1, 1.0, 2.0}) {
            const auto a = build_prefix_tables(h, q);
            const auto b = build_prefix_tables(hk, q);
            for (int t = 0; t < 48; t += 3)
                for (int s = 0; s < 48; s += 2)
                    CHECK(criterion(a, at(t, s)) == criterion(b, at(t, s)));
        }
    }
}

// The background class is normalized by 1 - P2 rather than its own mass P4,
// so the Tsallis criterion carries a (1 - P4/(1 - P2)) / (q - 1) term. The
// q -> 1 limit therefore exists exactly on candidates with no mass in the
// two ignored quadrants.
TEST_CASE("Tsallis criterion converges to Shannon as q -> 1 on gap-free candidates")
{
    std::mt19937_64 rng(1001);
    int checked = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const JointHistogram h = fixtures::to_histogram(fixtures::random_grid(rng, 16, 0.03));
        const auto sh = build_prefix_tables(h, 1.0);
        const auto lo = sh.with_q(1.0 - 1e-4);
        const auto hi = sh.with_q(1.0 + 1e-4);
        double worst = 0.0;
        for (int t = 0; t < 16; ++t)
            for (int s = 0; s < 16; ++s) {
                const double ref = criterion(sh, at(t, s));
                if (ref == kInvalidCriterion || background_normalizer_gap(sh, at(t, s)) != 0.0)
                    continue;
                ++checked;
                worst = std::max(worst, std::abs(criterion(lo, at(t, s)) - ref));
                worst = std::max(worst, std::abs(criterion(hi, at(t, s)) - ref));
            }
        CHECK(worst < 1e-3);
    }
    CHECK(checked > 20);

    // Purely diagonal histogram: every diagonal candidate is gap-free.
    oracle::Grid g{256, {}};
    for (int k = 0; k < 16; ++k)
        g.cells.push_back({k * 16, k * 16, 1 + rng() % 30});
    const auto sh = build_prefix_tables(fixtures::to_histogram(g), 1.0);
    for (double q : {1.0 - 1e-4, 1.0 + 1e-4}) {
        const auto near = sh.with_q(q);
        for (int t = 0; t < 240; ++t)
            CHECK(std::abs(criterion(near, at(t, t)) - criterion(sh, at(t, t))) < 1e-3);
    }
}

TEST_CASE("off-diagonal mass makes the Tsallis criterion diverge near q = 1")
{
    const JointHistogram h = fixtures::from_cells({{10, 10, 4}, {10, 200, 1}, {200, 10, 3}, {200, 200, 2}});
    const auto sh = build_prefix_tables(h, 1.0);
    const ThresholdPair pair = at(100, 100);
    const double gap_ratio = background_normalizer_gap(sh, pair) / (1.0 - class_probability_p2(sh, pair));
    for (double eps : {1e-3, 1e-5}) {
        const double lo = criterion(sh.with_q(1.0 - eps), pair);
        const double hi = criterion(sh.with_q(1.0 + eps), pair);
        CHECK(lo * eps == doctest::Approx(-gap_ratio).epsilon(0.05));
        CHECK(hi * eps == doctest::Approx(gap_ratio).epsilon(0.05));
    }
}

TEST_CASE("background normalizer gap equals the off-diagonal mass")
{
    const JointHistogram h = fixtures::from_cells({{10, 10, 4}, {10, 200, 1}, {200, 10, 3}, {200, 200, 2}});
    const auto tbl = build_prefix_tables(h, 0.5);
    CHECK(background_normalizer_gap(tbl, at(100, 100)) == 0.4);
    CHECK(background_normalizer_gap(tbl, at(255, 255)) == 0.0);
}

TEST_CASE("entropy paths check the table kind")
{
    const JointHistogram h = fixtures::from_cells({{10, 10, 1}, {20, 20, 1}});
    CHECK_THROWS_AS(shannon_class_entropies(build_prefix_tables(h, 0.5), at(15, 15)), std::invalid_argument);
    CHECK_THROWS_AS(tsallis_class_entropies(build_prefix_tables(h, 1.0), at(15, 15)), std::invalid_argument);
}

#include <gtest/gtest.h>

#include "biasgraph/bias.hpp"
#include "biasgraph/corpus.hpp"
#include "biasgraph/generators.hpp"
#include "oracles.hpp"

using namespace biasgraph;

namespace {

OrientedGraph triangle() { return OrientedGraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}}); }
OrientedGraph four_cycle() { return OrientedGraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
OrientedGraph transitive3() { return OrientedGraph::from_arcs(3, {{0, 1}, {0, 2}, {1, 2}}); }

const Ratio kHalf{1, 2};

}  // namespace

TEST(ExactOw, Examples) {
  const auto arc = exact_ow(OrientedGraph::from_arcs(2, {{0, 1}}));
  EXPECT_EQ(arc.e_ab, 1U);
  EXPECT_EQ(arc.a, VertexSet(2, {0}));
  // B is the full partner B(A), which also holds the tail.
  EXPECT_TRUE(arc.b.contains(1));
  EXPECT_EQ(arc.b, b_set(OrientedGraph::from_arcs(2, {{0, 1}}), arc.a));
  EXPECT_EQ(exact_ow(triangle()).e_ab, 1U);
  const auto c4 = exact_ow(four_cycle());
  EXPECT_EQ(c4.e_ab, 2U);
  EXPECT_EQ(c4.e_ba, 0U);
  EXPECT_TRUE(validate(four_cycle(), c4));
}

TEST(ExactOw, MatchesOracleOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int n = 1 + static_cast<int>(seed % 12);
    const auto d = oracle::random_graph(seed, n, 0.2 + 0.1 * static_cast<double>(seed % 7));
    const auto c = exact_ow(d);
    ASSERT_EQ(c.e_ab, oracle::ow(d)) << serialize(d);
    ASSERT_TRUE(validate(d, c));
    ASSERT_EQ(c.e_ba, 0U);
  }
}

TEST(ExactOw, ReversalInvariant) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto d = oracle::random_graph(seed + 1000, 9, 0.5);
    EXPECT_EQ(exact_ow(d).e_ab, exact_ow(reverse(d)).e_ab);
  }
}

TEST(ExactOw, SizeLimit) {
  const auto d = random_oriented_gne(26, 40, 1);
  EXPECT_THROW(exact_ow(d), SizeLimitError);
  EXPECT_NO_THROW(exact_ow(random_oriented_gne(26, 20, 1), {.limit = 26}));
  EXPECT_THROW(exact_ow(random_oriented_gne(33, 40, 1), {.limit = 40}), SizeLimitError);  // beyond the scan width
}

TEST(BestB, Examples) {
  const auto t = best_b_for_a(triangle(), VertexSet(3, {0, 1}), kHalf);
  EXPECT_EQ(t.b, VertexSet(3, {1, 2}));
  EXPECT_EQ(t.e_ab, 2U);
  EXPECT_EQ(t.e_ba, 1U);
  EXPECT_EQ(best_b_for_a(triangle(), VertexSet(3), kHalf).e_ab, 0U);
  const auto arc = best_b_for_a(OrientedGraph::from_arcs(2, {{0, 1}}), VertexSet(2, {0}), kHalf);
  EXPECT_EQ(arc.b, VertexSet(2, {1}));
  EXPECT_EQ(arc.e_ab, 1U);
  EXPECT_EQ(arc.e_ba, 0U);
}

TEST(BestB, MatchesEveryBOracle) {
  const Ratio gammas[] = {{1, 2}, {9, 10}, {2, 5}};
  SplitMix64 rng(77);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);  // 2..10
    const auto d = oracle::random_graph(seed + 500, n, 0.3 + 0.1 * static_cast<double>(seed % 6));
    for (const Ratio& g : gammas) {
      for (int t = 0; t < 12; ++t) {
        const std::uint64_t mask = rng.below(std::uint64_t{1} << n);
        const auto a = VertexSet::from_mask(n, mask);
        const auto r = best_b_for_a(d, a, g);
        ASSERT_EQ(r.e_ab, oracle::best_b(d, mask, g.num, g.den)) << serialize(d) << " A=" << mask << " g=" << g.str();
        ASSERT_EQ(r.e_ab, arc_count_between(d, a, r.b));
        ASSERT_EQ(r.e_ba, arc_count_between(d, r.b, a));
        ASSERT_LE(static_cast<std::int64_t>(r.e_ba) * g.den, static_cast<std::int64_t>(r.e_ab) * g.num);
      }
    }
  }
}

TEST(ExactBias, Examples) {
  const auto t = exact_bias(triangle(), kHalf);
  EXPECT_EQ(t.e_ab, 2U);
  EXPECT_TRUE(validate(triangle(), t));
  EXPECT_EQ(exact_bias(OrientedGraph::from_arcs(4, {}), kHalf).e_ab, 0U);
  EXPECT_EQ(exact_bias(transitive3(), kHalf).e_ab, 3U);
}

TEST(ExactBias, MatchesPairOracleOnCorpus) {
  const Ratio gammas[] = {{1, 2}, {9, 10}, {2, 5}};
  for (int n = 1; n <= 4; ++n) {
    for_each_oriented_graph(n, [&](std::uint64_t, const OrientedGraph& d) {
      for (const Ratio& g : gammas) {
        const auto c = exact_bias(d, g);
        ASSERT_EQ(c.e_ab, oracle::bias(d, g.num, g.den)) << serialize(d) << " g=" << g.str();
        ASSERT_TRUE(validate(d, c));
      }
    });
  }
}

TEST(ExactBias, MatchesPairOracleOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto d = oracle::random_graph(seed + 9000, 6, 0.7);
    EXPECT_EQ(exact_bias(d, kHalf).e_ab, oracle::bias(d, 1, 2)) << serialize(d);
    EXPECT_EQ(exact_bias(d, {9, 10}).e_ab, oracle::bias(d, 9, 10)) << serialize(d);
  }
}

TEST(ExactBias, MonotoneInGamma) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto d = oracle::random_graph(seed + 3000, 10, 0.5);
    const auto lo = exact_bias(d, {2, 5}).e_ab, mid = exact_bias(d, kHalf).e_ab, hi = exact_bias(d, {9, 10}).e_ab;
    EXPECT_LE(lo, mid);
    EXPECT_LE(mid, hi);
    EXPECT_LE(exact_ow(d).e_ab, lo);
    EXPECT_LE(hi, d.arc_count());
  }
}

TEST(ExactBias, ReversalInvariant) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto d = oracle::random_graph(seed + 4000, 10, 0.5);
    EXPECT_EQ(exact_bias(d, kHalf).e_ab, exact_bias(reverse(d), kHalf).e_ab);
  }
}

TEST(ExactBias, ThreadCountDoesNotChangeTheCertificate) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto d = oracle::random_graph(seed + 5000, 12, 0.5);
    const auto one = exact_bias(d, kHalf, {.threads = 1});
    const auto four = exact_bias(d, kHalf, {.threads = 4});
    EXPECT_EQ(one.e_ab, four.e_ab);
    EXPECT_EQ(one.a, four.a);
    EXPECT_EQ(one.b, four.b);
    EXPECT_EQ(exact_ow(d, {.threads = 1}).a, exact_ow(d, {.threads = 3}).a);
  }
}

TEST(ExactBias, RejectsBadGammaAndSize) {
  EXPECT_THROW(exact_bias(triangle(), {1, 1}), std::invalid_argument);
  EXPECT_THROW(exact_bias(triangle(), {0, 1}), std::invalid_argument);
  EXPECT_THROW(exact_bias(random_oriented_gne(21, 30, 2), kHalf), SizeLimitError);
}

TEST(HeuristicBias, LowerBoundAndExamples) {
  EXPECT_EQ(heuristic_bias(triangle(), kHalf, 5, 100).e_ab, 2U);
  EXPECT_EQ(heuristic_bias(OrientedGraph::from_arcs(5, {}), kHalf, 5, 100).e_ab, 0U);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto d = oracle::random_graph(seed + 6000, 10, 0.5);
    const auto h = heuristic_bias(d, kHalf, seed, 30);
    EXPECT_TRUE(validate(d, h));
    EXPECT_FALSE(h.exact);
    EXPECT_LE(h.e_ab, exact_bias(d, kHalf).e_ab);
  }
}

TEST(HeuristicBias, DeterministicPerSeed) {
  const auto d = random_oriented_gne(40, 200, 3);
  const auto a = heuristic_bias(d, kHalf, 9, 20), b = heuristic_bias(d, kHalf, 9, 20);
  EXPECT_EQ(a.e_ab, b.e_ab);
  EXPECT_EQ(a.a, b.a);
  EXPECT_TRUE(validate(d, a));
}

TEST(Certificate, JsonRoundTripAndValidation) {
  const auto d = four_cycle();
  const auto c = exact_bias(d, kHalf);
  const auto back = certificate_from_json(to_json(c), d.order());
  EXPECT_EQ(back.a, c.a);
  EXPECT_EQ(back.b, c.b);
  EXPECT_EQ(back.e_ab, c.e_ab);
  EXPECT_EQ(back.gamma, c.gamma);
  EXPECT_TRUE(validate(d, back));
  auto bad = c;
  bad.e_ab += 1;
  EXPECT_FALSE(validate(d, bad));
}

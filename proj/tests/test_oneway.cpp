#include <gtest/gtest.h>

#include <cmath>

#include "biasgraph/bias.hpp"
#include "biasgraph/generators.hpp"
#include "biasgraph/oneway.hpp"
#include "oracles.hpp"

using namespace biasgraph;

namespace {

OrientedGraph triangle() { return OrientedGraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}}); }
OrientedGraph four_cycle() { return OrientedGraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

OrientedGraph circulant(int n, std::vector<int> offs) { return circulant_digraph(n, offs); }

OrientedGraph out_star(int leaves) {
  std::vector<Arc> arcs;
  for (int v = 1; v <= leaves; ++v) arcs.push_back({0, v});
  return OrientedGraph::from_arcs(leaves + 1, std::move(arcs));
}

}  // namespace

TEST(Path2, Examples) {
  EXPECT_EQ(path2_count_within(triangle(), VertexSet::full(3)), 3U);
  EXPECT_EQ(path2_count_within(triangle(), VertexSet(3, {1})), 0U);
  EXPECT_EQ(path2_count_within(four_cycle(), VertexSet(4, {0, 2})), 2U);
}

TEST(Path2, MatchesOracle) {
  SplitMix64 rng(5);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto d = oracle::random_graph(seed, 12, 0.5);
    for (int t = 0; t < 10; ++t) {
      const std::uint64_t mask = rng.below(1U << 12);
      ASSERT_EQ(path2_count_within(d, VertexSet::from_mask(12, mask)), oracle::two_paths_within(d, mask));
    }
  }
}

TEST(Greedy, Examples) {
  const auto c8 = greedy_oneway_regular(circulant(8, {1, 2}));
  EXPECT_EQ(c8.stop_t, 2);
  EXPECT_GE(c8.e_ab, 2U);
  EXPECT_EQ(c8.e_ba, 0U);
  const auto c12 = greedy_oneway_regular(circulant(12, {1, 2, 3}));
  EXPECT_GE(c12.e_ab, 3U);
  EXPECT_EQ(c12.e_ba, 0U);
  const auto t = greedy_oneway_regular(triangle());
  EXPECT_EQ(t.a, VertexSet(3, {0}));
  EXPECT_EQ(t.b, VertexSet(3, {0, 1}));  // 2 -> 0 keeps vertex 2 out of B(A)
  EXPECT_EQ(t.e_ab, 1U);
}

TEST(Greedy, TraceMatchesTwoPathOracleAndInvariant) {
  for (int n = 8; n <= 40; ++n) {
    for (int d = 1; d <= 4 && 2 * d <= n - 1; ++d) {
      std::vector<int> offs;
      for (int s = 1; s <= d; ++s) offs.push_back(s);
      const auto g = circulant(n, offs);
      const auto tr = greedy_oneway_regular(g, true);
      ASSERT_EQ(tr.order.size(), static_cast<std::size_t>(n));
      std::uint64_t mask = 0;
      for (std::size_t t = 0; t < tr.order.size(); ++t) {
        mask |= std::uint64_t{1} << tr.order[t];
        ASSERT_EQ(tr.e2[t], oracle::two_paths_within(g, mask)) << "n=" << n << " d=" << d << " t=" << t + 1;
      }
      for (int t = 1; t <= tr.stop_t; ++t) {
        const auto tt = static_cast<std::uint64_t>(t);
        ASSERT_LE(static_cast<std::uint64_t>(n) * tr.e2[tt - 1], static_cast<std::uint64_t>(d * d) * (tt * tt - 1));
      }
      EXPECT_EQ(tr.e_ba, 0U);
      EXPECT_GE(4 * tr.e_ab, static_cast<std::uint64_t>(n));
      EXPECT_EQ(tr.e_ab, arc_count_between(g, tr.a, tr.b));
    }
  }
}

TEST(Greedy, RejectsIrregularAndTinyInputs) {
  EXPECT_THROW(greedy_oneway_regular(OrientedGraph::from_arcs(2, {{0, 1}})), std::invalid_argument);
  EXPECT_THROW(greedy_oneway_regular(OrientedGraph::from_arcs(3, {})), std::invalid_argument);
}

TEST(Sampler, FullProbabilityGivesSinks) {
  const auto r = sampled_oneway(circulant(9, {1, 2}), 1.0, 4, 10);
  EXPECT_EQ(r.total_e_ab, 0U);
  EXPECT_EQ(r.best.a, VertexSet::full(9));
  EXPECT_TRUE(r.best.b.empty());
}

TEST(Sampler, TinyProbabilityGivesEmptyA) {
  const auto r = sampled_oneway(circulant(9, {1, 2}), 1e-12, 4, 50);
  EXPECT_EQ(r.total_e_ab, 0U);
  EXPECT_EQ(r.mean(), 0.0);
}

TEST(Sampler, CertificatesAreOneWayAndDeterministic) {
  const auto d = random_oriented_gne(30, 120, 8);
  const auto a = sampled_oneway(d, 0.2, 42, 64), b = sampled_oneway(d, 0.2, 42, 64);
  EXPECT_EQ(a.total_e_ab, b.total_e_ab);
  EXPECT_EQ(a.best.a, b.best.a);
  EXPECT_EQ(a.best.e_ba, 0U);
  EXPECT_TRUE(validate(d, a.best));
  EXPECT_EQ(arc_count_between(d, a.best.b, a.best.a), 0U);
}

TEST(Sampler, CirculantMeanBound) {
  const auto d = circulant(32, {1, 2});
  const auto r = sampled_oneway(d, 0.25, 1, 512);
  // 10 * total >= 9 * trials * e / 4D+, with e = 64, D+ = 2.
  EXPECT_GE(10 * r.total_e_ab, 9U * 512U * 8U);
  EXPECT_GE(r.best.e_ab, 8U);
}

TEST(Sampler, RejectsBadInput) {
  EXPECT_THROW(sampled_oneway(triangle(), 0.0, 1, 1), std::invalid_argument);
  EXPECT_THROW(sampled_oneway(triangle(), 1.5, 1, 1), std::invalid_argument);
  EXPECT_THROW(sampled_oneway(triangle(), 0.5, 1, 0), std::invalid_argument);
  EXPECT_THROW(sampled_oneway(OrientedGraph::from_arcs(3, {}), 0.5, 1, 1), std::invalid_argument);
}

TEST(Banded, Circulant16Band) {
  const auto d = circulant(16, {1});
  const auto band = choose_band(d);
  EXPECT_EQ(band.index, 4);
  EXPECT_EQ(band.size, 16);
  EXPECT_NEAR(band.p, 1.0 / 3.0, 1e-12);
  const auto r = banded_oneway(d, 1, 512);
  EXPECT_GE(10.0 * r.samples.mean(), 9.0 * r.target());
}

TEST(Banded, SingleArc) {
  const auto r = banded_oneway(OrientedGraph::from_arcs(2, {{0, 1}}), 3, 64);
  EXPECT_EQ(r.samples.best.e_ab, 1U);
  EXPECT_GE(9.0 * static_cast<double>(r.samples.best.e_ab), 2.0);
}

TEST(Banded, CertificateStaysInBand) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto d = random_oriented_gne(20, 60, seed);
    bool isolated = false;
    for (int v = 0; v < 20; ++v) isolated = isolated || (d.in_degree(v) + d.out_degree(v) == 0);
    if (isolated) {
      EXPECT_THROW(banded_oneway(d, seed, 8), std::invalid_argument);
      continue;
    }
    const auto r = banded_oneway(d, seed, 32);
    const auto& c = r.samples.best;
    EXPECT_EQ(c.e_ba, 0U);
    EXPECT_TRUE(validate(d, c));
    // On the reversed graph the roles of A and B swap, and so does the band side.
    const auto& band_side = r.band.reversed ? c.a : c.b;
    for (int v : band_side.members()) {
      const int deg = r.band.reversed ? d.out_degree(v) : d.in_degree(v);
      const int other = r.band.reversed ? d.in_degree(v) : d.out_degree(v);
      EXPECT_GE(deg, other);
      EXPECT_GE(static_cast<long long>(deg) << r.band.index, 20);
      EXPECT_LT(static_cast<long long>(deg) << (r.band.index - 1), 20);
    }
  }
}

TEST(SqrtBound, Examples) {
  EXPECT_EQ(sqrt_lower_bound(OrientedGraph::from_arcs(2, {{0, 1}})).value, 1U);
  EXPECT_EQ(sqrt_lower_bound(out_star(9)).value, 9U);
  const auto t = sqrt_lower_bound(triangle());
  EXPECT_GE(4 * t.value * t.value, 3U);
}

TEST(SqrtBound, WitnessIsValidAndBelowExact) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto d = oracle::random_graph(seed + 70, 12, 0.6);
    if (d.arc_count() == 0) continue;
    const auto s = sqrt_lower_bound(d);
    EXPECT_TRUE(validate(d, s.witness));
    EXPECT_EQ(s.witness.e_ab, s.value);
    EXPECT_GE(4 * s.value * s.value, d.arc_count());
    EXPECT_LE(s.value, exact_ow(d).e_ab);
  }
}

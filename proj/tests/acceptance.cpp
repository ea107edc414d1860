// Acceptance run: one PASS/FAIL line per criterion. Each criterion runs the
// library suite and then re-derives the claim from the brute-force oracles
// in oracles.hpp, so a bug shared by a suite and the library cannot hide.

#include <boost/multiprecision/cpp_int.hpp>

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "biasgraph/bias.hpp"
#include "biasgraph/corpus.hpp"
#include "biasgraph/cycles.hpp"
#include "biasgraph/generators.hpp"
#include "biasgraph/hom.hpp"
#include "biasgraph/oneway.hpp"
#include "biasgraph/suites.hpp"
#include "oracles.hpp"

using namespace biasgraph;
using boost::multiprecision::cpp_int;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

// Oracle values for one corpus graph.
struct CorpusEntry {
  int n = 0;
  std::uint64_t code = 0;
  std::uint64_t m = 0;
  std::uint64_t bias = 0;
  std::uint64_t ow = 0;
  std::uint64_t c4 = 0;
  std::uint64_t two_paths = 0;
  std::uint64_t unbalanced = 0;
  std::uint64_t good = 0;
};

std::vector<CorpusEntry> build_corpus_table(int max_n) {
  std::vector<CorpusEntry> out;
  for (int n = 1; n <= max_n; ++n) {
    for (std::uint64_t code = 0; code < corpus_size(n); ++code) {
      const OrientedGraph d = corpus_graph(n, code);
      CorpusEntry e;
      e.n = n;
      e.code = code;
      e.m = d.arc_count();
      e.bias = oracle::bias(d, 1, 2);
      e.ow = oracle::ow(d);
      e.c4 = oracle::c4(d);
      e.two_paths = oracle::two_paths(d);
      const auto mat = oracle::matrix(d);
      const auto un = static_cast<std::size_t>(n);
      std::vector<std::vector<std::uint64_t>> paths(un, std::vector<std::uint64_t>(un, 0));
      for (std::size_t x = 0; x < un; ++x)
        for (std::size_t y = 0; y < un; ++y)
          for (std::size_t u = 0; u < un; ++u) paths[x][u] += static_cast<std::uint64_t>(mat[x][y] * mat[y][u]);
      for (std::size_t x = 0; x < un; ++x) {
        for (std::size_t u = 0; u < un; ++u) {
          if (x != u && paths[x][u] > 16 * paths[u][x]) e.unbalanced += paths[x][u];
          std::uint64_t outdeg = 0;
          for (std::size_t y = 0; y < un; ++y) outdeg += static_cast<std::uint64_t>(mat[u][y]);
          if (8 * static_cast<std::uint64_t>(n) * outdeg >= e.m) e.good += paths[x][u];
        }
      }
      out.push_back(e);
    }
  }
  return out;
}

const std::vector<CorpusEntry>& corpus_table() {
  static const std::vector<CorpusEntry> table = build_corpus_table(5);
  return table;
}

std::string where(const CorpusEntry& e) { return corpus_key(e.n, e.code); }

void suite(Outcome& o, const std::string& name, SuiteOptions opts = {}) {
  const Report r = verify(name, opts);
  o.require(r.ok() && r.passed > 0,
            "suite " + name + " reported " + std::to_string(r.failed) + " failures of " + std::to_string(r.instances));
  o.detail += (o.detail.empty() ? "" : "; ") + name + " " + std::to_string(r.passed) + " passed";
}

Outcome criterion1() {
  Outcome o;
  suite(o, "four-cycle");
  std::uint64_t checked = 0;
  for (const auto& e : corpus_table()) {
    if (e.c4 != 0) continue;
    ++checked;
    const auto n = static_cast<std::uint64_t>(e.n);
    o.require(32 * n * n * e.bias >= e.m * e.m, "oracle counterexample " + where(e));
    o.require(exact_bias(corpus_graph(e.n, e.code), {1, 2}).e_ab == e.bias, "bias disagrees with oracle at " + where(e));
  }
  o.detail += "; oracle rechecked " + std::to_string(checked) + " C4-free graphs";
  return o;
}

Outcome criterion2() {
  Outcome o;
  suite(o, "two-paths");
  std::uint64_t checked = 0;
  for (const auto& e : corpus_table()) {
    if (2 * e.bias > e.m) continue;
    ++checked;
    o.require(8 * static_cast<std::uint64_t>(e.n) * e.two_paths >= e.m * e.m, "oracle counterexample " + where(e));
  }
  o.detail += "; oracle rechecked " + std::to_string(checked);
  return o;
}

Outcome criterion3() {
  Outcome o;
  suite(o, "unbalanced-paths");
  for (const auto& e : corpus_table()) {
    o.require(e.unbalanced <= 8 * (e.bias + 1) * static_cast<std::uint64_t>(e.n), "oracle counterexample " + where(e));
    o.require(path_stats(corpus_graph(e.n, e.code)).unbalanced_two_paths == e.unbalanced,
              "unbalanced count disagrees with oracle at " + where(e));
  }
  o.detail += "; oracle rechecked " + std::to_string(corpus_table().size());
  return o;
}

Outcome criterion4() {
  Outcome o;
  suite(o, "good-paths");
  std::uint64_t checked = 0;
  for (const auto& e : corpus_table()) {
    if (8 * e.bias > e.m) continue;
    ++checked;
    o.require(8 * static_cast<std::uint64_t>(e.n) * e.good >= e.m * e.m, "oracle counterexample " + where(e));
    o.require(path_stats(corpus_graph(e.n, e.code)).good_two_paths == e.good,
              "good count disagrees with oracle at " + where(e));
  }
  o.detail += "; oracle rechecked " + std::to_string(checked);
  return o;
}

Outcome criterion5() {
  Outcome o;
  suite(o, "c4-formula");
  for (const auto& e : corpus_table()) {
    o.require(oriented_c4_count(corpus_graph(e.n, e.code)) == e.c4, "count differs from 4-tuple oracle at " + where(e));
  }
  SplitMix64 rng(5005);
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(rng.below(10));
    const double p = 0.2 + 0.7 * rng.uniform01();
    const OrientedGraph d = oracle::random_graph(rng.next(), n, p);
    o.require(oriented_c4_count(d) == oracle::c4(d), "count differs from 4-tuple oracle on\n" + serialize(d));
  }
  o.detail += "; oracle matched corpus + 1000 random graphs";
  return o;
}

Outcome criterion6() {
  Outcome o;
  suite(o, "hom-trace");
  SplitMix64 rng(6006);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng.below(12));
    const OrientedGraph d = oracle::random_graph(rng.next(), n, 0.2 + 0.7 * rng.uniform01());
    for (int k = 3; k <= 6; ++k) {
      std::vector<Arc> arcs;
      for (int j = 0; j < k; ++j) arcs.push_back({j, (j + 1) % k});
      const auto h = PartiallyOrientedGraph::from(k, arcs, {});
      const std::uint64_t trace = oracle::trace_power(d, k);
      o.require(hom_count(h, d) == trace && hom_cycle_count(d, k) == trace,
                "hom/trace mismatch k=" + std::to_string(k) + " on\n" + serialize(d));
    }
  }
  o.detail += "; oracle matched 200 random graphs, k 3..6";
  return o;
}

// Oracle margin: max over (A,B) of e(A,B) - 2 e(B,A).
std::int64_t margin_oracle(const OrientedGraph& d) {
  const std::uint64_t full = std::uint64_t{1} << d.order();
  std::int64_t best = 0;
  for (std::uint64_t a = 0; a < full; ++a)
    for (std::uint64_t b = 0; b < full; ++b)
      best = std::max(best, static_cast<std::int64_t>(oracle::arcs_between(d, a, b)) -
                                2 * static_cast<std::int64_t>(oracle::arcs_between(d, b, a)));
  return best;
}

// Pattern with base-4 pair digits over i<j: 0 none, 1 edge, 2 i->j, 3 j->i.
std::vector<oracle::PatternEdge> oracle_pattern(int k, std::uint64_t code, bool undirect, int& arcs) {
  std::vector<oracle::PatternEdge> out;
  arcs = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const auto digit = static_cast<int>(code & 3U);
      code >>= 2;
      if (digit == 0) continue;
      if (digit >= 2) ++arcs;
      if (digit == 1 || undirect) {
        out.push_back({i, j, 1});
      } else {
        out.push_back(digit == 2 ? oracle::PatternEdge{i, j, 0} : oracle::PatternEdge{j, i, 0});
      }
    }
  }
  return out;
}

// Inequality with eps = (2 bias + 1) / 2n^2, cleared of denominators.
bool dense_holds(std::uint64_t hom, std::uint64_t hom_bar, int s, int n, int k, std::uint64_t bias) {
  const cpp_int p = 2 * cpp_int(bias) + 1, q = 2 * cpp_int(n) * n;
  const cpp_int three_s = pow(cpp_int(3), static_cast<unsigned>(s)), nk = pow(cpp_int(n), static_cast<unsigned>(k));
  return 2 * q * three_s * hom >= 2 * q * hom_bar - (three_s - 1) * p * nk;
}

Outcome criterion7() {
  Outcome o;
  suite(o, "dense");
  std::uint64_t pairs = 0;
  for (const auto& e : corpus_table()) {
    if (e.n > 3) break;
    const OrientedGraph d = corpus_graph(e.n, e.code);
    o.require(2 * margin_oracle(d) <= static_cast<std::int64_t>(2 * e.bias + 1), "cut hypothesis fails at " + where(e));
    for (int k = 1; k <= 4; ++k) {
      const std::uint64_t codes = std::uint64_t{1} << (k * (k - 1));
      for (std::uint64_t code = 0; code < codes; ++code) {
        int s = 0;
        const auto h = oracle_pattern(k, code, false, s);
        const auto hb = oracle_pattern(k, code, true, s);
        ++pairs;
        o.require(dense_holds(oracle::hom(k, h, d), oracle::hom(k, hb, d), s, e.n, k, e.bias),
                  "oracle inequality fails at " + where(e) + " pattern k=" + std::to_string(k) + " code=" +
                      std::to_string(code));
      }
    }
  }
  // n = 4 with one pattern per isomorphism class; hom counts are invariant
  // under relabelling the pattern, so this covers every pattern.
  for (const auto& e : corpus_table()) {
    if (e.n != 4) continue;
    const OrientedGraph d = corpus_graph(e.n, e.code);
    o.require(2 * margin_oracle(d) <= static_cast<std::int64_t>(2 * e.bias + 1), "cut hypothesis fails at " + where(e));
    for (int k = 1; k <= 4; ++k) {
      for (const auto& cls : pattern_classes(k)) {
        int s = 0;
        const std::uint64_t code = pattern_code(cls);
        const auto h = oracle_pattern(k, code, false, s);
        const auto hb = oracle_pattern(k, code, true, s);
        ++pairs;
        o.require(dense_holds(oracle::hom(k, h, d), oracle::hom(k, hb, d), s, e.n, k, e.bias),
                  "oracle inequality fails at " + where(e) + " pattern " + serialize(cls));
      }
    }
  }
  o.detail += "; oracle rechecked " + std::to_string(pairs) + " (H,D) pairs with n <= 4";
  return o;
}

Outcome criterion8() {
  Outcome o;
  suite(o, "greedy-regular");
  int graphs = 0;
  for (int n = 8; n <= 64; ++n) {
    for (int deg = 1; deg <= 4 && 2 * deg <= n - 1; ++deg) {
      std::vector<int> offs;
      for (int s = 1; s <= deg; ++s) offs.push_back(s);
      const OrientedGraph d = circulant_digraph(n, offs);
      const GreedyTrace tr = greedy_oneway_regular(d);
      ++graphs;
      std::uint64_t a = 0;
      for (int t = 1; t <= tr.stop_t; ++t) {
        a |= std::uint64_t{1} << tr.order[static_cast<std::size_t>(t - 1)];
        // The quadratic oracle is affordable on every prefix for small n and
        // on the final set always.
        if (n > 24 && t != tr.stop_t) continue;
        const std::uint64_t e2 = oracle::two_paths_within(d, a);
        const auto tt = static_cast<std::uint64_t>(t);
        o.require(e2 == tr.e2[static_cast<std::size_t>(t - 1)], "trace e2 differs from oracle");
        o.require(static_cast<std::uint64_t>(n) * e2 <= static_cast<std::uint64_t>(deg * deg) * (tt * tt - 1),
                  "trace invariant fails n=" + std::to_string(n) + " d=" + std::to_string(deg));
      }
      std::uint64_t b = 0;
      for (int v = 0; v < n; ++v) {
        bool into = false;
        for (int w = 0; w < n; ++w) into = into || (d.has_arc(v, w) && oracle::bit(a, w));
        if (!into) b |= std::uint64_t{1} << v;
      }
      o.require(oracle::arcs_between(d, b, a) == 0, "e(B,A) != 0");
      o.require(4 * oracle::arcs_between(d, a, b) >= static_cast<std::uint64_t>(n),
                "4 e(A,B) < n at n=" + std::to_string(n) + " d=" + std::to_string(deg));
    }
  }
  o.detail += "; oracle rechecked " + std::to_string(graphs) + " circulants";
  return o;
}

Outcome criterion9() {
  Outcome o;
  suite(o, "sqrt-ow");
  std::uint64_t checked = 0;
  for (const auto& e : corpus_table()) {
    if (e.m == 0) continue;
    ++checked;
    o.require(4 * e.ow * e.ow >= e.m, "oracle counterexample " + where(e));
    o.require(exact_ow(corpus_graph(e.n, e.code)).e_ab == e.ow, "ow disagrees with oracle at " + where(e));
  }
  o.detail += "; oracle rechecked " + std::to_string(checked);
  return o;
}

Outcome criterion10() {
  Outcome o;
  suite(o, "polarity");
  for (int q : {2, 3, 5, 7}) {
    const SimpleGraph g = polarity_graph(q);
    o.require(g.order() == q * q + q + 1, "order wrong for q=" + std::to_string(q));
    o.require(2 * static_cast<int>(g.edge_count()) == q * (q + 1) * (q + 1), "edge count wrong for q=" + std::to_string(q));
    if (q <= 5) {
      o.require(!oracle::has_undirected_c4(g.order(), [&](int a, int b) { return g.adjacent(a, b); }),
                "4-cycle found for q=" + std::to_string(q));
    }
  }
  o.detail += "; oracle 4-tuple scan clean for q 2,3,5";
  return o;
}

Outcome criterion11() {
  Outcome o;
  suite(o, "blow-up");
  int checked = 0;
  for (const auto& e : corpus_table()) {
    if (e.n > 3) break;
    const OrientedGraph d = corpus_graph(e.n, e.code);
    const OrientedGraph b = blow_up(d, 2);
    const std::uint64_t big = oracle::bias(b, 1, 2), small = oracle::bias(d, 9, 10);
    ++checked;
    o.require(big < 16 * (small + 1) * 4, "oracle counterexample " + where(e));
  }
  o.detail += "; oracle rechecked " + std::to_string(checked) + " blow-ups with n <= 3, l = 2";
  return o;
}

// Independent replay of the sampling loop: trial t draws A with one uniform
// per vertex from SplitMix64(seed + t) and pairs it with B(A) (cut to `band`).
std::uint64_t replay_total(const OrientedGraph& d, double p, std::uint64_t seed, int trials, std::uint64_t band) {
  std::uint64_t total = 0;
  const int n = d.order();
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng(seed + static_cast<std::uint64_t>(t));
    std::uint64_t a = 0;
    for (int v = 0; v < n; ++v) {
      if (rng.uniform01() < p) a |= std::uint64_t{1} << v;
    }
    std::uint64_t b = 0;
    for (int v = 0; v < n; ++v) {
      bool into = false;
      for (const Arc& arc : d.arcs()) into = into || (arc.tail == v && oracle::bit(a, arc.head));
      if (!into) b |= std::uint64_t{1} << v;
    }
    total += oracle::arcs_between(d, a, b & band);
  }
  return total;
}

Outcome criterion12() {
  Outcome o;
  suite(o, "samplers");
  const int trials = 512;
  {
    const OrientedGraph d = circulant_digraph(32, std::vector<int>{1, 2});
    const std::uint64_t total = replay_total(d, 0.25, 1, trials, ~std::uint64_t{0});
    // mean >= 0.9 * e / 4D+ with e = 64, D+ = 2
    o.require(10 * total >= 9ULL * 8 * trials, "replayed circulant mean below bound");
    o.require(total == sampled_oneway(d, 0.25, 1, trials).total_e_ab, "replay differs from sampler");
  }
  const OrientedGraph graphs[] = {circulant_digraph(16, std::vector<int>{1}),
                                  random_orientation(polarity_graph(5), 1), random_oriented_gne(40, 200, 1)};
  for (const OrientedGraph& d : graphs) {
    const BandedResult r = banded_oneway(d, 1, trials);
    const OrientedGraph work = r.band.reversed ? reverse(d) : d;
    const int n = d.order();
    std::uint64_t band = 0;
    int band_size = 0;
    for (int v = 0; v < n; ++v) {
      const int in = work.in_degree(v), out = work.out_degree(v);
      if (in >= out && (static_cast<long long>(in) << r.band.index) >= n &&
          (static_cast<long long>(in) << (r.band.index - 1)) < n) {
        band |= std::uint64_t{1} << v;
        ++band_size;
      }
    }
    const std::uint64_t total = replay_total(work, r.band.p, 1, trials, band);
    o.require(band_size == r.band.size, "band size differs from recount");
    o.require(total == r.samples.total_e_ab, "banded replay differs from sampler");
    o.require(10 * total >= 2ULL * static_cast<std::uint64_t>(band_size) * trials, "replayed banded mean below bound");
  }
  o.detail += "; oracle replay matched 4 sampler runs";
  return o;
}

Outcome criterion13() {
  Outcome o;
  suite(o, "six-cycles");
  std::uint64_t checked = 0;
  for (const auto& e : corpus_table()) {
    const OrientedGraph d = corpus_graph(e.n, e.code);
    for (int k = 3; k <= std::min(e.n, 5); ++k) {
      const std::uint64_t simple = oracle::simple_cycles(d, k), walks = oracle::trace_power(d, k);
      ++checked;
      o.require(static_cast<std::uint64_t>(k) * simple <= walks, "oracle k*simple > hom at " + where(e));
      o.require(simple_cycle_count(d, k) == simple, "simple count differs from oracle at " + where(e));
    }
  }
  SplitMix64 rng(1313);
  for (int i = 0; i < 60; ++i) {
    const int n = 6 + static_cast<int>(rng.below(4));
    const OrientedGraph d = oracle::random_graph(rng.next(), n, 0.7);
    const std::uint64_t simple = oracle::simple_cycles(d, 6);
    ++checked;
    o.require(6 * simple <= oracle::trace_power(d, 6), "oracle 6*simple > hom");
    o.require(simple_cycle_count(d, 6) == simple, "six-cycle count differs from oracle");
  }
  o.detail += "; oracle rechecked " + std::to_string(checked) + " (D,k) pairs";
  return o;
}

Outcome criterion14() {
  Outcome o;
  suite(o, "log-partition");
  for (int n = 4; n <= 128; ++n) {
    const auto sizes = log_partition_sizes(n);
    int total = 0;
    for (int s : sizes) total += s;
    o.require(static_cast<int>(sizes.size()) == static_cast<int>(std::bit_width(static_cast<unsigned>(n))) - 1 && total == n &&
                  sizes.front() - sizes.back() <= 1,
              "partition sizes wrong at n=" + std::to_string(n));
  }
  const int n = 64;
  const auto sizes = log_partition_sizes(n);
  std::vector<int> part;
  for (std::size_t i = 0; i < sizes.size(); ++i) part.insert(part.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i) + 1);
  double mean = 0.0, var = 0.0;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const double p = std::ldexp(1.0, -(part[static_cast<std::size_t>(x)] + part[static_cast<std::size_t>(y)] - 1));
      mean += p;
      var += p * (1.0 - p);
    }
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto m = static_cast<double>(log_partition_digraph(n, 20240604 + i).graph.arc_count());
    o.require(std::abs(m - mean) <= 4.0 * std::sqrt(var), "edge count outside 4 sigma at seed index " + std::to_string(i));
  }
  int checked = 0;
  for (int bn : {12, 16, 20}) {
    for (std::uint64_t i = 0; i < 50; ++i) {
      const OrientedGraph d = log_partition_digraph(bn, 20240604 + i).graph;
      const BiasCertificate c = exact_bias(d, {1, 2});
      const std::uint64_t ab = oracle::arcs_between(d, c.a.mask(), c.b.mask());
      const std::uint64_t ba = oracle::arcs_between(d, c.b.mask(), c.a.mask());
      ++checked;
      o.require(ab == c.e_ab && 2 * ba <= ab, "bias certificate fails oracle recount");
      o.require(c.e_ab <= 3ULL * static_cast<std::uint64_t>(bn), "bias above 3n at n=" + std::to_string(bn));
    }
  }
  o.detail += "; oracle recounted " + std::to_string(checked) + " bias certificates";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"no oriented C4 implies 32 n^2 bias >= e^2 (n <= 5)", criterion1},
      {"2 bias <= e implies 8 n P2 >= e^2 (n <= 5)", criterion2},
      {"unbalanced two-paths <= 8 (bias+1) n (n <= 5)", criterion3},
      {"8 bias <= e implies 8 n good >= e^2 (n <= 5)", criterion4},
      {"oriented C4 formula equals 4-tuple count", criterion5},
      {"hom(directed k-cycle) equals closed-walk trace", criterion6},
      {"dense copy inequality for k <= 4 patterns (n <= 5)", criterion7},
      {"greedy one-way search on circulants", criterion8},
      {"4 ow^2 >= e (n <= 5)", criterion9},
      {"polarity graph order, size and C4-freeness", criterion10},
      {"blow-up bias bound (n <= 4, l in {2,3})", criterion11},
      {"sampler means at committed seeds", criterion12},
      {"k * simple k-cycles <= closed k-walks", criterion13},
      {"log-partition structure and bias <= 3n (observational)", criterion14},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s [%s] (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}

#include "biasgraph/suites.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "biasgraph/bias.hpp"
#include "biasgraph/corpus.hpp"
#include "biasgraph/cycles.hpp"
#include "biasgraph/generators.hpp"
#include "biasgraph/hom.hpp"
#include "biasgraph/oneway.hpp"
#include "biasgraph/rng.hpp"

namespace biasgraph {

using nlohmann::json;

namespace {

const Ratio kHalf{1, 2};

struct Ctx {
  const SuiteInfo& info;
  json params;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool keep = false;
  Report report;

  int num(const char* key) const { return params.at(key).get<int>(); }
  std::uint64_t u64(const char* key) const { return params.at(key).get<std::uint64_t>(); }
  std::vector<int> list(const char* key) const { return params.at(key).get<std::vector<int>>(); }

  // `make` builds the record only when it is kept, so hot loops stay cheap.
  void submit(bool pass, const std::function<Record()>& make) {
    if (pass && !keep) {
      report.add(Record{{}, true, {}}, false);
      return;
    }
    Record rec = make();
    rec.pass = pass;
    report.add(std::move(rec), true);
  }
};

json ineq(const BigInt& lhs, const char* relation, const BigInt& rhs) {
  return {{"lhs", lhs.str()}, {"relation", relation}, {"rhs", rhs.str()}};
}

json instance(const OrientedGraph& d) {
  return {{"n", d.order()}, {"m", d.arc_count()}, {"graph", serialize(d)}};
}

void corpus(const Ctx& c, const std::function<void(int, std::uint64_t, const OrientedGraph&)>& visit) {
  const int max_n = c.num("max_n");
  if (max_n > 6 || (max_n == 6 && !c.params.at("large_corpus").get<bool>())) {
    throw SizeLimitError("exhaustive corpus beyond n = 5 needs large_corpus (n <= 6)");
  }
  for (int n = c.num("min_n"); n <= max_n; ++n) {
    for_each_oriented_graph(n, [&](std::uint64_t code, const OrientedGraph& d) { visit(n, code, d); });
  }
}

json corpus_defaults() { return {{"min_n", 1}, {"max_n", 5}, {"large_corpus", false}}; }

json merged(json base, const json& extra) {
  for (const auto& [k, v] : extra.items()) base[k] = v;
  return base;
}

// Seeded random oriented graph i of a sample: n uniform in [lo, hi], edge
// probability uniform in [0, 1).
OrientedGraph sample_graph(std::uint64_t seed, std::uint64_t i, int lo, int hi) {
  SplitMix64 rng(derived_seed(seed, i));
  const int n = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
  const double p = rng.uniform01();
  return random_oriented_gnp(n, p, rng.next());
}

std::string sample_key(const char* tag, std::uint64_t i) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s/%06llu", tag, static_cast<unsigned long long>(i));
  return buf;
}

PartiallyOrientedGraph directed_cycle(int k) {
  std::vector<Arc> arcs;
  for (int i = 0; i < k; ++i) arcs.push_back({i, (i + 1) % k});
  return PartiallyOrientedGraph::from(k, std::move(arcs), {});
}

// C4-free => 32 n^2 bias >= e^2.
void four_cycle(Ctx& c) {
  auto& ratio = c.report.metrics["bias_n2_over_e2"];
  corpus(c, [&](int n, std::uint64_t code, const OrientedGraph& d) {
    if (oriented_c4_count(d) != 0) {
      ++c.report.skipped;
      return;
    }
    const BiasCertificate cert = exact_bias(d, kHalf);
    const auto m = static_cast<std::uint64_t>(d.arc_count());
    const BigInt lhs = BigInt(32) * n * n * cert.value(), rhs = BigInt(m) * m;
    if (m > 0) ratio.add(static_cast<double>(cert.value()) * n * n / static_cast<double>(m * m));
    c.submit(lhs >= rhs, [&] {
      json data = instance(d);
      data["bias"] = cert.value();
      data["check"] = ineq(lhs, ">=", rhs);
      data["certificate"] = to_json(cert);
      return Record{corpus_key(n, code), {}, data};
    });
  });
}

// 2 bias <= e => 8 n P2 >= e^2.
void two_paths(Ctx& c) {
  corpus(c, [&](int n, std::uint64_t code, const OrientedGraph& d) {
    const BiasCertificate cert = exact_bias(d, kHalf);
    const auto m = static_cast<std::uint64_t>(d.arc_count());
    if (2 * cert.value() > m) {
      ++c.report.skipped;
      return;
    }
    const std::uint64_t p2 = two_path_count(d);
    const BigInt lhs = BigInt(8) * n * p2, rhs = BigInt(m) * m;
    c.submit(lhs >= rhs, [&] {
      json data = instance(d);
      data["bias"] = cert.value();
      data["two_paths"] = p2;
      data["check"] = ineq(lhs, ">=", rhs);
      data["certificate"] = to_json(cert);
      return Record{corpus_key(n, code), {}, data};
    });
  });
}

// unbalanced two-paths <= 8 (bias + 1) n.
void unbalanced_paths(Ctx& c) {
  const int factor = c.num("unbalance_factor");
  corpus(c, [&](int n, std::uint64_t code, const OrientedGraph& d) {
    const BiasCertificate cert = exact_bias(d, kHalf);
    const PathStats st = path_stats(d, factor);
    const BigInt lhs = st.unbalanced_two_paths, rhs = BigInt(8) * (cert.value() + 1) * n;
    c.submit(lhs <= rhs, [&] {
      json data = instance(d);
      data["bias"] = cert.value();
      data["unbalanced_pairs"] = st.unbalanced_pairs;
      data["check"] = ineq(lhs, "<=", rhs);
      data["certificate"] = to_json(cert);
      return Record{corpus_key(n, code), {}, data};
    });
  });
}

// 8 bias <= e => 8 n good >= e^2.
void good_paths(Ctx& c) {
  corpus(c, [&](int n, std::uint64_t code, const OrientedGraph& d) {
    const BiasCertificate cert = exact_bias(d, kHalf);
    const auto m = static_cast<std::uint64_t>(d.arc_count());
    if (8 * cert.value() > m) {
      ++c.report.skipped;
      return;
    }
    const PathStats st = path_stats(d);
    const BigInt lhs = BigInt(8) * n * st.good_two_paths, rhs = BigInt(m) * m;
    c.submit(lhs >= rhs, [&] {
      json data = instance(d);
      data["bias"] = cert.value();
      data["good_two_paths"] = st.good_two_paths;
      data["threshold"] = st.threshold.str();
      data["check"] = ineq(lhs, ">=", rhs);
      data["certificate"] = to_json(cert);
      return Record{corpus_key(n, code), {}, data};
    });
  });
}

// Joint-degree four-cycle formula against the DFS cycle count.
void c4_formula(Ctx& c) {
  auto check = [&](const OrientedGraph& d, const std::string& key) {
    const std::uint64_t formula = oriented_c4_count(d), dfs = simple_cycle_count(d, 4);
    c.submit(formula == dfs, [&] {
      json data = instance(d);
      data["check"] = ineq(formula, "==", dfs);
      return Record{key, {}, data};
    });
  };
  corpus(c, [&](int n, std::uint64_t code, const OrientedGraph& d) { check(d, corpus_key(n, code)); });
  const int count = c.num("random_graphs");
  for (int i = 0; i < count; ++i) {
    check(sample_graph(c.seed, static_cast<std::uint64_t>(i), 1, c.num("random_max_n")),
          sample_key("random", static_cast<std::uint64_t>(i)));
  }
}

// hom(directed k-cycle, D) = trace(M^k).
void hom_trace(Ctx& c) {
  const auto ks = c.list("k");
  const int count = c.num("random_graphs");
  for (int i = 0; i < count; ++i) {
    const OrientedGraph d = sample_graph(c.seed, static_cast<std::uint64_t>(i), 1, c.num("random_max_n"));
    for (int k : ks) {
      const BigInt hom = hom_count(directed_cycle(k), d), trace = hom_cycle_count(d, k);
      c.submit(hom == trace, [&] {
        json data = instance(d);
        data["k"] = k;
        data["check"] = ineq(hom, "==", trace);
        return Record{sample_key("random", static_cast<std::uint64_t>(i)) + "/k" + std::to_string(k), {}, data};
      });
    }
  }
}

// Dense-case inequality for every pattern class on <= max_k vertices, with
// eps = (2 bias + 1) / 2n^2 so that bias < eps n^2.
void dense(Ctx& c) {
  const int max_k = c.num("max_k");
  if (max_k > 4) throw SizeLimitError("dense suite patterns limited to k <= 4");
  std::vector<PartiallyOrientedGraph> patterns;
  std::vector<std::uint64_t> bar_codes;
  for (int k = 1; k <= max_k; ++k) {
    for (auto& h : pattern_classes(k)) {
      bar_codes.push_back(static_cast<std::uint64_t>(k) << 32 | pattern_code(h.underlying()));
      patterns.push_back(std::move(h));
    }
  }
  c.report.params["pattern_classes"] = patterns.size();
  // Slack (lhs - rhs) / n^k, minimised over patterns with at least one arc.
  auto& slack = c.report.metrics["min_slack_over_nk"];
  std::uint64_t premise_implications = 0;
  corpus(c, [&](int n, std::uint64_t code, const OrientedGraph& d) {
    const BiasCertificate cert = exact_bias(d, kHalf);
    const DenseMargin margin = dense_margin(d, kMaxScanOrder);
    const Ratio eps(2 * static_cast<std::int64_t>(cert.value()) + 1, 2LL * n * n);
    std::map<std::uint64_t, BigInt> bar_cache;
    DenseContext ctx;
    ctx.bias = cert.value();
    ctx.margin = margin.value;
    double worst = -1.0;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      const PartiallyOrientedGraph& h = patterns[i];
      auto it = bar_cache.find(bar_codes[i]);
      if (it == bar_cache.end()) it = bar_cache.emplace(bar_codes[i], underlying_hom_count(h, d)).first;
      ctx.hom_bar = it->second;
      const DenseBoundRecord rec = dense_bound_check(h, d, eps, ctx);
      // The bias premise must imply the cut-margin hypothesis.
      const bool implication = !rec.bias_premise_held.value_or(false) || rec.margin_held.value_or(false);
      premise_implications += implication ? 1 : 0;
      const bool corollary_ok = !rec.corollary_conclusion.has_value() || *rec.corollary_conclusion;
      const bool pass = rec.hypothesis_held && implication && rec.pass && corollary_ok;
      if (rec.oriented_edges > 0) {
        const double s = (rec.lhs_scaled - rec.rhs_scaled).convert_to<double>() /
                         (rec.scale.convert_to<double>() * std::pow(static_cast<double>(n), h.order()));
        if (worst < 0.0 || s < worst) worst = s;
      }
      c.submit(pass, [&] {
        json data = instance(d);
        data["pattern"] = serialize(h);
        data["epsilon"] = eps.str();
        data["bias"] = cert.value();
        data["margin"] = margin.value;
        data["hypothesis"] = to_string(rec.hypothesis);
        data["hypothesis_held"] = rec.hypothesis_held;
        data["bias_premise_held"] = rec.bias_premise_held.value_or(false);
        data["hom"] = rec.hom.str();
        data["hom_bar"] = rec.hom_bar.str();
        data["lhs"] = rec.lhs().str();
        data["rhs"] = rec.rhs().str();
        data["corollary_applicable"] = rec.corollary_applicable;
        data["certificate"] = to_json(cert);
        return Record{corpus_key(n, code) + "/H" + std::to_string(pattern_code(h)) + "k" + std::to_string(h.order()),
                      {},
                      data};
      });
    }
    slack.add(worst);
  });
  c.report.params["premise_implications_checked"] = premise_implications;
}

// Greedy one-way algorithm on circulants: e(B,A) = 0, 4 e(A,B) >= n and
// n e2(A_t) <= d^2 (t^2 - 1) along the trace.
void greedy_regular(Ctx& c) {
  for (int n = c.num("min_n"); n <= c.num("max_n"); ++n) {
    for (int deg = 1; deg <= c.num("max_d") && 2 * deg <= n - 1; ++deg) {
      std::vector<int> offsets;
      for (int s = 1; s <= deg; ++s) offsets.push_back(s);
      const OrientedGraph d = circulant_digraph(n, offsets);
      const GreedyTrace tr = greedy_oneway_regular(d);
      bool trace_ok = true;
      int bad_t = 0;
      for (int t = 1; t <= tr.stop_t; ++t) {
        const auto e2 = tr.e2[static_cast<std::size_t>(t - 1)];
        if (static_cast<std::uint64_t>(n) * e2 >
            static_cast<std::uint64_t>(deg) * deg * (static_cast<std::uint64_t>(t) * t - 1)) {
          trace_ok = false;
          bad_t = t;
          break;
        }
      }
      const bool pass = tr.e_ba == 0 && 4 * tr.e_ab >= static_cast<std::uint64_t>(n) && trace_ok;
      c.report.observe("four_eab_over_n", 4.0 * static_cast<double>(tr.e_ab) / n);
      char key[32];
      std::snprintf(key, sizeof key, "n%03d/d%d", n, deg);
      c.submit(pass, [&] {
        json data = {{"n", n}, {"d", deg}, {"t", tr.stop_t}, {"e_ab", tr.e_ab}, {"e_ba", tr.e_ba}};
        data["check"] = ineq(BigInt(4) * tr.e_ab, ">=", n);
        data["order"] = tr.order;
        data["e2"] = tr.e2;
        if (!trace_ok) data["trace_violation_t"] = bad_t;
        return Record{key, {}, data};
      });
    }
  }
}

// 4 ow^2 >= e, and the constructive witness reaches the same bound.
void sqrt_ow(Ctx& c) {
  corpus(c, [&](int n, std::uint64_t code, const OrientedGraph& d) {
    const auto m = static_cast<std::uint64_t>(d.arc_count());
    if (m == 0) {
      ++c.report.skipped;
      return;
    }
    const BiasCertificate ow = exact_ow(d);
    const SqrtBound sb = sqrt_lower_bound(d);
    const bool witness_ok = validate(d, sb.witness) && 4 * sb.value * sb.value >= m && sb.value <= ow.value();
    const BigInt lhs = BigInt(4) * ow.value() * ow.value();
    c.submit(lhs >= m && witness_ok, [&] {
      json data = instance(d);
      data["ow"] = ow.value();
      data["check"] = ineq(lhs, ">=", m);
      data["witness"] = to_json(sb.witness);
      data["certificate"] = to_json(ow);
      return Record{corpus_key(n, code), {}, data};
    });
  });
}

// Polarity graphs: order, size, degree split and C4-freeness.
void polarity(Ctx& c) {
  const int c4_max_q = c.num("c4_max_q");
  for (int q : c.list("q")) {
    const SimpleGraph g = polarity_graph(q);
    const long long n = 1LL * q * q + q + 1, e = 1LL * q * (q + 1) * (q + 1) / 2;
    int deg_q = 0, deg_q1 = 0;
    for (int v = 0; v < g.order(); ++v) {
      deg_q += g.degree(v) == q;
      deg_q1 += g.degree(v) == q + 1;
    }
    bool c4_free = true;
    if (q <= c4_max_q) {
      // Two distinct vertices with two common neighbours span a four-cycle.
      for (int u = 0; u < g.order() && c4_free; ++u) {
        for (int v = u + 1; v < g.order() && c4_free; ++v) {
          int common = 0;
          for (int w : g.neighbors(u)) common += g.adjacent(v, w);
          c4_free = common <= 1;
        }
      }
    }
    const bool pass = g.order() == n && static_cast<long long>(g.edge_count()) == e && deg_q == q + 1 &&
                      deg_q1 == g.order() - (q + 1) && c4_free;
    c.submit(pass, [&] {
      json data = {{"q", q}, {"n", g.order()}, {"expected_n", n}, {"e", g.edge_count()}, {"expected_e", e},
                   {"degree_q", deg_q}, {"degree_q_plus_1", deg_q1}};
      data["c4_checked"] = q <= c4_max_q;
      data["c4_free"] = c4_free;
      return Record{"q" + std::to_string(q), {}, data};
    });
  }
}

// Blow-ups: bias(blow_up(D', l)) < 16 (bias_0.9(D') + 1) l^2.
void blow_up_suite(Ctx& c) {
  const Ratio nine_tenths(9, 10);
  const auto ls = c.list("l");
  for (int n = 1; n <= c.num("max_n"); ++n) {
    if (n > 4) throw SizeLimitError("blow-up suite limited to base graphs with n <= 4");
    for_each_oriented_graph(n, [&](std::uint64_t code, const OrientedGraph& base) {
      const BiasCertificate b9 = exact_bias(base, nine_tenths);
      for (int l : ls) {
        const OrientedGraph blown = blow_up(base, l);
        const BiasCertificate bb = exact_bias(blown, kHalf);
        const BigInt rhs = BigInt(16) * (b9.value() + 1) * l * l;
        const bool roundtrip = contract_cells(blown, l) == base;
        c.submit(BigInt(bb.value()) < rhs && roundtrip, [&] {
          json data = instance(base);
          data["l"] = l;
          data["bias_0.9_base"] = b9.value();
          data["bias_blowup"] = bb.value();
          data["check"] = ineq(bb.value(), "<", rhs);
          data["contraction_recovers_base"] = roundtrip;
          data["certificate"] = to_json(bb);
          return Record{corpus_key(n, code) + "/l" + std::to_string(l), {}, data};
        });
      }
    });
  }
}

// Bernoulli samplers against their expectation bounds (fixed seeds).
void samplers(Ctx& c) {
  const int trials = c.num("trials");
  const std::uint64_t sample_seed = c.u64("sample_seed"), banded_seed = c.u64("banded_seed");
  {
    const OrientedGraph d = circulant_digraph(32, std::vector<int>{1, 2});
    const int dmax = degree_profile(d).max_out;
    const SampleResult r = sampled_oneway(d, 1.0 / (2.0 * dmax), sample_seed, trials);
    const auto m = static_cast<std::uint64_t>(d.arc_count());
    // mean >= 0.9 e / 4D+  <=>  40 D+ total >= 9 e trials
    const BigInt lhs = BigInt(40) * dmax * r.total_e_ab, rhs = BigInt(9) * m * trials;
    const bool best_ok = 4ULL * static_cast<std::uint64_t>(dmax) * r.best.e_ab >= m;
    c.report.observe("sampled_mean", r.mean());
    c.submit(lhs >= rhs && best_ok && validate(d, r.best), [&] {
      json data = {{"graph", "circulant(32,{1,2})"}, {"p", "1/" + std::to_string(2 * dmax)}, {"trials", trials},
                   {"mean", r.mean()}, {"best", r.best.e_ab}, {"target", static_cast<double>(m) / (4.0 * dmax)}};
      data["check"] = ineq(lhs, ">=", rhs);
      data["best_check"] = ineq(BigInt(4) * dmax * r.best.e_ab, ">=", m);
      data["certificate"] = to_json(r.best);
      return Record{"sampled/circulant32", {}, data};
    });
  }
  std::vector<std::pair<std::string, OrientedGraph>> graphs;
  graphs.emplace_back("banded/circulant16", circulant_digraph(16, std::vector<int>{1}));
  graphs.emplace_back("banded/polarity" + std::to_string(c.num("polarity_q")),
                      random_orientation(polarity_graph(c.num("polarity_q")), c.u64("polarity_seed")));
  graphs.emplace_back("banded/gne", random_oriented_gne(c.num("gne_n"), c.num("gne_edges"), c.u64("gne_seed")));
  for (const auto& [key, d] : graphs) {
    const BandedResult r = banded_oneway(d, banded_seed, trials);
    // mean >= 0.9 * 2 |band| / 9  <=>  10 total >= 2 |band| trials
    const BigInt lhs = BigInt(10) * r.samples.total_e_ab, rhs = BigInt(2) * r.band.size * trials;
    c.report.observe("banded_mean_over_target", r.samples.mean() / r.target());
    const bool cert_ok = validate(d, r.samples.best);
    c.submit(lhs >= rhs && cert_ok, [&] {
      json data = {{"n", d.order()}, {"m", d.arc_count()}, {"band_index", r.band.index},
                   {"band_side", r.band.in_side ? "in" : "out"}, {"band_size", r.band.size},
                   {"reversed", r.band.reversed}, {"trials", trials}, {"mean", r.samples.mean()},
                   {"target", r.target()}};
      data["check"] = ineq(lhs, ">=", rhs);
      data["certificate"] = to_json(r.samples.best);
      return Record{key, {}, data};
    });
  }
}

// k * simple_k <= hom_k: each simple k-cycle gives k closed walks.
void six_cycles(Ctx& c) {
  const auto ks = c.list("k");
  auto check = [&](const OrientedGraph& d, const std::string& key) {
    for (int k : ks) {
      const std::uint64_t simple = simple_cycle_count(d, k);
      const BigInt hom = hom_cycle_count(d, k), lhs = BigInt(k) * simple;
      c.submit(lhs <= hom, [&] {
        json data = instance(d);
        data["k"] = k;
        data["simple"] = simple;
        data["check"] = ineq(lhs, "<=", hom);
        return Record{key + "/k" + std::to_string(k), {}, data};
      });
    }
  };
  corpus(c, [&](int n, std::uint64_t code, const OrientedGraph& d) { check(d, corpus_key(n, code)); });
  for (int i = 0; i < c.num("random_graphs"); ++i) {
    check(sample_graph(c.seed, static_cast<std::uint64_t>(i), c.num("random_min_n"), c.num("random_max_n")),
          sample_key("random", static_cast<std::uint64_t>(i)));
  }
}

// Log-partition digraph: part sizes, edge count within 4 sigma of its
// mean, and exact bias <= 3n at desk scale.
void log_partition(Ctx& c) {
  for (int n = 4; n <= c.num("sizes_max_n"); ++n) {
    const auto sizes = log_partition_sizes(n);
    const int l = std::bit_width(static_cast<unsigned>(n)) - 1;
    bool ok = static_cast<int>(sizes.size()) == l;
    int total = 0;
    for (int i = 0; i < static_cast<int>(sizes.size()); ++i) {
      total += sizes[static_cast<std::size_t>(i)];
      const int want = n / l + (i < n % l ? 1 : 0);
      ok = ok && sizes[static_cast<std::size_t>(i)] == want;
    }
    ok = ok && total == n;
    c.submit(ok, [&] {
      return Record{sample_key("sizes", static_cast<std::uint64_t>(n)), {}, {{"n", n}, {"l", l}, {"sizes", sizes}}};
    });
  }
  {
    const int n = c.num("moment_n");
    // Every term is dyadic, so both moments are exact in double precision.
    const auto [mean, var] = log_partition_edge_moments(n);
    for (int s = 0; s < c.num("moment_seeds"); ++s) {
      const LogPartition lp = log_partition_digraph(n, derived_seed(c.seed, static_cast<std::uint64_t>(s)));
      const double m = static_cast<double>(lp.graph.arc_count());
      const double dev = m - mean;
      c.report.observe("edge_z_score", dev / std::sqrt(var));
      c.submit(dev * dev <= 16.0 * var, [&] {
        return Record{sample_key("moments", static_cast<std::uint64_t>(s)), {},
                      {{"n", n}, {"m", lp.graph.arc_count()}, {"mean", mean}, {"variance", var}}};
      });
    }
  }
  const int factor = c.num("bias_factor");
  for (int n : c.list("bias_n")) {
    for (int s = 0; s < c.num("bias_seeds"); ++s) {
      const LogPartition lp = log_partition_digraph(n, derived_seed(c.seed, static_cast<std::uint64_t>(s)));
      ScanOptions opts;
      opts.threads = c.threads;
      const BiasCertificate cert = exact_bias(lp.graph, kHalf, opts);
      c.report.observe("bias_over_n_" + std::to_string(n), static_cast<double>(cert.value()) / n);
      c.submit(cert.value() <= static_cast<std::uint64_t>(factor) * n, [&] {
        json data = instance(lp.graph);
        data["bias"] = cert.value();
        data["check"] = ineq(cert.value(), "<=", BigInt(factor) * n);
        data["certificate"] = to_json(cert);
        return Record{"bias/n" + std::to_string(n) + "/" + sample_key("s", static_cast<std::uint64_t>(s)), {}, data};
      });
    }
  }
}

// Random orientations of a substrate (padded polarity graphs or complete
// graphs): max bias_gamma / n per n, checked against a fitted linear trend
// (each ratio within 1.5x of the least-squares slope).
void random_orientation_suite(Ctx& c) {
  const Ratio gamma = Ratio::parse(c.params.at("gamma").get<std::string>());
  const auto ns = c.list("n");
  const std::string substrate = c.params.at("substrate").get<std::string>();
  if (substrate != "c4free" && substrate != "complete") throw std::invalid_argument("substrate must be c4free or complete");
  std::vector<std::uint64_t> worst;
  for (int n : ns) {
    if (n > kDefaultBiasLimit) throw SizeLimitError("random-orientation suite limited to n <= 20");
    std::uint64_t best = 0;
    for (int s = 0; s < c.num("seeds"); ++s) {
      const std::uint64_t seed = derived_seed(c.seed, static_cast<std::uint64_t>(n) * 1000 + static_cast<std::uint64_t>(s));
      const OrientedGraph d = substrate == "c4free"
                                  ? random_orientation(c4free_graph(n).graph, seed)
                                  : random_oriented_gne(n, static_cast<std::int64_t>(n) * (n - 1) / 2, seed);
      ScanOptions opts;
      opts.threads = c.threads;
      best = std::max(best, exact_bias(d, gamma, opts).value());
    }
    worst.push_back(best);
  }
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    num += static_cast<double>(worst[i]) * ns[i];
    den += static_cast<double>(ns[i]) * ns[i];
  }
  const double slope = den == 0.0 ? 0.0 : num / den;
  c.report.params["fitted_slope"] = slope;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double ratio = static_cast<double>(worst[i]) / ns[i];
    c.report.observe("max_bias_over_n", ratio);
    c.submit(ratio <= 1.5 * slope, [&] {
      return Record{sample_key("n", static_cast<std::uint64_t>(ns[i])), {},
                    {{"n", ns[i]}, {"max_bias", worst[i]}, {"ratio", ratio}, {"bound", 1.5 * slope}}};
    });
  }
}

// D_{m,l}: blow-ups of random orientations of padded polarity graphs have
// no oriented four-cycle; bias n^2 / e^2 is reported.
void dml(Ctx& c) {
  for (const auto& pair : c.params.at("pairs")) {
    const int m = pair.at(0).get<int>(), l = pair.at(1).get<int>();
    const OrientedGraph base = random_orientation(c4free_graph(m).graph, derived_seed(c.seed, static_cast<std::uint64_t>(m)));
    const OrientedGraph d = blow_up(base, l);
    const std::uint64_t c4 = oriented_c4_count(d);
    json data = instance(d);
    data["m"] = m;
    data["l"] = l;
    data["oriented_c4"] = c4;
    if (d.order() <= kDefaultBiasLimit) {
      ScanOptions opts;
      opts.threads = c.threads;
      const BiasCertificate cert = exact_bias(d, kHalf, opts);
      const double e = static_cast<double>(d.arc_count());
      const double ratio = static_cast<double>(cert.value()) * d.order() * d.order() / (e * e);
      c.report.observe("bias_n2_over_e2", ratio);
      data["bias"] = cert.value();
      data["bias_n2_over_e2"] = ratio;
    }
    c.submit(c4 == 0, [&] {
      return Record{"m" + std::to_string(m) + "/l" + std::to_string(l), {}, data};
    });
  }
}

struct SuiteEntry {
  SuiteInfo info;
  void (*run)(Ctx&);
};

const std::vector<SuiteEntry>& entries() {
  static const std::vector<SuiteEntry> table = [] {
    const json sample = {{"random_graphs", 1000}, {"random_max_n", 10}, {"seed", 20240601}};
    std::vector<SuiteEntry> t;
    t.push_back({{"four-cycle", "theorem", "no oriented C4 => 32 n^2 bias(D) >= e(D)^2", corpus_defaults()}, four_cycle});
    t.push_back({{"two-paths", "theorem", "2 bias(D) <= e(D) => 8 n P2(D) >= e(D)^2", corpus_defaults()}, two_paths});
    t.push_back({{"unbalanced-paths", "theorem", "unbalanced two-paths <= 8 (bias(D)+1) n",
                  merged(corpus_defaults(), {{"unbalance_factor", 16}})},
                 unbalanced_paths});
    t.push_back({{"good-paths", "theorem", "8 bias(D) <= e(D) => 8 n good two-paths >= e(D)^2", corpus_defaults()},
                 good_paths});
    t.push_back({{"c4-formula", "theorem", "joint-degree C4 formula equals the DFS count",
                  merged(corpus_defaults(), sample)},
                 c4_formula});
    t.push_back({{"hom-trace", "theorem", "hom(directed k-cycle, D) = trace(M^k)",
                  {{"random_graphs", 200}, {"random_max_n", 12}, {"k", {3, 4, 5, 6}}, {"seed", 20240602}}},
                 hom_trace});
    t.push_back({{"dense", "theorem", "hom(H,D) >= hom(H_bar,D)/3^s - (1-3^-s)(eps/2) n^k",
                  merged(corpus_defaults(), {{"max_k", 4}})},
                 dense});
    t.push_back({{"greedy-regular", "theorem", "greedy: e(B,A)=0, 4e(A,B) >= n, n e2(A_t) <= d^2(t^2-1)",
                  {{"min_n", 8}, {"max_n", 64}, {"max_d", 4}}},
                 greedy_regular});
    t.push_back({{"sqrt-ow", "theorem", "4 ow(D)^2 >= e(D)", corpus_defaults()}, sqrt_ow});
    t.push_back({{"polarity", "theorem", "n = q^2+q+1, e = q(q+1)^2/2, C4-free",
                  {{"q", {2, 3, 5, 7}}, {"c4_max_q", 5}}},
                 polarity});
    t.push_back({{"blow-up", "theorem", "bias(blow_up(D',l)) < 16 (bias_0.9(D')+1) l^2",
                  {{"max_n", 4}, {"l", {2, 3}}}},
                 blow_up_suite});
    t.push_back({{"samplers", "theorem", "sampler means reach 0.9 of their expectation bounds",
                  {{"trials", 512},
                   {"sample_seed", 1},
                   {"banded_seed", 1},
                   {"polarity_q", 5},
                   {"polarity_seed", 1},
                   {"gne_n", 40},
                   {"gne_edges", 200},
                   {"gne_seed", 1}}},
                 samplers});
    t.push_back({{"six-cycles", "theorem", "k * simple k-cycles <= closed k-walks",
                  merged(corpus_defaults(),
                         {{"k", {3, 4, 5, 6}}, {"random_graphs", 200}, {"random_min_n", 6}, {"random_max_n", 12},
                          {"seed", 20240603}})},
                 six_cycles});
    t.push_back({{"log-partition", "observational", "log-partition structure, 4-sigma edge count, bias <= 3n",
                  {{"sizes_max_n", 128},
                   {"moment_n", 64},
                   {"moment_seeds", 200},
                   {"bias_n", {12, 16, 20}},
                   {"bias_seeds", 50},
                   {"bias_factor", 3},
                   {"seed", 20240604}}},
                 log_partition});
    t.push_back({{"random-orientation", "observational", "max bias_gamma/n of random orientations follows a linear trend",
                  {{"n", {7, 10, 13, 16, 19}}, {"seeds", 8}, {"gamma", "9/10"}, {"substrate", "c4free"}, {"seed", 20240605}}},
                 random_orientation_suite});
    t.push_back({{"dml", "observational", "D_{m,l} has no oriented C4; bias n^2/e^2 reported",
                  {{"pairs", {{7, 1}, {7, 2}, {8, 2}, {9, 2}, {10, 2}, {13, 1}, {16, 1}, {19, 1}}},
                   {"seed", 20240606}}},
                 dml});
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

Report verify(const std::string& suite, const SuiteOptions& opts) {
  const auto& table = entries();
  const auto it = std::find_if(table.begin(), table.end(), [&](const SuiteEntry& e) { return e.info.name == suite; });
  if (it == table.end()) throw std::invalid_argument("unknown suite '" + suite + "'");

  json params = it->info.defaults;
  if (!opts.params.is_null()) {
    for (const auto& [k, v] : opts.params.items()) {
      if (!params.contains(k)) throw std::invalid_argument("suite '" + suite + "' has no parameter '" + k + "'");
      params[k] = v;
    }
  }
  if (opts.seed) {
    if (params.contains("seed")) params["seed"] = *opts.seed;
    if (params.contains("sample_seed")) params["sample_seed"] = *opts.seed;
    if (params.contains("banded_seed")) params["banded_seed"] = *opts.seed;
  }
  Ctx c{it->info, params, 0, opts.threads, opts.keep_all, {}};
  if (params.contains("seed")) c.seed = params["seed"].get<std::uint64_t>();
  if (params.contains("sample_seed")) c.seed = params["sample_seed"].get<std::uint64_t>();
  c.report.name = suite;
  c.report.label = it->info.label;
  c.report.seed = c.seed;
  c.report.params = params;
  c.report.input = {{"claim", it->info.claim}};
  it->run(c);
  if (c.report.instances == 0) c.report.status = "no instances";
  if (c.report.failed > 0) c.report.status = "failed";
  return c.report;
}

}  // namespace biasgraph

// biasgraph: command-line front end for the bias / one-way subgraph library.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "biasgraph/bias.hpp"
#include "biasgraph/cycles.hpp"
#include "biasgraph/generators.hpp"
#include "biasgraph/hom.hpp"
#include "biasgraph/kernels.hpp"
#include "biasgraph/oneway.hpp"
#include "biasgraph/probe.hpp"
#include "biasgraph/report.hpp"
#include "biasgraph/suites.hpp"

namespace bg = biasgraph;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Globals {
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string format = "json";
  std::string out;
  int limit_n = -1;
  unsigned threads = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct Loaded {
  bg::OrientedGraph graph;
  json input;
};

Loaded load_graph(const std::string& path) {
  const std::string text = slurp(path);
  return {bg::parse_digraph(text), {{"path", path}, {"digest", bg::input_digest(text)}}};
}

void write_text(const Globals& g, const std::string& text) {
  if (g.out.empty() || g.out == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + g.out);
}

void emit(const Globals& g, const bg::Report& r) {
  std::ostringstream s;
  bg::report_emit(r, bg::parse_report_format(g.format), s);
  write_text(g, s.str());
}

bg::Report command_report(const std::string& name, const Globals& g, json input, json params) {
  bg::Report r;
  r.name = name;
  r.label = "command";
  r.seed = g.seed;
  r.input = std::move(input);
  r.params = std::move(params);
  return r;
}

void add_observation(bg::Report& r, std::string key, json data) {
  r.add({std::move(key), std::nullopt, std::move(data)}, true);
}

int limit_or(const Globals& g, int fallback) { return g.limit_n >= 0 ? g.limit_n : fallback; }

json parse_param_value(const std::string& text) {
  const json j = json::parse(text, nullptr, false);
  return j.is_discarded() ? json(text) : j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bias and one-way subgraph parameters of oriented graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  if (const char* env = std::getenv("BIASGRAPH_THREADS")) g.threads = static_cast<unsigned>(std::max(1, std::atoi(env)));
  app.add_option("--seed", g.seed, "master seed")->each([&](const std::string&) { g.seed_set = true; });
  app.add_option("--format", g.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", g.out, "output path (default stdout)");
  app.add_option("--limit-n", g.limit_n, "exhaustive scan limit on n");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1U, 256U));

  // gen
  auto* gen = app.add_subcommand("gen", "construct a graph family");
  std::string family, base_path, sidecar;
  int q = 0, n = 0, l = 1;
  double p = 0.5;
  std::int64_t edges = 0;
  std::vector<int> offsets;
  gen->add_option("--family", family, "graph family")
      ->required()
      ->check(CLI::IsMember({"polarity", "c4free", "random-orientation", "blowup", "log-partition", "circulant",
                             "gnp-oriented", "gne-oriented"}));
  gen->add_option("--q", q, "prime field size");
  gen->add_option("--n", n, "vertex count");
  gen->add_option("--l", l, "blow-up factor");
  gen->add_option("--p", p, "edge probability");
  gen->add_option("--edges", edges, "edge count");
  gen->add_option("--offsets", offsets, "circulant offsets");
  gen->add_option("--input", base_path, "base digraph for blowup");
  gen->add_option("--sidecar", sidecar, "generator spec JSON path (default: <out>.json)");

  // bias / ow
  auto* bias = app.add_subcommand("bias", "largest gamma-biased subgraph");
  std::string input;
  std::string gamma_text = "1/2";
  int iterations = 200;
  bool heuristic = false;
  bias->add_option("--input", input, "edge-list file or -")->required();
  bias->add_option("--gamma", gamma_text, "ratio p/q in (0,1)");
  bias->add_flag("--heuristic", heuristic, "local search even when exhaustive is possible");
  bias->add_option("--iterations", iterations, "local-search restarts")->check(CLI::PositiveNumber);

  auto* ow = app.add_subcommand("ow", "largest one-way subgraph");
  ow->add_option("--input", input, "edge-list file or -")->required();

  auto* greedy = app.add_subcommand("greedy", "greedy one-way search on a regular digraph");
  std::string trace_csv;
  greedy->add_option("--input", input, "edge-list file or -")->required();
  greedy->add_option("--trace-csv", trace_csv, "write t,chosen_vertex,e2");

  auto* sample = app.add_subcommand("sample-ow", "Bernoulli one-way sampler");
  std::string p_text;
  int trials = 512;
  sample->add_option("--input", input, "edge-list file or -")->required();
  sample->add_option("--p", p_text, "inclusion probability (default 1/2 max out-degree)");
  sample->add_option("--trials", trials, "trials")->check(CLI::PositiveNumber);

  auto* banded = app.add_subcommand("banded-ow", "degree-band one-way sampler");
  banded->add_option("--input", input, "edge-list file or -")->required();
  banded->add_option("--trials", trials, "trials")->check(CLI::PositiveNumber);

  auto* cycles = app.add_subcommand("cycles", "cycle and two-path statistics");
  int k = 4;
  std::string mode = "simple";
  bool stats = false;
  cycles->add_option("--input", input, "edge-list file or -")->required();
  cycles->add_option("--k", k, "cycle length");
  cycles->add_option("--mode", mode, "simple, hom or c4-formula")->check(CLI::IsMember({"simple", "hom", "c4-formula"}));
  cycles->add_flag("--stats", stats, "two-path and balance statistics");

  auto* hom = app.add_subcommand("hom", "homomorphism counts of a pattern");
  std::string pattern_path, hom_mode = "oriented", eps_text;
  bool check_dense = false;
  hom->add_option("--input", input, "host edge-list file or -")->required();
  hom->add_option("--pattern", pattern_path, "pattern file (u v > / u v -)")->required();
  hom->add_option("--mode", hom_mode, "oriented or underlying")->check(CLI::IsMember({"oriented", "underlying"}));
  hom->add_flag("--check-dense", check_dense, "evaluate the dense-case inequality");
  hom->add_option("--epsilon", eps_text, "epsilon p/q for --check-dense");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite, records = "failures";
  std::vector<std::string> params;
  bool list = false;
  verify->add_option("suite", suite, "suite name");
  verify->add_option("--param", params, "key=value override (value parsed as JSON when possible)");
  verify->add_option("--records", records, "failures or all")->check(CLI::IsMember({"failures", "all"}));
  verify->add_flag("--list", list, "list suites and defaults");

  auto* probe = app.add_subcommand("probe", "conjecture frontier search");
  bg::ProbeOptions po;
  probe->add_option("--target", po.target, "ow-c4, six-cycle-3/2 or even-cycle-k")->required();
  probe->add_option("--k", po.k, "half cycle length for even-cycle-k");
  probe->add_option("--min-n", po.min_n, "smallest order");
  probe->add_option("--max-n", po.max_n, "largest order");
  probe->add_option("--instances", po.instances, "seeded candidates");
  probe->add_option("--frontier", po.frontier, "frontier size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      bg::OrientedGraph d;
      bg::GeneratorSpec spec{family, json::object(), g.seed};
      auto simple_to_digraph = [](const bg::SimpleGraph& s) {
        std::vector<bg::Arc> arcs;
        for (const auto& [u, v] : s.edges()) arcs.push_back({u, v});
        return bg::OrientedGraph::from_arcs(s.order(), std::move(arcs));
      };
      if (family == "polarity") {
        d = simple_to_digraph(bg::polarity_graph(q));
        spec.params = {{"q", q}, {"orientation", "low-to-high"}};
      } else if (family == "c4free") {
        const auto c = bg::c4free_graph(n);
        d = simple_to_digraph(c.graph);
        spec.params = {{"n", n}, {"q", c.q}, {"orientation", "low-to-high"}};
      } else if (family == "random-orientation") {
        if (q > 0) {
          d = bg::random_orientation(bg::polarity_graph(q), g.seed);
          spec.params = {{"substrate", "polarity"}, {"q", q}};
        } else {
          d = bg::random_orientation(bg::c4free_graph(n).graph, g.seed);
          spec.params = {{"substrate", "c4free"}, {"n", n}};
        }
      } else if (family == "blowup") {
        if (base_path.empty()) throw UsageError("blowup needs --input");
        const Loaded base = load_graph(base_path);
        d = bg::blow_up(base.graph, l);
        spec.params = {{"l", l}, {"base", base.input}};
      } else if (family == "log-partition") {
        const auto lp = bg::log_partition_digraph(n, g.seed);
        d = lp.graph;
        spec.params = {{"n", n}, {"part_sizes", lp.part_sizes}};
      } else if (family == "circulant") {
        d = bg::circulant_digraph(n, offsets);
        spec.params = {{"n", n}, {"offsets", offsets}};
      } else if (family == "gnp-oriented") {
        d = bg::random_oriented_gnp(n, p, g.seed);
        spec.params = {{"n", n}, {"p", p}};
      } else {
        d = bg::random_oriented_gne(n, edges, g.seed);
        spec.params = {{"n", n}, {"edges", edges}};
      }
      write_text(g, bg::serialize(d));
      std::string side = sidecar;
      if (side.empty() && !g.out.empty() && g.out != "-") side = g.out + ".json";
      if (!side.empty()) {
        std::ofstream f(side);
        f << spec.to_json().dump(2) << '\n';
        if (!f) throw std::runtime_error("cannot write " + side);
      }
      return kExitPass;
    }

    if (bias->parsed()) {
      const Loaded in = load_graph(input);
      const bg::Ratio gamma = bg::Ratio::parse(gamma_text);
      if (!gamma.in_open_unit_interval()) throw UsageError("--gamma must lie strictly between 0 and 1");
      const int limit = limit_or(g, bg::kDefaultBiasLimit);
      const bool exact = !heuristic && in.graph.order() <= limit;
      bg::BiasCertificate cert;
      if (exact) {
        cert = bg::exact_bias(in.graph, gamma, {limit, g.threads});
      } else {
        cert = bg::heuristic_bias(in.graph, gamma, g.seed, iterations);
      }
      bg::Report r = command_report("bias", g, in.input, {{"gamma", gamma.str()}, {"limit_n", limit}});
      r.status = exact ? "exact" : "lower bound";
      add_observation(r, "certificate", bg::to_json(cert));
      emit(g, r);
      return kExitPass;
    }

    if (ow->parsed()) {
      const Loaded in = load_graph(input);
      const int limit = limit_or(g, bg::kDefaultOwLimit);
      bg::Report r = command_report("ow", g, in.input, {{"limit_n", limit}});
      if (in.graph.order() <= limit) {
        r.status = "exact";
        add_observation(r, "certificate", bg::to_json(bg::exact_ow(in.graph, {limit, g.threads})));
      } else {
        r.status = "lower bound";
        bg::BiasCertificate best;
        if (in.graph.arc_count() > 0) {
          best = bg::sqrt_lower_bound(in.graph).witness;
          const int dmax = bg::degree_profile(in.graph).max_out;
          const auto s = bg::sampled_oneway(in.graph, 1.0 / (2.0 * dmax), g.seed, 256);
          if (s.best.e_ab > best.e_ab) best = s.best;
        } else {
          best.kind = bg::CertificateKind::kOneWay;
          best.gamma = bg::Ratio(0, 1);
          best.a = bg::VertexSet(in.graph.order());
          best.b = best.a;
        }
        add_observation(r, "certificate", bg::to_json(best));
      }
      emit(g, r);
      return kExitPass;
    }

    if (greedy->parsed()) {
      const Loaded in = load_graph(input);
      const bg::GreedyTrace tr = bg::greedy_oneway_regular(in.graph);
      bg::Report r = command_report("greedy", g, in.input, {{"degree", tr.degree}});
      const int nn = in.graph.order();
      const bool ok = tr.e_ba == 0 && 4 * tr.e_ab >= static_cast<std::uint64_t>(nn);
      r.add({"result", ok,
             {{"t", tr.stop_t}, {"order", tr.order}, {"e2", tr.e2}, {"A", tr.a.members()}, {"B", tr.b.members()},
              {"e_ab", tr.e_ab}, {"e_ba", tr.e_ba}, {"four_e_ab", 4 * tr.e_ab}, {"n", nn}}},
            true);
      if (!trace_csv.empty()) {
        std::ofstream f(trace_csv);
        f << "t,chosen_vertex,e2\n";
        for (std::size_t t = 0; t < tr.order.size(); ++t) f << t + 1 << ',' << tr.order[t] << ',' << tr.e2[t] << '\n';
        if (!f) throw std::runtime_error("cannot write " + trace_csv);
      }
      emit(g, r);
      return ok ? kExitPass : kExitFail;
    }

    if (sample->parsed()) {
      const Loaded in = load_graph(input);
      if (in.graph.arc_count() == 0) throw UsageError("sample-ow needs at least one arc");
      const int dmax = bg::degree_profile(in.graph).max_out;
      const double prob = p_text.empty() ? 1.0 / (2.0 * dmax) : bg::Ratio::parse(p_text).to_double();
      const auto s = bg::sampled_oneway(in.graph, prob, g.seed, trials);
      bg::Report r = command_report("sample-ow", g, in.input,
                                    {{"p", p_text.empty() ? "1/" + std::to_string(2 * dmax) : p_text}, {"trials", trials}});
      add_observation(r, "result",
                      {{"mean", s.mean()}, {"total_e_ab", s.total_e_ab}, {"best_trial", s.best_trial},
                       {"bound_e_over_4dmax", static_cast<double>(in.graph.arc_count()) / (4.0 * dmax)},
                       {"certificate", bg::to_json(s.best)}});
      emit(g, r);
      return kExitPass;
    }

    if (banded->parsed()) {
      const Loaded in = load_graph(input);
      const auto b = bg::banded_oneway(in.graph, g.seed, trials);
      bg::Report r = command_report("banded-ow", g, in.input, {{"trials", trials}});
      add_observation(r, "result",
                      {{"band_index", b.band.index}, {"band_side", b.band.in_side ? "in" : "out"},
                       {"band_size", b.band.size}, {"reversed", b.band.reversed}, {"p", b.band.p},
                       {"mean", b.samples.mean()}, {"target", b.target()},
                       {"certificate", bg::to_json(b.samples.best)}});
      emit(g, r);
      return kExitPass;
    }

    if (cycles->parsed()) {
      const Loaded in = load_graph(input);
      bg::Report r = command_report("cycles", g, in.input, {{"k", k}, {"mode", mode}});
      json data = {{"two_paths", bg::two_path_count(in.graph)}};
      if (mode == "simple") data["simple"] = bg::simple_cycle_count(in.graph, k);
      if (mode == "hom") data["hom"] = bg::hom_cycle_count(in.graph, k).str();
      if (mode == "c4-formula") data["c4"] = bg::oriented_c4_count(in.graph);
      add_observation(r, "counts", data);
      if (stats) {
        const bg::PathStats st = bg::path_stats(in.graph);
        add_observation(r, "stats",
                        {{"two_path_total", st.two_path_total}, {"good_two_paths", st.good_two_paths},
                         {"unbalanced_pairs", st.unbalanced_pairs},
                         {"unbalanced_two_paths", st.unbalanced_two_paths}, {"threshold", st.threshold.str()},
                         {"e_x", st.e_x}});
      }
      emit(g, r);
      return kExitPass;
    }

    if (hom->parsed()) {
      const Loaded in = load_graph(input);
      const std::string pat_text = slurp(pattern_path);
      const bg::PartiallyOrientedGraph h = bg::parse_pattern(pat_text);
      bg::Report r = command_report("hom", g, in.input, {{"mode", hom_mode}, {"pattern", bg::serialize(h)}});
      const bg::BigInt count = hom_mode == "oriented" ? bg::hom_count(h, in.graph) : bg::underlying_hom_count(h, in.graph);
      add_observation(r, "count", {{"hom", count.str()}});
      int rc = kExitPass;
      if (check_dense) {
        if (eps_text.empty()) throw UsageError("--check-dense needs --epsilon");
        const bg::Ratio eps = bg::Ratio::parse(eps_text);
        bg::DenseContext ctx;
        if (in.graph.order() <= bg::kDefaultBiasLimit) ctx.bias = bg::exact_bias(in.graph, bg::Ratio(1, 2)).value();
        const bg::DenseBoundRecord rec = bg::dense_bound_check(h, in.graph, eps, ctx);
        const bool pass = !rec.hypothesis_held || rec.pass;
        r.add({"dense",
               pass,
               {{"epsilon", eps.str()}, {"hypothesis", bg::to_string(rec.hypothesis)},
                {"hypothesis_held", rec.hypothesis_held}, {"hom", rec.hom.str()}, {"hom_bar", rec.hom_bar.str()},
                {"lhs", rec.lhs().str()}, {"rhs", rec.rhs().str()}, {"inequality_holds", rec.pass},
                {"corollary_applicable", rec.corollary_applicable}, {"corollary_premise", rec.corollary_premise}}},
              true);
        rc = pass ? kExitPass : kExitFail;
      }
      emit(g, r);
      return rc;
    }

    if (verify->parsed()) {
      if (list || suite.empty()) {
        json out = json::array();
        for (const auto& s : bg::suite_catalog()) {
          out.push_back({{"name", s.name}, {"label", s.label}, {"claim", s.claim}, {"defaults", s.defaults}});
        }
        write_text(g, out.dump(2) + "\n");
        return suite.empty() && !list ? kExitUsage : kExitPass;
      }
      bg::SuiteOptions so;
      for (const std::string& kv : params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("--param expects key=value, got '" + kv + "'");
        so.params[kv.substr(0, eq)] = parse_param_value(kv.substr(eq + 1));
      }
      if (g.seed_set) so.seed = g.seed;
      so.threads = g.threads;
      so.keep_all = records == "all";
      const bg::Report r = bg::verify(suite, so);
      emit(g, r);
      if (!r.ok()) {
        std::cerr << suite << ": " << r.failed << " failure(s)\n";
        for (const auto& rec : r.records) {
          if (rec.pass.has_value() && !*rec.pass) std::cerr << "FAIL " << rec.key << ' ' << rec.data.dump() << '\n';
        }
        return kExitFail;
      }
      return kExitPass;
    }

    if (probe->parsed()) {
      po.seed = g.seed;
      po.threads = g.threads;
      emit(g, bg::conjecture_probe(po));
      return kExitPass;
    }
  } catch (const bg::GraphError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const bg::SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "invalid parameter: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

#include "biasgraph/probe.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "biasgraph/bias.hpp"
#include "biasgraph/corpus.hpp"
#include "biasgraph/cycles.hpp"
#include "biasgraph/generators.hpp"
#include "biasgraph/rng.hpp"

namespace biasgraph {

using nlohmann::json;

namespace {

struct Entry {
  BigInt num;
  BigInt den;
  std::string key;
  json data;
};

// Keeps the `size` smallest num/den values, ties by key.
class Frontier {
 public:
  explicit Frontier(int size) : size_(static_cast<std::size_t>(std::max(size, 0))) {}

  void offer(Entry e) {
    if (size_ == 0) return;
    if (entries_.size() == size_ && !less(e, entries_.back())) return;
    entries_.push_back(std::move(e));
    std::sort(entries_.begin(), entries_.end(), less);
    if (entries_.size() > size_) entries_.pop_back();
  }

  const std::vector<Entry>& entries() const noexcept { return entries_; }

 private:
  static bool less(const Entry& a, const Entry& b) {
    const BigInt l = a.num * b.den, r = b.num * a.den;
    return l != r ? l < r : a.key < b.key;
  }

  std::size_t size_;
  std::vector<Entry> entries_;
};

BigInt ipow(const BigInt& b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void probe_ow_c4(const ProbeOptions& o, Report& rep, Frontier& front) {
  if (o.max_n > 6) throw SizeLimitError("ow-c4 probe is exhaustive and limited to n <= 6");
  for (int n = std::max(o.min_n, 1); n <= o.max_n; ++n) {
    for_each_oriented_graph(n, [&](std::uint64_t code, const OrientedGraph& d) {
      if (d.arc_count() == 0 || oriented_c4_count(d) != 0) return;
      ++rep.instances;
      const BiasCertificate ow = exact_ow(d);
      const auto m = static_cast<std::uint64_t>(d.arc_count());
      const double metric = static_cast<double>(ow.value()) * n * n / static_cast<double>(m * m);
      rep.observe("ow_n2_over_e2", metric);
      front.offer({BigInt(ow.value()) * n * n, BigInt(m) * m, corpus_key(n, code),
                   {{"n", n}, {"m", m}, {"ow", ow.value()}, {"metric", metric}, {"graph", serialize(d)},
                    {"certificate", to_json(ow)}, {"c4_count", 0}}});
    });
  }
}

OrientedGraph candidate(const ProbeOptions& o, std::uint64_t i, std::string& family) {
  SplitMix64 rng(derived_seed(o.seed, i));
  const int span = o.max_n - o.min_n + 1;
  const int n = o.min_n + static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));
  switch (rng.below(3)) {
    case 0: {
      family = "gnp";
      return random_oriented_gnp(n, rng.uniform01(), rng.next());
    }
    case 1: {
      family = "c4free";
      return random_orientation(c4free_graph(std::max(n, 2)).graph, rng.next());
    }
    default: {
      // Blow-up of a small random base whose blown order stays within n.
      const int l = 1 + static_cast<int>(rng.below(3));
      const int base_n = std::max(1, n / l);
      family = "blowup-l" + std::to_string(l);
      const OrientedGraph base = random_oriented_gnp(base_n, rng.uniform01(), rng.next());
      return blow_up(base, l);
    }
  }
}

void probe_cycles(const ProbeOptions& o, int k, Report& rep, Frontier& front) {
  if (k < 2 || k > 4) throw std::invalid_argument("even-cycle probe needs k in 2..4 (cycle length <= 8)");
  if (o.max_n > kDefaultBiasLimit) throw SizeLimitError("cycle probes need exact bias, limited to n <= 20");
  if (o.min_n < 1 || o.min_n > o.max_n) {
    rep.params["empty_range"] = true;
    return;
  }
  ScanOptions scan;
  scan.threads = o.threads;
  for (int i = 0; i < o.instances; ++i) {
    std::string family;
    const OrientedGraph d = candidate(o, static_cast<std::uint64_t>(i), family);
    if (d.order() < o.min_n || d.arc_count() == 0) continue;
    if (simple_cycle_count(d, 2 * k) != 0) continue;
    ++rep.instances;
    const BiasCertificate cert = exact_bias(d, Ratio(1, 2), scan);
    const BigInt m = d.arc_count();
    const BigInt num = ipow(cert.value(), k - 1) * d.order() * d.order(), den = ipow(m, k);
    const double metric = num.convert_to<double>() / den.convert_to<double>();
    rep.observe("bias_power_metric", metric);
    char key[32];
    std::snprintf(key, sizeof key, "i%06d", i);
    front.offer({num, den, key,
                 {{"family", family}, {"n", d.order()}, {"m", d.arc_count()}, {"bias", cert.value()},
                  {"metric", metric}, {"graph", serialize(d)}, {"certificate", to_json(cert)},
                  {"cycle_length", 2 * k}, {"cycle_count", 0}}});
  }
}

}  // namespace

Report conjecture_probe(const ProbeOptions& o) {
  Report rep;
  rep.name = "probe/" + o.target;
  rep.label = "probe";
  rep.seed = o.seed;
  rep.params = {{"min_n", o.min_n}, {"max_n", o.max_n}, {"frontier", o.frontier}};
  Frontier front(o.frontier);
  if (o.target == "ow-c4") {
    rep.params["metric"] = "ow n^2 / e^2";
    if (o.min_n <= o.max_n) probe_ow_c4(o, rep, front);
  } else if (o.target == "six-cycle-3/2" || o.target == "even-cycle-k") {
    const int k = o.target == "six-cycle-3/2" ? 3 : o.k;
    rep.params["k"] = k;
    rep.params["instances"] = o.instances;
    rep.params["metric"] = "bias^(k-1) n^2 / e^k";
    probe_cycles(o, k, rep, front);
  } else {
    throw std::invalid_argument("unknown probe target '" + o.target + "' (ow-c4, six-cycle-3/2, even-cycle-k)");
  }
  int rank = 0;
  for (const Entry& e : front.entries()) {
    json data = e.data;
    data["metric_exact"] = e.num.str() + "/" + e.den.str();
    char key[24];
    std::snprintf(key, sizeof key, "rank%03d", rank++);
    data["instance"] = e.key;
    rep.records.push_back({key, std::nullopt, data});
  }
  rep.status = rep.instances == 0 ? "no instances" : "frontier";
  return rep;
}

}  // namespace biasgraph

#include "biasgraph/bias.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <vector>

#include "biasgraph/kernels.hpp"
#include "biasgraph/rng.hpp"
#include "biasgraph/subset_scan.hpp"

namespace biasgraph {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

bool feasible(const Ratio& gamma, std::uint64_t e_ab, std::uint64_t e_ba) {
  return static_cast<__int128>(gamma.den) * e_ba <= static_cast<__int128>(gamma.num) * e_ab;
}

void require_gamma(const Ratio& gamma) {
  if (!gamma.in_open_unit_interval()) throw std::invalid_argument("gamma must lie strictly between 0 and 1");
}

int resolve_limit(const ScanOptions& opts, int fallback) {
  const int limit = opts.limit < 0 ? fallback : opts.limit;
  return std::min(limit, kMaxScanOrder);
}

// Per-vertex contributions of A: gain[v] = e(A,{v}), back[v] = e({v},A).
struct Contributions {
  std::vector<std::uint32_t> gain;
  std::vector<std::uint32_t> back;
};

Contributions contributions(const OrientedGraph& d, const VertexSet& a) {
  const auto n = static_cast<std::size_t>(d.order());
  Contributions c{std::vector<std::uint32_t>(n), std::vector<std::uint32_t>(n)};
  const auto& k = kernels::active();
  k.masked_popcounts(d.in_rows().data(), n, d.words_per_row(), a.words().data(), c.gain.data());
  k.masked_popcounts(d.out_rows().data(), n, d.words_per_row(), a.words().data(), c.back.data());
  return c;
}

struct Item {
  int vertex;
  std::int64_t gain;
  std::int64_t cost;
};

// Splits vertices into those every optimum contains (positive gain,
// non-positive cost) and genuine knapsack items (positive gain and cost).
// Zero-gain vertices never help and are left out.
struct Split {
  std::vector<int> forced;
  std::vector<Item> items;
  std::int64_t forced_gain = 0;
  std::int64_t budget = 0;  // -(sum of forced costs)
};

Split split_vertices(const Contributions& c, const Ratio& gamma) {
  Split s;
  for (std::size_t v = 0; v < c.gain.size(); ++v) {
    const std::int64_t g = c.gain[v];
    if (g == 0) continue;
    const std::int64_t w = gamma.den * static_cast<std::int64_t>(c.back[v]) - gamma.num * g;
    if (w <= 0) {
      s.forced.push_back(static_cast<int>(v));
      s.forced_gain += g;
      s.budget -= w;
    } else {
      s.items.push_back({static_cast<int>(v), g, w});
    }
  }
  return s;
}

// Canonical optimum: max gain, then fewest items, then smallest bit
// pattern. table[i][g][c] is the least cost over subsets of the first i
// items with gain g and c members; reconstruction walks items from the
// highest vertex down, excluding whenever the prefix can still afford it.
std::vector<int> choose_items_canonical(const std::vector<Item>& items, std::int64_t budget) {
  const std::size_t count = items.size();
  std::int64_t total_gain = 0;
  for (const Item& it : items) total_gain += it.gain;
  const auto width_g = static_cast<std::size_t>(total_gain) + 1;
  const std::size_t width_c = count + 1;
  auto at = [&](std::size_t i, std::size_t g, std::size_t c) { return (i * width_g + g) * width_c + c; };
  std::vector<std::int64_t> table((count + 1) * width_g * width_c, kInf);
  table[at(0, 0, 0)] = 0;
  for (std::size_t i = 1; i <= count; ++i) {
    const auto gi = static_cast<std::size_t>(items[i - 1].gain);
    const std::int64_t wi = items[i - 1].cost;
    for (std::size_t g = 0; g < width_g; ++g) {
      for (std::size_t c = 0; c < width_c; ++c) {
        std::int64_t best = table[at(i - 1, g, c)];
        if (g >= gi && c >= 1 && table[at(i - 1, g - gi, c - 1)] < kInf) {
          best = std::min(best, table[at(i - 1, g - gi, c - 1)] + wi);
        }
        table[at(i, g, c)] = best;
      }
    }
  }
  std::size_t tg = 0, tc = 0;
  bool found = false;
  for (std::size_t g = width_g; g-- > 0 && !found;) {
    for (std::size_t c = 0; c < width_c; ++c) {
      if (table[at(count, g, c)] <= budget) {
        tg = g;
        tc = c;
        found = true;
        break;
      }
    }
  }
  std::vector<int> chosen;
  std::int64_t remaining = budget;
  for (std::size_t i = count; i >= 1; --i) {
    if (table[at(i - 1, tg, tc)] <= remaining) continue;
    chosen.push_back(items[i - 1].vertex);
    tg -= static_cast<std::size_t>(items[i - 1].gain);
    tc -= 1;
    remaining -= items[i - 1].cost;
  }
  return chosen;
}

// Max-gain selection without the cardinality tie-break; table[i][g] is the
// least cost over the first i items reaching gain g.
std::vector<int> choose_items_fast(const std::vector<Item>& items, std::int64_t budget) {
  const std::size_t count = items.size();
  std::int64_t total_gain = 0;
  for (const Item& it : items) total_gain += it.gain;
  const auto width = static_cast<std::size_t>(total_gain) + 1;
  std::vector<std::int64_t> table((count + 1) * width, kInf);
  table[0] = 0;
  for (std::size_t i = 1; i <= count; ++i) {
    const auto gi = static_cast<std::size_t>(items[i - 1].gain);
    for (std::size_t g = 0; g < width; ++g) {
      std::int64_t best = table[(i - 1) * width + g];
      if (g >= gi && table[(i - 1) * width + g - gi] < kInf) {
        best = std::min(best, table[(i - 1) * width + g - gi] + items[i - 1].cost);
      }
      table[i * width + g] = best;
    }
  }
  std::size_t tg = width - 1;
  while (table[count * width + tg] > budget) --tg;
  std::vector<int> chosen;
  std::int64_t remaining = budget;
  for (std::size_t i = count; i >= 1; --i) {
    if (table[(i - 1) * width + tg] <= remaining) continue;
    chosen.push_back(items[i - 1].vertex);
    tg -= static_cast<std::size_t>(items[i - 1].gain);
    remaining -= items[i - 1].cost;
  }
  return chosen;
}

BestB solve_b(const OrientedGraph& d, const VertexSet& a, const Ratio& gamma, bool canonical) {
  const Contributions c = contributions(d, a);
  const Split s = split_vertices(c, gamma);
  VertexSet b(d.order());
  BestB out;
  for (int v : s.forced) b.insert(v);
  const auto extra = canonical ? choose_items_canonical(s.items, s.budget) : choose_items_fast(s.items, s.budget);
  for (int v : extra) b.insert(v);
  for (int v : b.members()) {
    out.e_ab += c.gain[static_cast<std::size_t>(v)];
    out.e_ba += c.back[static_cast<std::size_t>(v)];
  }
  out.b = std::move(b);
  return out;
}

// Value-only knapsack for the scan: largest reachable gain within budget.
std::int64_t knapsack_value(const scan::Lanes& lanes, int n, const Ratio& gamma) {
  std::int64_t forced_gain = 0, budget = 0, item_gain_total = 0;
  std::array<std::int64_t, kernels::kLanes> gains{}, costs{};
  std::size_t count = 0;
  for (int v = 0; v < n; ++v) {
    const std::int64_t g = lanes.a.v[static_cast<std::size_t>(v)];
    if (g == 0) continue;
    const std::int64_t w = gamma.den * lanes.o.v[static_cast<std::size_t>(v)] - gamma.num * g;
    if (w <= 0) {
      forced_gain += g;
      budget -= w;
    } else {
      gains[count] = g;
      costs[count] = w;
      item_gain_total += g;
      ++count;
    }
  }
  // Gains per vertex are at most 31 and there are at most 32 vertices.
  std::array<std::int64_t, 1024> least_cost;
  const auto width = static_cast<std::size_t>(item_gain_total) + 1;
  std::fill_n(least_cost.begin(), width, kInf);
  least_cost[0] = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto gi = static_cast<std::size_t>(gains[i]);
    for (std::size_t g = width - 1; g >= gi; --g) {
      if (least_cost[g - gi] < kInf) least_cost[g] = std::min(least_cost[g], least_cost[g - gi] + costs[i]);
      if (g == gi) break;
    }
  }
  std::size_t g = width - 1;
  while (least_cost[g] > budget) --g;
  return forced_gain + static_cast<std::int64_t>(g);
}

BiasCertificate checked(const OrientedGraph& d, BiasCertificate cert) {
  if (!validate(d, cert)) throw std::logic_error("internal error: certificate failed validation");
  return cert;
}

}  // namespace

bool validate(const OrientedGraph& d, const BiasCertificate& cert) {
  if (cert.a.universe() != d.order() || cert.b.universe() != d.order()) return false;
  const auto e_ab = arc_count_between(d, cert.a, cert.b);
  const auto e_ba = arc_count_between(d, cert.b, cert.a);
  if (e_ab != cert.e_ab || e_ba != cert.e_ba) return false;
  if (cert.kind == CertificateKind::kOneWay) return e_ba == 0;
  return cert.gamma.in_open_unit_interval() && feasible(cert.gamma, e_ab, e_ba);
}

nlohmann::json to_json(const BiasCertificate& cert) {
  return nlohmann::json{
      {"kind", cert.kind == CertificateKind::kBias ? "bias" : "oneway"},
      {"gamma", cert.gamma.str()},
      {"value", cert.value()},
      {"A", cert.a.members()},
      {"B", cert.b.members()},
      {"e_ab", cert.e_ab},
      {"e_ba", cert.e_ba},
      {"exact", cert.exact},
  };
}

BiasCertificate certificate_from_json(const nlohmann::json& j, int n) {
  BiasCertificate cert;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "bias" && kind != "oneway") throw std::invalid_argument("unknown certificate kind " + kind);
  cert.kind = kind == "bias" ? CertificateKind::kBias : CertificateKind::kOneWay;
  cert.gamma = Ratio::parse(j.at("gamma").get<std::string>());
  cert.a = VertexSet::from_members(n, j.at("A").get<std::vector<int>>());
  cert.b = VertexSet::from_members(n, j.at("B").get<std::vector<int>>());
  cert.e_ab = j.at("e_ab").get<std::uint64_t>();
  cert.e_ba = j.at("e_ba").get<std::uint64_t>();
  cert.exact = j.at("exact").get<bool>();
  if (j.at("value").get<std::uint64_t>() != cert.e_ab) throw std::invalid_argument("certificate value differs from e_ab");
  return cert;
}

BiasCertificate exact_ow(const OrientedGraph& d, ScanOptions opts) {
  const int limit = resolve_limit(opts, kDefaultOwLimit);
  if (d.order() > limit) {
    throw SizeLimitError("exact ow needs n <= " + std::to_string(limit) + ", got " + std::to_string(d.order()));
  }
  const scan::Best best = scan::gray_scan(
      d, opts.threads,
      [](std::uint64_t, const scan::Lanes&, const kernels::LaneSums& sums, const scan::Best&) {
        return static_cast<std::int64_t>(sums.sum_a_where_o_zero);
      });
  BiasCertificate cert;
  cert.kind = CertificateKind::kOneWay;
  cert.gamma = Ratio(0, 1);
  cert.a = VertexSet::from_mask(d.order(), best.mask);
  cert.b = b_set(d, cert.a);
  cert.e_ab = arc_count_between(d, cert.a, cert.b);
  cert.e_ba = 0;
  cert.exact = true;
  if (static_cast<std::int64_t>(cert.e_ab) != best.value) throw std::logic_error("internal error: ow scan mismatch");
  return checked(d, std::move(cert));
}

BestB best_b_for_a(const OrientedGraph& d, const VertexSet& a, Ratio gamma) {
  require_gamma(gamma);
  return solve_b(d, a, gamma, true);
}

BiasCertificate exact_bias(const OrientedGraph& d, Ratio gamma, ScanOptions opts) {
  require_gamma(gamma);
  const int limit = resolve_limit(opts, kDefaultBiasLimit);
  if (d.order() > limit) {
    throw SizeLimitError("exact bias needs n <= " + std::to_string(limit) + ", got " + std::to_string(d.order()));
  }
  const int n = d.order();
  const scan::Best best = scan::gray_scan(
      d, opts.threads,
      [&](std::uint64_t mask, const scan::Lanes& lanes, const kernels::LaneSums& sums,
          const scan::Best& running) -> std::int64_t {
        const auto upper = static_cast<std::int64_t>(sums.sum_a);
        if (!running.improved_by(upper, mask)) return -1;
        // Taking every vertex with positive gain is optimal when affordable.
        if (static_cast<__int128>(gamma.den) * sums.sum_o_where_a_nonzero <=
            static_cast<__int128>(gamma.num) * sums.sum_a) {
          return upper;
        }
        return knapsack_value(lanes, n, gamma);
      });
  BiasCertificate cert;
  cert.kind = CertificateKind::kBias;
  cert.gamma = gamma;
  cert.a = VertexSet::from_mask(n, best.mask);
  BestB b = best_b_for_a(d, cert.a, gamma);
  if (static_cast<std::int64_t>(b.e_ab) != best.value) throw std::logic_error("internal error: bias scan mismatch");
  cert.b = std::move(b.b);
  cert.e_ab = b.e_ab;
  cert.e_ba = b.e_ba;
  cert.exact = true;
  return checked(d, std::move(cert));
}

namespace {

// Local search state with per-vertex neighbourhood counts into A and B so
// that every single-vertex toggle is priced in O(1).
class SearchState {
 public:
  SearchState(const OrientedGraph& d, Ratio gamma)
      : d_(d), gamma_(gamma), n_(static_cast<std::size_t>(d.order())),
        in_a_(n_, 0), in_b_(n_, 0), out_to_a_(n_, 0), in_from_a_(n_, 0), out_to_b_(n_, 0), in_from_b_(n_, 0) {}

  void toggle_a(int v) {
    const auto uv = static_cast<std::size_t>(v);
    const int sign = in_a_[uv] ? -1 : 1;
    e_ab_ += sign * out_to_b_[uv];
    e_ba_ += sign * in_from_b_[uv];
    in_a_[uv] ^= 1;
    for (int w : d_.in_neighbors(v)) out_to_a_[static_cast<std::size_t>(w)] += sign;
    for (int w : d_.out_neighbors(v)) in_from_a_[static_cast<std::size_t>(w)] += sign;
  }

  void toggle_b(int v) {
    const auto uv = static_cast<std::size_t>(v);
    const int sign = in_b_[uv] ? -1 : 1;
    e_ab_ += sign * in_from_a_[uv];
    e_ba_ += sign * out_to_a_[uv];
    in_b_[uv] ^= 1;
    for (int w : d_.in_neighbors(v)) out_to_b_[static_cast<std::size_t>(w)] += sign;
    for (int w : d_.out_neighbors(v)) in_from_b_[static_cast<std::size_t>(w)] += sign;
  }

  // (e_ab, e_ba) after toggling v in A or in B, without applying it.
  std::pair<std::int64_t, std::int64_t> preview_a(int v) const {
    const auto uv = static_cast<std::size_t>(v);
    const int sign = in_a_[uv] ? -1 : 1;
    return {e_ab_ + sign * out_to_b_[uv], e_ba_ + sign * in_from_b_[uv]};
  }
  std::pair<std::int64_t, std::int64_t> preview_b(int v) const {
    const auto uv = static_cast<std::size_t>(v);
    const int sign = in_b_[uv] ? -1 : 1;
    return {e_ab_ + sign * in_from_a_[uv], e_ba_ + sign * out_to_a_[uv]};
  }

  bool ok(std::int64_t e_ab, std::int64_t e_ba) const {
    return static_cast<__int128>(gamma_.den) * e_ba <= static_cast<__int128>(gamma_.num) * e_ab;
  }

  std::int64_t e_ab() const { return e_ab_; }
  std::int64_t e_ba() const { return e_ba_; }
  bool in_a(int v) const { return in_a_[static_cast<std::size_t>(v)] != 0; }
  bool in_b(int v) const { return in_b_[static_cast<std::size_t>(v)] != 0; }

  VertexSet set_a() const { return collect(in_a_); }
  VertexSet set_b() const { return collect(in_b_); }

 private:
  VertexSet collect(const std::vector<std::uint8_t>& flags) const {
    VertexSet s(static_cast<int>(n_));
    for (std::size_t v = 0; v < n_; ++v) {
      if (flags[v]) s.insert(static_cast<int>(v));
    }
    return s;
  }

  const OrientedGraph& d_;
  Ratio gamma_;
  std::size_t n_;
  std::vector<std::uint8_t> in_a_, in_b_;
  std::vector<std::int64_t> out_to_a_, in_from_a_, out_to_b_, in_from_b_;
  std::int64_t e_ab_ = 0, e_ba_ = 0;
};

}  // namespace

BiasCertificate heuristic_bias(const OrientedGraph& d, Ratio gamma, std::uint64_t seed, int iterations) {
  require_gamma(gamma);
  if (iterations < 1) throw std::invalid_argument("iterations must be at least 1");
  const int n = d.order();

  BiasCertificate best;
  best.kind = CertificateKind::kBias;
  best.gamma = gamma;
  best.a = VertexSet(n);
  best.b = VertexSet(n);
  best.exact = false;

  for (int restart = 0; restart < iterations; ++restart) {
    SplitMix64 rng(derived_seed(seed, static_cast<std::uint64_t>(restart)));
    SearchState st(d, gamma);
    for (int v = 0; v < n; ++v) {
      if (rng.coin()) st.toggle_a(v);
    }
    auto reoptimise_b = [&] {
      const BestB b = solve_b(d, st.set_a(), gamma, false);
      if (static_cast<std::int64_t>(b.e_ab) <= st.e_ab() && st.ok(st.e_ab(), st.e_ba())) return false;
      for (int v = 0; v < n; ++v) {
        if (st.in_b(v) != b.b.contains(v)) st.toggle_b(v);
      }
      return true;
    };
    reoptimise_b();
    for (;;) {
      // Best strictly improving feasible toggle; A-moves before B-moves,
      // lower vertex first on ties.
      std::int64_t target = st.e_ab();
      int move = -1;
      bool move_in_a = false;
      for (int v = 0; v < n; ++v) {
        const auto [ab, ba] = st.preview_a(v);
        if (ab > target && st.ok(ab, ba)) {
          target = ab;
          move = v;
          move_in_a = true;
        }
      }
      for (int v = 0; v < n; ++v) {
        const auto [ab, ba] = st.preview_b(v);
        if (ab > target && st.ok(ab, ba)) {
          target = ab;
          move = v;
          move_in_a = false;
        }
      }
      if (move >= 0) {
        if (move_in_a) {
          st.toggle_a(move);
        } else {
          st.toggle_b(move);
        }
        continue;
      }
      if (!reoptimise_b()) break;
    }
    if (st.ok(st.e_ab(), st.e_ba()) && static_cast<std::uint64_t>(st.e_ab()) > best.e_ab) {
      best.a = st.set_a();
      best.b = st.set_b();
      best.e_ab = static_cast<std::uint64_t>(st.e_ab());
      best.e_ba = static_cast<std::uint64_t>(st.e_ba());
    }
  }
  return checked(d, std::move(best));
}

}  // namespace biasgraph

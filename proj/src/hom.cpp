#include "biasgraph/hom.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "biasgraph/bias.hpp"
#include "biasgraph/subset_scan.hpp"

namespace biasgraph {

namespace {

enum class Link : std::uint8_t { kOut, kIn, kEither };

struct Constraint {
  int earlier = 0;  // position in the assignment order
  Link link = Link::kOut;
};

// Counts maps by backtracking over a connectivity-first vertex order; each
// level intersects the candidate rows implied by already-placed neighbours.
class HomCounter {
 public:
  HomCounter(const PartiallyOrientedGraph& h, const OrientedGraph& d, bool injective)
      : d_(d), injective_(injective), k_(h.order()), words_(d.words_per_row()) {
    const auto uk = static_cast<std::size_t>(k_);
    std::vector<std::vector<std::pair<int, Link>>> adj(uk);
    for (const Arc& a : h.arcs()) {
      adj[static_cast<std::size_t>(a.tail)].emplace_back(a.head, Link::kOut);
      adj[static_cast<std::size_t>(a.head)].emplace_back(a.tail, Link::kIn);
    }
    for (const auto& [u, v] : h.edges()) {
      adj[static_cast<std::size_t>(u)].emplace_back(v, Link::kEither);
      adj[static_cast<std::size_t>(v)].emplace_back(u, Link::kEither);
    }
    // Order: repeatedly take the unplaced vertex with most placed neighbours
    // (then highest degree, then lowest index).
    std::vector<int> pos(uk, -1);
    for (int step = 0; step < k_; ++step) {
      int pick = -1, best_placed = -1, best_deg = -1;
      for (int v = 0; v < k_; ++v) {
        if (pos[static_cast<std::size_t>(v)] >= 0) continue;
        int placed = 0;
        for (const auto& [w, l] : adj[static_cast<std::size_t>(v)]) placed += pos[static_cast<std::size_t>(w)] >= 0;
        const int deg = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
        if (placed > best_placed || (placed == best_placed && deg > best_deg)) {
          pick = v;
          best_placed = placed;
          best_deg = deg;
        }
      }
      pos[static_cast<std::size_t>(pick)] = step;
      order_.push_back(pick);
    }
    constraints_.resize(uk);
    for (int step = 0; step < k_; ++step) {
      const int v = order_[static_cast<std::size_t>(step)];
      for (const auto& [w, l] : adj[static_cast<std::size_t>(v)]) {
        const int pw = pos[static_cast<std::size_t>(w)];
        // Arc v -> w: v must lie in the in-row of phi(w).
        if (pw < step) constraints_[static_cast<std::size_t>(step)].push_back({pw, l});
      }
    }
    image_.assign(uk, 0);
    scratch_.assign((uk + 1) * std::max<std::size_t>(words_, 1), 0);
  }

  unsigned __int128 run() {
    if (k_ == 0) return 1;
    if (d_.order() == 0) return 0;
    return extend(0);
  }

 private:
  unsigned __int128 extend(int step) {
    std::uint64_t* cand = scratch_.data() + static_cast<std::size_t>(step) * words_;
    fill_candidates(step, cand);
    if (step + 1 == k_) {
      std::uint64_t c = 0;
      for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::uint64_t>(std::popcount(cand[w]));
      return c;
    }
    unsigned __int128 total = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = cand[w]; bits != 0; bits &= bits - 1) {
        image_[static_cast<std::size_t>(step)] = static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        total += extend(step + 1);
      }
    }
    return total;
  }

  void fill_candidates(int step, std::uint64_t* cand) const {
    const int n = d_.order();
    for (std::size_t w = 0; w < words_; ++w) {
      const int rem = n - static_cast<int>(w * 64);
      cand[w] = rem >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
    }
    for (const Constraint& c : constraints_[static_cast<std::size_t>(step)]) {
      const int x = image_[static_cast<std::size_t>(c.earlier)];
      const auto in = d_.in_row(x);    // tails of arcs into x
      const auto out = d_.out_row(x);  // heads of arcs out of x
      for (std::size_t w = 0; w < words_; ++w) {
        // kOut: this vertex -> earlier, so candidate is a tail into x.
        const std::uint64_t row = c.link == Link::kOut ? in[w] : c.link == Link::kIn ? out[w] : (in[w] | out[w]);
        cand[w] &= row;
      }
    }
    if (injective_) {
      for (int s = 0; s < step; ++s) {
        const int x = image_[static_cast<std::size_t>(s)];
        cand[static_cast<std::size_t>(x) >> 6] &= ~(std::uint64_t{1} << (x & 63));
      }
    }
  }

  const OrientedGraph& d_;
  bool injective_;
  int k_;
  std::size_t words_;
  std::vector<int> order_;
  std::vector<std::vector<Constraint>> constraints_;
  std::vector<int> image_;
  std::vector<std::uint64_t> scratch_;
};

BigInt to_big(unsigned __int128 v) {
  BigInt r = static_cast<std::uint64_t>(v >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(v);
  return r;
}

BigInt count(const PartiallyOrientedGraph& h, const OrientedGraph& d, int max_k, bool injective) {
  if (h.order() > max_k) {
    throw SizeLimitError("pattern has " + std::to_string(h.order()) + " vertices; limit is " + std::to_string(max_k));
  }
  // n^k must fit the 128-bit accumulator.
  if (static_cast<long long>(h.order()) * std::bit_width(static_cast<unsigned>(d.order())) > 126) {
    throw SizeLimitError("homomorphism count may exceed 128 bits");
  }
  return to_big(HomCounter(h, d, injective).run());
}

BigInt pow_big(std::int64_t base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

BigInt hom_count(const PartiallyOrientedGraph& h, const OrientedGraph& d, int max_k) {
  return count(h, d, max_k, false);
}

BigInt underlying_hom_count(const PartiallyOrientedGraph& h, const OrientedGraph& d, int max_k) {
  return count(h.underlying(), d, max_k, false);
}

BigInt injective_hom_count(const PartiallyOrientedGraph& h, const OrientedGraph& d, int max_k) {
  return count(h, d, max_k, true);
}

DenseMargin dense_margin(const OrientedGraph& d, int limit, unsigned threads) {
  const int n = d.order();
  if (n > limit || n > kMaxScanOrder) {
    throw SizeLimitError("cut-margin scan limited to n <= " + std::to_string(std::min(limit, kMaxScanOrder)));
  }
  const auto best = scan::gray_scan(d, threads, [n](std::uint64_t, const scan::Lanes& l, const kernels::LaneSums&,
                                                    const scan::Best&) {
    std::int64_t v = 0;
    for (int i = 0; i < n; ++i) {
      const int diff = l.a.v[static_cast<std::size_t>(i)] - 2 * l.o.v[static_cast<std::size_t>(i)];
      if (diff > 0) v += diff;
    }
    return v;
  });
  DenseMargin out;
  out.value = best.value;
  out.a = VertexSet::from_mask(n, best.mask);
  out.b = VertexSet(n);
  for (int v = 0; v < n; ++v) {
    const auto a_v = static_cast<std::int64_t>(std::popcount(d.in_mask(v) & best.mask));
    const auto o_v = static_cast<std::int64_t>(std::popcount(d.out_mask(v) & best.mask));
    if (a_v > 2 * o_v) out.b.insert(v);
  }
  return out;
}

const char* to_string(DenseHypothesis h) noexcept {
  switch (h) {
    case DenseHypothesis::kNone: return "none";
    case DenseHypothesis::kCutMargin: return "cut-margin";
    case DenseHypothesis::kBiasPremise: return "bias-premise";
  }
  return "?";
}

DenseBoundRecord dense_bound_check(const PartiallyOrientedGraph& h, const OrientedGraph& d, Ratio epsilon,
                                   const DenseContext& ctx) {
  DenseBoundRecord r;
  r.n = d.order();
  r.k = h.order();
  r.oriented_edges = h.oriented_count();
  r.epsilon = epsilon;

  const std::int64_t p = epsilon.num, q = epsilon.den;
  const BigInt n2 = BigInt(r.n) * r.n;
  // x <= (p/q) n^2  <=>  q x <= p n^2
  if (ctx.margin) {
    r.margin_held = BigInt(q) * *ctx.margin <= BigInt(p) * n2;
  } else if (r.n <= ctx.margin_limit && r.n <= kMaxScanOrder) {
    r.margin_held = BigInt(q) * dense_margin(d, ctx.margin_limit).value <= BigInt(p) * n2;
  }
  if (ctx.bias) r.bias_premise_held = BigInt(q) * *ctx.bias < BigInt(p) * n2;
  if (r.margin_held) {
    r.hypothesis = DenseHypothesis::kCutMargin;
    r.hypothesis_held = *r.margin_held;
  } else if (r.bias_premise_held) {
    r.hypothesis = DenseHypothesis::kBiasPremise;
    r.hypothesis_held = *r.bias_premise_held;
  }

  r.hom = hom_count(h, d);
  r.hom_bar = ctx.hom_bar ? *ctx.hom_bar : underlying_hom_count(h, d);
  const BigInt three_s = pow_big(3, r.oriented_edges);
  const BigInt nk = pow_big(r.n, r.k);
  r.scale = 2 * BigInt(q) * three_s;
  r.lhs_scaled = r.scale * r.hom;
  r.rhs_scaled = 2 * BigInt(q) * r.hom_bar - (three_s - 1) * BigInt(p) * nk;
  r.pass = r.lhs_scaled >= r.rhs_scaled;

  if (r.oriented_edges == h.edge_total() && r.bias_premise_held.value_or(false)) {
    // n >= 4/eps  <=>  n p >= 4 q
    r.corollary_applicable = BigInt(r.n) * p >= 4 * BigInt(q);
    r.corollary_premise = BigInt(q) * r.hom_bar >= three_s * BigInt(p) * nk;
    if (r.corollary_applicable && r.corollary_premise) r.corollary_conclusion = injective_hom_count(h, d) > 0;
  }
  return r;
}

}  // namespace biasgraph

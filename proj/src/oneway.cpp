#include "biasgraph/oneway.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "biasgraph/kernels.hpp"
#include "biasgraph/rng.hpp"

namespace biasgraph {

std::uint64_t path2_count_within(const OrientedGraph& d, const VertexSet& a) {
  const auto& k = kernels::active();
  std::uint64_t total = 0;
  for (int x : a.members()) {
    for (int y : d.out_neighbors(x)) total += k.and_popcount(d.out_row(y).data(), a.words().data(), d.words_per_row());
  }
  return total;
}

GreedyTrace greedy_oneway_regular(const OrientedGraph& d, bool full_trace) {
  const int n = d.order();
  const int deg = regular_degree(d);
  if (deg < 1) throw std::invalid_argument("greedy one-way search needs a d-regular digraph with d >= 1");
  GreedyTrace tr;
  tr.degree = deg;
  tr.stop_t = n / (2 * deg);
  if (tr.stop_t < 1) throw std::invalid_argument("greedy one-way search needs n >= 2d");

  const auto un = static_cast<std::size_t>(n);
  std::vector<std::uint64_t> cost(un, 0);  // e2(A_t, {u})
  std::vector<std::uint8_t> in_a(un, 0);
  auto add = [&](int z) {
    in_a[static_cast<std::size_t>(z)] = 1;
    tr.order.push_back(z);
    for (int y : d.out_neighbors(z)) {
      for (int u : d.out_neighbors(y)) ++cost[static_cast<std::size_t>(u)];
    }
    for (int y : d.in_neighbors(z)) {
      for (int u : d.in_neighbors(y)) ++cost[static_cast<std::size_t>(u)];
    }
  };

  add(0);
  tr.e2.push_back(0);
  const int last = full_trace ? n : tr.stop_t;
  const std::uint64_t d2 = static_cast<std::uint64_t>(deg) * static_cast<std::uint64_t>(deg);
  for (int t = 1;; ++t) {
    // Two-paths between A_t and the rest, summed per outside vertex, must
    // equal 2 d^2 t - 2 e2(A_t) on a d-regular graph.
    std::uint64_t outside = 0;
    for (std::size_t u = 0; u < un; ++u) {
      if (!in_a[u]) outside += cost[u];
    }
    if (outside + 2 * tr.e2.back() != 2 * d2 * static_cast<std::uint64_t>(t)) {
      throw std::logic_error("two-path identity violated at t=" + std::to_string(t));
    }
    if (t >= last) break;
    std::size_t pick = un;
    for (std::size_t u = 0; u < un; ++u) {
      if (!in_a[u] && (pick == un || cost[u] < cost[pick])) pick = u;
    }
    tr.e2.push_back(tr.e2.back() + cost[pick]);
    add(static_cast<int>(pick));
  }

  tr.a = VertexSet(n);
  for (int t = 0; t < tr.stop_t; ++t) tr.a.insert(tr.order[static_cast<std::size_t>(t)]);
  tr.b = b_set(d, tr.a);
  tr.e_ab = arc_count_between(d, tr.a, tr.b);
  tr.e_ba = arc_count_between(d, tr.b, tr.a);
  return tr;
}

namespace {

VertexSet bernoulli_set(int n, double p, SplitMix64& rng) {
  VertexSet a(n);
  for (int v = 0; v < n; ++v) {
    if (rng.bernoulli(p)) a.insert(v);
  }
  return a;
}

BiasCertificate oneway_certificate(VertexSet a, VertexSet b, std::uint64_t e_ab) {
  BiasCertificate c;
  c.kind = CertificateKind::kOneWay;
  c.gamma = Ratio(0, 1);
  c.a = std::move(a);
  c.b = std::move(b);
  c.e_ab = e_ab;
  c.e_ba = 0;
  c.exact = false;
  return c;
}

// Shared trial loop; `restrict_b` (may be empty) is intersected with B(A).
SampleResult run_trials(const OrientedGraph& d, double p, std::uint64_t seed, int trials,
                        const VertexSet* restrict_b) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("sampling probability must lie in (0, 1]");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  SampleResult r;
  r.trials = trials;
  bool have = false;
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng(derived_seed(seed, static_cast<std::uint64_t>(t)));
    VertexSet a = bernoulli_set(d.order(), p, rng);
    VertexSet b = b_set(d, a);
    if (restrict_b != nullptr) b = b & *restrict_b;
    const std::uint64_t e = arc_count_between(d, a, b);
    r.total_e_ab += e;
    if (!have || e > r.best.e_ab) {
      r.best = oneway_certificate(std::move(a), std::move(b), e);
      r.best_trial = t;
      have = true;
    }
  }
  return r;
}

}  // namespace

SampleResult sampled_oneway(const OrientedGraph& d, double p, std::uint64_t seed, int trials) {
  if (d.arc_count() == 0) throw std::invalid_argument("sampled one-way search needs at least one arc");
  return run_trials(d, p, seed, trials, nullptr);
}

DegreeBand choose_band(const OrientedGraph& d) {
  const int n = d.order();
  int max_index = 0;
  while ((1LL << max_index) < n) ++max_index;  // ceil(log2 n)
  max_index = std::max(max_index, 1);
  // Smallest i with n <= deg * 2^i, i.e. deg in [n/2^i, n/2^(i-1)).
  auto band_of = [&](int deg) {
    int i = 1;
    while (static_cast<long long>(deg) << i < n) ++i;
    return i;
  };
  std::vector<int> minus(static_cast<std::size_t>(max_index) + 1, 0), plus(minus.size(), 0);
  for (int v = 0; v < n; ++v) {
    const int out = d.out_degree(v), in = d.in_degree(v);
    if (in == 0 && out == 0) throw std::invalid_argument("banded sampler needs a graph without isolated vertices");
    if (in >= out) ++minus[static_cast<std::size_t>(band_of(in))];
    if (out >= in) ++plus[static_cast<std::size_t>(band_of(out))];
  }
  DegreeBand best;
  best.size = -1;
  for (int i = 1; i <= max_index; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (minus[ui] > best.size) best = DegreeBand{i, true, minus[ui], false, 0.0};
    if (plus[ui] > best.size) best = DegreeBand{i, false, plus[ui], true, 0.0};
  }
  best.p = std::ldexp(1.0, best.index) / (3.0 * n);
  return best;
}

BandedResult banded_oneway(const OrientedGraph& d, std::uint64_t seed, int trials) {
  if (d.order() == 0) throw std::invalid_argument("banded sampler needs a non-empty graph");
  BandedResult out;
  out.band = choose_band(d);
  const OrientedGraph work = out.band.reversed ? reverse(d) : d;
  // In the working graph the band is always an in-side band.
  VertexSet band_set(d.order());
  for (int v = 0; v < d.order(); ++v) {
    const int in = work.in_degree(v), outd = work.out_degree(v);
    if (in < outd) continue;
    if ((static_cast<long long>(in) << out.band.index) >= d.order() &&
        (static_cast<long long>(in) << (out.band.index - 1)) < d.order()) {
      band_set.insert(v);
    }
  }
  out.samples = run_trials(work, out.band.p, seed, trials, &band_set);
  if (out.band.reversed) {
    // e_rev(A,B) = e(B,A): swap roles to certify on D.
    BiasCertificate& c = out.samples.best;
    std::swap(c.a, c.b);
  }
  return out;
}

SqrtBound sqrt_lower_bound(const OrientedGraph& d) {
  if (d.arc_count() == 0) throw std::invalid_argument("sqrt bound needs at least one arc");
  const DegreeProfile prof = degree_profile(d);
  const int center = static_cast<int>(std::max_element(prof.out.begin(), prof.out.end()) - prof.out.begin());
  VertexSet a(d.order(), {center});
  VertexSet b = VertexSet::from_members(d.order(), d.out_neighbors(center));
  BiasCertificate star = oneway_certificate(a, b, static_cast<std::uint64_t>(prof.max_out));

  const auto m = static_cast<std::uint64_t>(d.arc_count());
  const auto dmax = static_cast<std::uint64_t>(prof.max_out);
  // Star suffices when 4 D+ * D+ >= e, since then D+ >= e/4D+.
  if (4 * dmax * dmax >= m) return {star.e_ab, star};

  // Sample at p = 1/2D+ until a witness reaches e/4D+; the expectation is
  // at least that, so some trial does.
  constexpr int kBatch = 256;
  for (std::uint64_t batch = 0; batch < 4096; ++batch) {
    SampleResult r = sampled_oneway(d, 1.0 / (2.0 * static_cast<double>(dmax)), batch * kBatch, kBatch);
    if (4 * dmax * r.best.e_ab >= m) return {r.best.e_ab, std::move(r.best)};
  }
  throw std::runtime_error("sqrt bound sampler did not reach e/4D+");
}

}  // namespace biasgraph

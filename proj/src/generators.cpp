#include "biasgraph/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "biasgraph/rng.hpp"

namespace biasgraph {

SimpleGraph SimpleGraph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw GraphError(GraphErrorKind::kMalformed, "negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw GraphError(GraphErrorKind::kVertexOutOfRange, std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) throw GraphError(GraphErrorKind::kLoop, "at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw GraphError(GraphErrorKind::kDuplicateArc, "repeated edge");
  }
  SimpleGraph g;
  g.n_ = n;
  g.adj_.resize(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  g.edges_ = std::move(edges);
  return g;
}

bool SimpleGraph::adjacent(int u, int v) const {
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) return false;
  }
  return true;
}

std::vector<std::array<int, 3>> projective_points(int q) {
  std::vector<std::array<int, 3>> pts;
  pts.push_back({0, 0, 1});
  for (int z = 0; z < q; ++z) pts.push_back({0, 1, z});
  for (int y = 0; y < q; ++y) {
    for (int z = 0; z < q; ++z) pts.push_back({1, y, z});
  }
  return pts;
}

SimpleGraph polarity_graph(int q) {
  if (!is_prime(q)) throw std::invalid_argument("polarity graph needs a prime q, got " + std::to_string(q));
  const auto pts = projective_points(q);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const long long dot = static_cast<long long>(pts[i][0]) * pts[j][0] +
                            static_cast<long long>(pts[i][1]) * pts[j][1] +
                            static_cast<long long>(pts[i][2]) * pts[j][2];
      if (dot % q == 0) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return SimpleGraph::from_edges(static_cast<int>(pts.size()), std::move(edges));
}

C4FreeGraph c4free_graph(int n) {
  if (n < 2) throw std::invalid_argument("c4free_graph needs n >= 2");
  if (n < 7) return {SimpleGraph::from_edges(n, {{0, 1}}), 0};
  int q = 2;
  for (int cand = 2; static_cast<long long>(cand) * cand + cand + 1 <= n; ++cand) {
    if (is_prime(cand)) q = cand;
  }
  const SimpleGraph base = polarity_graph(q);
  std::vector<std::pair<int, int>> edges(base.edges().begin(), base.edges().end());
  return {SimpleGraph::from_edges(n, std::move(edges)), q};
}

namespace {

OrientedGraph orient_with(int n, std::span<const std::pair<int, int>> edges, SplitMix64& rng) {
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (rng.coin()) {
      arcs.push_back({u, v});
    } else {
      arcs.push_back({v, u});
    }
  }
  return OrientedGraph::from_arcs(n, std::move(arcs));
}

}  // namespace

OrientedGraph random_orientation(const SimpleGraph& g, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return orient_with(g.order(), g.edges(), rng);
}

OrientedGraph blow_up(const OrientedGraph& base, int l) {
  if (l < 1) throw std::invalid_argument("blow-up factor must be at least 1");
  std::vector<Arc> arcs;
  arcs.reserve(base.arc_count() * static_cast<std::size_t>(l) * static_cast<std::size_t>(l));
  for (const Arc& a : base.arcs()) {
    for (int s = 0; s < l; ++s) {
      for (int t = 0; t < l; ++t) arcs.push_back({a.tail * l + s, a.head * l + t});
    }
  }
  return OrientedGraph::from_arcs(base.order() * l, std::move(arcs));
}

OrientedGraph contract_cells(const OrientedGraph& blown, int l) {
  if (l < 1 || blown.order() % l != 0) throw std::invalid_argument("order is not a multiple of the cell size");
  std::vector<Arc> arcs;
  for (const Arc& a : blown.arcs()) arcs.push_back({a.tail / l, a.head / l});
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return OrientedGraph::from_arcs(blown.order() / l, std::move(arcs));
}

std::vector<int> log_partition_sizes(int n) {
  if (n < 4) throw std::invalid_argument("log-partition digraph needs n >= 4");
  int l = 0;
  while ((2LL << l) <= n) ++l;  // floor(log2 n)
  const int base = n / l, extra = n % l;
  std::vector<int> sizes(static_cast<std::size_t>(l), base);
  for (int i = 0; i < extra; ++i) ++sizes[static_cast<std::size_t>(i)];
  return sizes;
}

namespace {

std::vector<int> part_labels(const std::vector<int>& sizes) {
  std::vector<int> part_of;
  for (std::size_t i = 0; i < sizes.size(); ++i) part_of.insert(part_of.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i) + 1);
  return part_of;
}

}  // namespace

LogPartition log_partition_digraph(int n, std::uint64_t seed) {
  LogPartition out;
  out.part_sizes = log_partition_sizes(n);
  out.parts = static_cast<int>(out.part_sizes.size());
  out.part_of = part_labels(out.part_sizes);
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const int exponent = out.part_of[static_cast<std::size_t>(x)] + out.part_of[static_cast<std::size_t>(y)] - 1;
      const std::uint64_t r = rng.next();
      if (exponent >= 64 ? r == 0 : (r >> (64 - exponent)) == 0) edges.emplace_back(x, y);
    }
  }
  out.graph = orient_with(n, edges, rng);
  return out;
}

std::pair<double, double> log_partition_edge_moments(int n) {
  const auto part_of = part_labels(log_partition_sizes(n));
  double mean = 0.0, var = 0.0;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const double p = std::ldexp(1.0, -(part_of[static_cast<std::size_t>(x)] + part_of[static_cast<std::size_t>(y)] - 1));
      mean += p;
      var += p * (1.0 - p);
    }
  }
  return {mean, var};
}

OrientedGraph circulant_digraph(int n, std::span<const int> offsets) {
  if (n < 1) throw std::invalid_argument("circulant needs n >= 1");
  std::vector<int> seen;
  for (int s : offsets) {
    if (s < 1 || 2 * s > n - 1) {
      throw std::invalid_argument("circulant offset " + std::to_string(s) + " outside 1.." + std::to_string((n - 1) / 2));
    }
    if (std::find(seen.begin(), seen.end(), s) != seen.end()) throw std::invalid_argument("repeated circulant offset");
    seen.push_back(s);
  }
  std::vector<Arc> arcs;
  for (int v = 0; v < n; ++v) {
    for (int s : offsets) arcs.push_back({v, (v + s) % n});
  }
  return OrientedGraph::from_arcs(n, std::move(arcs));
}

OrientedGraph random_oriented_gne(int n, std::int64_t edges, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  const std::int64_t universe = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (edges < 0 || edges > universe) {
    throw std::invalid_argument("edge target " + std::to_string(edges) + " exceeds " + std::to_string(universe) + " pairs");
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(universe));
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
  }
  SplitMix64 rng(seed);
  for (std::int64_t i = 0; i < edges; ++i) {
    const auto j = i + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(universe - i)));
    std::swap(pairs[static_cast<std::size_t>(i)], pairs[static_cast<std::size_t>(j)]);
  }
  pairs.resize(static_cast<std::size_t>(edges));
  std::sort(pairs.begin(), pairs.end());
  return orient_with(n, pairs, rng);
}

OrientedGraph random_oriented_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0 || !(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp needs n >= 0 and p in [0,1]");
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (rng.bernoulli(p)) edges.emplace_back(x, y);
    }
  }
  return orient_with(n, edges, rng);
}

}  // namespace biasgraph

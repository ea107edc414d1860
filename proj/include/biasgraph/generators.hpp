#pragma once

// Graph families: polarity graphs of PG(2,q), padded C4-free graphs, random
// orientations, blow-ups, the logarithmic-partition random digraph,
// circulants and uniform random graphs with a fixed edge count.
//
// Randomised generators draw from SplitMix64 in a fixed order (documented
// per function), so a seed pins the output exactly.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "biasgraph/oriented_graph.hpp"

namespace biasgraph {

/// Undirected simple graph; edges kept sorted with first < second.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Throws GraphError on loops, repeated edges, out-of-range vertices.
  static SimpleGraph from_edges(int n, std::vector<std::pair<int, int>> edges);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const std::pair<int, int>> edges() const noexcept { return edges_; }
  std::span<const int> neighbors(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const noexcept { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(int u, int v) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

bool is_prime(std::int64_t q);

/// Points of PG(2,q) in normalised form (first non-zero coordinate 1), in
/// the vertex order used by polarity_graph.
std::vector<std::array<int, 3>> projective_points(int q);

/// Orthogonality graph on PG(2,q): distinct points adjacent when
/// xx' + yy' + zz' = 0 mod q. Prime q only.
SimpleGraph polarity_graph(int q);

struct C4FreeGraph {
  SimpleGraph graph;
  int q = 0;  // 0 when the single-edge fallback was used
};

/// Polarity graph for the largest prime q with q^2+q+1 <= n, padded with
/// isolated vertices to n; a single edge when n < 7.
C4FreeGraph c4free_graph(int n);

/// One coin per edge in sorted edge order: heads keeps (u,v) with u < v,
/// tails flips it.
OrientedGraph random_orientation(const SimpleGraph& g, std::uint64_t seed);

/// Cells {il, ..., il+l-1}; every arc (i,j) becomes all l^2 arcs between
/// cells i and j.
OrientedGraph blow_up(const OrientedGraph& base, int l);

/// Collapse of a blow-up back to its cell graph (inverse of blow_up).
OrientedGraph contract_cells(const OrientedGraph& blown, int l);

struct LogPartition {
  OrientedGraph graph;
  int parts = 0;                // l = floor(log2 n)
  std::vector<int> part_sizes;  // V_1 .. V_l, consecutive vertex ranges
  std::vector<int> part_of;     // 1-based part index per vertex
};

/// Part sizes: the first (n mod l) parts get ceil(n/l), the rest floor(n/l).
std::vector<int> log_partition_sizes(int n);

/// Pairs {x,y}, x in V_i, y in V_j, become edges with probability
/// 2^-(i+j-1) (within-part pairs included); one draw per pair in sorted
/// pair order (edge iff the top i+j-1 bits are zero), then one coin per
/// edge in sorted order from the same stream for the orientation.
LogPartition log_partition_digraph(int n, std::uint64_t seed);

/// Exact expectation and variance of the log-partition edge count.
std::pair<double, double> log_partition_edge_moments(int n);

/// Arcs v -> v+s mod n for each offset s; offsets must be distinct and in
/// 1..floor((n-1)/2).
OrientedGraph circulant_digraph(int n, std::span<const int> offsets);

/// Uniform graph with exactly `edges` edges (partial Fisher-Yates over the
/// sorted pair universe, one bounded draw per chosen edge), then oriented
/// with random_orientation's coin rule continuing the same stream.
OrientedGraph random_oriented_gne(int n, std::int64_t edges, std::uint64_t seed);

/// Binomial random graph: one uniform draw per pair in sorted order, then
/// orientation coins from the same stream.
OrientedGraph random_oriented_gnp(int n, double p, std::uint64_t seed);

/// Reproducible description of a generator call, written as a JSON sidecar.
struct GeneratorSpec {
  std::string family;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;

  nlohmann::json to_json() const { return {{"family", family}, {"params", params}, {"seed", seed}}; }
};

}  // namespace biasgraph

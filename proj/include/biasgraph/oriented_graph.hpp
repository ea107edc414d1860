#pragma once

// Oriented graphs (orientations of simple graphs) and partially oriented
// pattern graphs, with the subset/degree queries everything else builds on.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biasgraph/vertex_set.hpp"

namespace biasgraph {

struct Arc {
  int tail = 0;
  int head = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

enum class GraphErrorKind {
  kMalformed,
  kLoop,
  kDigon,
  kDuplicateArc,
  kVertexOutOfRange,
  kCountMismatch,
};

const char* to_string(GraphErrorKind kind) noexcept;

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  GraphErrorKind kind() const noexcept { return kind_; }

 private:
  GraphErrorKind kind_;
};

/// Immutable oriented graph on vertices 0..n-1: no loops, no digons, no
/// repeated arcs. Keeps sorted arcs, per-vertex adjacency lists, and
/// out/in adjacency bit rows for subset counting.
class OrientedGraph {
 public:
  OrientedGraph() = default;

  /// Validates and builds; throws GraphError on any invariant violation.
  static OrientedGraph from_arcs(int n, std::vector<Arc> arcs);

  int order() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  /// Arcs sorted by (tail, head).
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  std::span<const int> out_neighbors(int v) const noexcept {
    return {out_adj_.data() + out_offset_[v], out_adj_.data() + out_offset_[v + 1]};
  }
  std::span<const int> in_neighbors(int v) const noexcept {
    return {in_adj_.data() + in_offset_[v], in_adj_.data() + in_offset_[v + 1]};
  }
  int out_degree(int v) const noexcept { return out_offset_[v + 1] - out_offset_[v]; }
  int in_degree(int v) const noexcept { return in_offset_[v + 1] - in_offset_[v]; }

  bool has_arc(int u, int v) const noexcept {
    return (out_rows_[row_index(u) + (static_cast<std::size_t>(v) >> 6)] >> (v & 63)) & 1U;
  }

  std::size_t words_per_row() const noexcept { return words_; }
  std::span<const std::uint64_t> out_row(int v) const noexcept {
    return {out_rows_.data() + row_index(v), words_};
  }
  std::span<const std::uint64_t> in_row(int v) const noexcept {
    return {in_rows_.data() + row_index(v), words_};
  }
  /// All out rows, contiguous, n * words_per_row() words.
  std::span<const std::uint64_t> out_rows() const noexcept { return out_rows_; }
  std::span<const std::uint64_t> in_rows() const noexcept { return in_rows_; }

  /// Single-word rows; valid only when order() <= 64.
  std::uint64_t out_mask(int v) const noexcept { return out_rows_[static_cast<std::size_t>(v)]; }
  std::uint64_t in_mask(int v) const noexcept { return in_rows_[static_cast<std::size_t>(v)]; }

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) noexcept {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  std::size_t row_index(int v) const noexcept { return static_cast<std::size_t>(v) * words_; }

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> out_offset_{0}, in_offset_{0};
  std::vector<int> out_adj_, in_adj_;
  std::vector<std::uint64_t> out_rows_, in_rows_;
};

/// Edge-list text: optional '#' comment lines, a header "n m", then m lines
/// "tail head".
OrientedGraph parse_digraph(std::string_view text);
OrientedGraph read_digraph(std::istream& in);
std::string serialize(const OrientedGraph& d);

/// e(A,B): arcs with tail in A and head in B (A and B may overlap).
std::uint64_t arc_count_between(const OrientedGraph& d, const VertexSet& a, const VertexSet& b);

struct DegreeProfile {
  std::vector<int> out;
  std::vector<int> in;
  int max_out = 0;
  int max_in = 0;
};

DegreeProfile degree_profile(const OrientedGraph& d);

/// Common-neighbourhood sizes for an ordered vertex pair (x, u).
struct JointDegrees {
  int out_out = 0;  // |G+(x) & G+(u)|
  int out_in = 0;   // |G+(x) & G-(u)|: two-paths x -> . -> u
  int in_out = 0;   // |G-(x) & G+(u)|: two-paths u -> . -> x
  int in_in = 0;    // |G-(x) & G-(u)|

  friend bool operator==(const JointDegrees&, const JointDegrees&) = default;
};

JointDegrees joint_degrees(const OrientedGraph& d, int x, int u);

OrientedGraph reverse(const OrientedGraph& d);

/// B(A) = {v : v has no out-arc into A}.
VertexSet b_set(const OrientedGraph& d, const VertexSet& a);

/// d-regular test: every in- and out-degree equals d. Returns d, or -1.
int regular_degree(const OrientedGraph& d);

/// Graph with some edges oriented (arcs) and others left undirected.
class PartiallyOrientedGraph {
 public:
  PartiallyOrientedGraph() = default;

  /// Throws GraphError on loops, out-of-range vertices, or any unordered
  /// pair used twice across arcs and edges.
  static PartiallyOrientedGraph from(int k, std::vector<Arc> arcs,
                                     std::vector<std::pair<int, int>> edges);

  int order() const noexcept { return k_; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  std::span<const std::pair<int, int>> edges() const noexcept { return edges_; }
  int oriented_count() const noexcept { return static_cast<int>(arcs_.size()); }
  int edge_total() const noexcept { return static_cast<int>(arcs_.size() + edges_.size()); }

  /// Same pattern with every arc turned into an undirected edge.
  PartiallyOrientedGraph underlying() const;

  /// Fully oriented pattern from an oriented graph.
  static PartiallyOrientedGraph from_oriented(const OrientedGraph& d);

  friend bool operator==(const PartiallyOrientedGraph&, const PartiallyOrientedGraph&) = default;

 private:
  int k_ = 0;
  std::vector<Arc> arcs_;                        // sorted
  std::vector<std::pair<int, int>> edges_;       // sorted, first < second
};

/// Pattern text: header "k m", then m lines "u v >" (arc u->v) or
/// "u v -" (undirected edge).
PartiallyOrientedGraph parse_pattern(std::string_view text);
std::string serialize(const PartiallyOrientedGraph& h);

}  // namespace biasgraph

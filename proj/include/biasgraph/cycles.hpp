#pragma once

// Two-path and oriented-cycle statistics: the Sum d+ d- two-path count, the
// joint-degree formula for oriented four-cycles, DFS simple-cycle counts,
// closed-walk (homomorphic) cycle counts, and balanced/unbalanced pairs.

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "biasgraph/errors.hpp"
#include "biasgraph/oriented_graph.hpp"
#include "biasgraph/rational.hpp"

namespace biasgraph {

using BigInt = boost::multiprecision::cpp_int;

/// Sum over y of d+(y) d-(y).
std::uint64_t two_path_count(const OrientedGraph& d);

/// (1/4) Sum_{x,u} d+-(x,u) d-+(x,u). Throws std::logic_error if the sum is
/// not divisible by 4.
std::uint64_t oriented_c4_count(const OrientedGraph& d);

struct CycleBudget {
  int max_order_short = 64;  // k <= 6
  int max_order_long = 32;   // k = 7, 8
};

/// Directed simple cycles of length k (3..8), each counted once. Throws
/// SizeLimitError beyond the budget.
std::uint64_t simple_cycle_count(const OrientedGraph& d, int k, CycleBudget budget = {});

/// trace(M^k) for the 0/1 arc matrix M: closed directed k-walks.
BigInt hom_cycle_count(const OrientedGraph& d, int k);

struct PathStats {
  std::uint64_t two_path_total = 0;
  std::uint64_t good_two_paths = 0;        // end vertex has d+ >= threshold
  std::uint64_t unbalanced_pairs = 0;      // ordered (x,u), d+-(x,u) > f d+-(u,x)
  std::uint64_t unbalanced_two_paths = 0;  // Sum of d+-(x,u) over those pairs
  Ratio threshold;
  std::vector<std::uint64_t> e_x;          // two-paths starting at x
};

/// Defaults: factor 16, threshold e/8n.
PathStats path_stats(const OrientedGraph& d, int unbalance_factor = 16,
                     std::optional<Ratio> outdeg_threshold = std::nullopt);

}  // namespace biasgraph

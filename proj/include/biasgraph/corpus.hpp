#pragma once

// Exhaustive corpora: every labelled oriented graph on n vertices, and one
// representative per isomorphism class of partially oriented patterns.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "biasgraph/oriented_graph.hpp"

namespace biasgraph {

/// 3^(n(n-1)/2). Each graph has a code whose base-3 digits, over pairs
/// i < j in lexicographic order (least significant first), are 0 for no
/// edge, 1 for i -> j and 2 for j -> i.
std::uint64_t corpus_size(int n);

OrientedGraph corpus_graph(int n, std::uint64_t code);

/// Calls `visit(code, graph)` for codes 0 .. corpus_size(n)-1 in order.
/// Refuses n > 7.
void for_each_oriented_graph(int n, const std::function<void(std::uint64_t, const OrientedGraph&)>& visit);

/// Sortable instance key, e.g. "n5/00042".
std::string corpus_key(int n, std::uint64_t code);

/// Pattern code: base-4 digits per pair i < j, 0 absent, 1 undirected,
/// 2 i -> j, 3 j -> i.
PartiallyOrientedGraph pattern_from_code(int k, std::uint64_t code);
std::uint64_t pattern_code(const PartiallyOrientedGraph& h);

/// Smallest code over all relabellings.
std::uint64_t canonical_pattern_code(int k, std::uint64_t code);

/// One pattern per isomorphism class of partial orientations of subgraphs
/// of K_k (k <= 5), ordered by canonical code.
std::vector<PartiallyOrientedGraph> pattern_classes(int k);

}  // namespace biasgraph

#pragma once

// Brute-force reference implementations used only by tests. Each works
// from the arc list or a dense 0/1 matrix and shares no code path with
// the library's bit-row kernels.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "biasgraph/oriented_graph.hpp"
#include "biasgraph/rng.hpp"

namespace oracle {

using biasgraph::Arc;
using biasgraph::OrientedGraph;

inline std::vector<std::vector<int>> matrix(const OrientedGraph& d) {
  const auto n = static_cast<std::size_t>(d.order());
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (const Arc& a : d.arcs()) m[static_cast<std::size_t>(a.tail)][static_cast<std::size_t>(a.head)] = 1;
  return m;
}

inline bool bit(std::uint64_t mask, int v) { return (mask >> v) & 1U; }

/// e(A,B) by looping over arcs.
inline std::uint64_t arcs_between(const OrientedGraph& d, std::uint64_t a, std::uint64_t b) {
  std::uint64_t c = 0;
  for (const Arc& arc : d.arcs()) c += bit(a, arc.tail) && bit(b, arc.head);
  return c;
}

/// Max e(A,B) over all pairs with den e(B,A) <= num e(A,B); n <= 6.
inline std::uint64_t bias(const OrientedGraph& d, std::int64_t num, std::int64_t den) {
  const std::uint64_t full = std::uint64_t{1} << d.order();
  std::uint64_t best = 0;
  for (std::uint64_t a = 0; a < full; ++a) {
    for (std::uint64_t b = 0; b < full; ++b) {
      const auto ab = arcs_between(d, a, b), ba = arcs_between(d, b, a);
      if (static_cast<std::int64_t>(ba) * den <= static_cast<std::int64_t>(ab) * num) best = std::max(best, ab);
    }
  }
  return best;
}

/// Bias for a fixed A by trying every B; returns the best e(A,B).
inline std::uint64_t best_b(const OrientedGraph& d, std::uint64_t a, std::int64_t num, std::int64_t den) {
  const std::uint64_t full = std::uint64_t{1} << d.order();
  std::uint64_t best = 0;
  for (std::uint64_t b = 0; b < full; ++b) {
    const auto ab = arcs_between(d, a, b), ba = arcs_between(d, b, a);
    if (static_cast<std::int64_t>(ba) * den <= static_cast<std::int64_t>(ab) * num) best = std::max(best, ab);
  }
  return best;
}

/// Max e(A,B) over pairs with e(B,A) = 0, by enumerating all pairs when
/// n <= 6 and all A with the explicit B(A) otherwise.
inline std::uint64_t ow(const OrientedGraph& d) {
  const int n = d.order();
  const std::uint64_t full = std::uint64_t{1} << n;
  std::uint64_t best = 0;
  for (std::uint64_t a = 0; a < full; ++a) {
    std::uint64_t b = 0;
    for (int v = 0; v < n; ++v) {
      bool into_a = false;
      for (const Arc& arc : d.arcs()) into_a = into_a || (arc.tail == v && bit(a, arc.head));
      if (!into_a) b |= std::uint64_t{1} << v;
    }
    best = std::max(best, arcs_between(d, a, b));
  }
  return best;
}

inline std::uint64_t two_paths(const OrientedGraph& d) {
  const auto m = matrix(d);
  const auto n = m.size();
  std::uint64_t c = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t u = 0; u < n; ++u) c += m[x][y] && m[y][u];
  return c;
}

/// Paths x -> y -> u with x, u in A.
inline std::uint64_t two_paths_within(const OrientedGraph& d, std::uint64_t a) {
  const auto m = matrix(d);
  const int n = d.order();
  std::uint64_t c = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int u = 0; u < n; ++u)
        c += bit(a, x) && bit(a, u) && m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] &&
             m[static_cast<std::size_t>(y)][static_cast<std::size_t>(u)];
  return c;
}

/// Oriented four-cycles from ordered 4-tuples of distinct vertices.
inline std::uint64_t c4(const OrientedGraph& d) {
  const auto m = matrix(d);
  const auto n = m.size();
  std::uint64_t c = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t e = 0; e < n; ++e)
        for (std::size_t f = 0; f < n; ++f) {
          if (a == b || a == e || a == f || b == e || b == f || e == f) continue;
          c += m[a][b] && m[b][e] && m[e][f] && m[f][a];
        }
  return c / 4;
}

/// Directed simple k-cycles: ordered injective sequences closing up, / k.
inline std::uint64_t simple_cycles(const OrientedGraph& d, int k) {
  const auto m = matrix(d);
  const int n = d.order();
  std::uint64_t count = 0;
  std::vector<int> seq(static_cast<std::size_t>(k));
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      count += m[static_cast<std::size_t>(seq.back())][static_cast<std::size_t>(seq.front())];
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      if (pos > 0 && !m[static_cast<std::size_t>(seq[static_cast<std::size_t>(pos - 1)])][static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = 1;
      seq[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1);
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(rec, 0);
  return count / static_cast<std::uint64_t>(k);
}

/// trace(M^k) by dense matrix powers (small n, no overflow at test sizes).
inline std::uint64_t trace_power(const OrientedGraph& d, int k) {
  const auto m = matrix(d);
  const auto n = m.size();
  std::vector<std::vector<std::uint64_t>> p(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) p[i][i] = 1;
  for (int step = 0; step < k; ++step) {
    std::vector<std::vector<std::uint64_t>> q(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) q[i][j] += p[i][l] * static_cast<std::uint64_t>(m[l][j]);
    p = std::move(q);
  }
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < n; ++i) t += p[i][i];
  return t;
}

/// Pattern edge list: kind 0 arc u->v, kind 1 undirected.
struct PatternEdge {
  int u;
  int v;
  int kind;
};

/// Homomorphisms by enumerating all n^k maps.
inline std::uint64_t hom(int k, const std::vector<PatternEdge>& edges, const OrientedGraph& d, bool injective = false) {
  const auto m = matrix(d);
  const int n = d.order();
  if (k == 0) return 1;
  if (n == 0) return 0;
  std::vector<int> phi(static_cast<std::size_t>(k), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& e : edges) {
      const auto a = static_cast<std::size_t>(phi[static_cast<std::size_t>(e.u)]);
      const auto b = static_cast<std::size_t>(phi[static_cast<std::size_t>(e.v)]);
      ok = ok && (e.kind == 0 ? m[a][b] == 1 : (m[a][b] == 1 || m[b][a] == 1));
    }
    if (ok && injective) {
      auto s = phi;
      std::sort(s.begin(), s.end());
      ok = std::adjacent_find(s.begin(), s.end()) == s.end();
    }
    count += ok;
    int i = 0;
    while (i < k && ++phi[static_cast<std::size_t>(i)] == n) phi[static_cast<std::size_t>(i++)] = 0;
    if (i == k) break;
  }
  return count;
}

/// d+-(x,u): two-paths x -> . -> u.
inline int paths_between(const OrientedGraph& d, int x, int u) {
  const auto m = matrix(d);
  int c = 0;
  for (int y = 0; y < d.order(); ++y)
    c += m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] && m[static_cast<std::size_t>(y)][static_cast<std::size_t>(u)];
  return c;
}

/// Arbitrary random oriented graph straight from a SplitMix64 stream.
inline OrientedGraph random_graph(std::uint64_t seed, int n, double p) {
  biasgraph::SplitMix64 rng(seed);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rng.uniform01() >= p) continue;
      if (rng.coin()) {
        arcs.push_back({i, j});
      } else {
        arcs.push_back({j, i});
      }
    }
  return OrientedGraph::from_arcs(n, std::move(arcs));
}

/// Undirected four-cycle by 4-tuple scan over an adjacency predicate.
template <class Adj>
bool has_undirected_c4(int n, Adj adj) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          if (a == b || a == c || a == e || b == c || b == e || c == e) continue;
          if (adj(a, b) && adj(b, c) && adj(c, e) && adj(e, a)) return true;
        }
  return false;
}

}  // namespace oracle

#include "biasgraph/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>
#include <stdexcept>

#include "biasgraph/errors.hpp"

namespace biasgraph {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::uint64_t corpus_size(int n) {
  if (n < 0 || n > 8) throw SizeLimitError("exhaustive corpus limited to n <= 8");
  return ipow(3, pair_count(n));
}

OrientedGraph corpus_graph(int n, std::uint64_t code) {
  if (code >= corpus_size(n)) throw std::out_of_range("corpus code out of range");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto digit = code % 3;
      code /= 3;
      if (digit == 1) arcs.push_back({i, j});
      if (digit == 2) arcs.push_back({j, i});
    }
  }
  return OrientedGraph::from_arcs(n, std::move(arcs));
}

void for_each_oriented_graph(int n, const std::function<void(std::uint64_t, const OrientedGraph&)>& visit) {
  if (n > 7) throw SizeLimitError("exhaustive enumeration limited to n <= 7");
  const std::uint64_t total = corpus_size(n);
  for (std::uint64_t code = 0; code < total; ++code) visit(code, corpus_graph(n, code));
}

std::string corpus_key(int n, std::uint64_t code) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "n%d/%08llu", n, static_cast<unsigned long long>(code));
  return buf;
}

PartiallyOrientedGraph pattern_from_code(int k, std::uint64_t code) {
  std::vector<Arc> arcs;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const auto digit = code % 4;
      code /= 4;
      if (digit == 1) edges.emplace_back(i, j);
      if (digit == 2) arcs.push_back({i, j});
      if (digit == 3) arcs.push_back({j, i});
    }
  }
  return PartiallyOrientedGraph::from(k, std::move(arcs), std::move(edges));
}

namespace {

std::uint64_t pair_weight(int k, int i, int j) {
  // Position of pair (i, j), i < j, in lexicographic order.
  int idx = 0;
  for (int a = 0; a < i; ++a) idx += k - 1 - a;
  idx += j - i - 1;
  return ipow(4, idx);
}

}  // namespace

std::uint64_t pattern_code(const PartiallyOrientedGraph& h) {
  const int k = h.order();
  std::uint64_t code = 0;
  for (const Arc& a : h.arcs()) {
    if (a.tail < a.head) {
      code += 2 * pair_weight(k, a.tail, a.head);
    } else {
      code += 3 * pair_weight(k, a.head, a.tail);
    }
  }
  for (const auto& [u, v] : h.edges()) code += pair_weight(k, u, v);
  return code;
}

std::uint64_t canonical_pattern_code(int k, std::uint64_t code) {
  const PartiallyOrientedGraph h = pattern_from_code(k, code);
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = code;
  do {
    std::uint64_t c = 0;
    for (const Arc& a : h.arcs()) {
      const int t = perm[static_cast<std::size_t>(a.tail)], hd = perm[static_cast<std::size_t>(a.head)];
      c += t < hd ? 2 * pair_weight(k, t, hd) : 3 * pair_weight(k, hd, t);
    }
    for (const auto& [u, v] : h.edges()) {
      const int pu = perm[static_cast<std::size_t>(u)], pv = perm[static_cast<std::size_t>(v)];
      c += pair_weight(k, std::min(pu, pv), std::max(pu, pv));
    }
    best = std::min(best, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<PartiallyOrientedGraph> pattern_classes(int k) {
  if (k < 0 || k > 5) throw SizeLimitError("pattern enumeration limited to k <= 5");
  const std::uint64_t total = ipow(4, pair_count(k));
  std::set<std::uint64_t> reps;
  for (std::uint64_t code = 0; code < total; ++code) reps.insert(canonical_pattern_code(k, code));
  std::vector<PartiallyOrientedGraph> out;
  out.reserve(reps.size());
  for (std::uint64_t c : reps) out.push_back(pattern_from_code(k, c));
  return out;
}

}  // namespace biasgraph

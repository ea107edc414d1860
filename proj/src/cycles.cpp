#include "biasgraph/cycles.hpp"

#include <stdexcept>
#include <string>

#include "biasgraph/kernels.hpp"

namespace biasgraph {

std::uint64_t two_path_count(const OrientedGraph& d) {
  std::uint64_t total = 0;
  for (int y = 0; y < d.order(); ++y) {
    total += static_cast<std::uint64_t>(d.out_degree(y)) * static_cast<std::uint64_t>(d.in_degree(y));
  }
  return total;
}

namespace {

// paths[x*n + u] = d+-(x,u), two-paths x -> . -> u.
std::vector<std::uint32_t> two_path_matrix(const OrientedGraph& d) {
  const int n = d.order();
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::uint32_t> paths(un * un, 0);
  if (n == 0) return paths;
  const auto& k = kernels::active();
  for (int x = 0; x < n; ++x) {
    k.masked_popcounts(d.in_rows().data(), un, d.words_per_row(), d.out_row(x).data(),
                       paths.data() + static_cast<std::size_t>(x) * un);
  }
  return paths;
}

}  // namespace

std::uint64_t oriented_c4_count(const OrientedGraph& d) {
  const auto un = static_cast<std::size_t>(d.order());
  const auto paths = two_path_matrix(d);
  std::uint64_t sum = 0;
  for (std::size_t x = 0; x < un; ++x) {
    for (std::size_t u = 0; u < un; ++u) {
      sum += static_cast<std::uint64_t>(paths[x * un + u]) * paths[u * un + x];
    }
  }
  if (sum % 4 != 0) throw std::logic_error("four-cycle sum " + std::to_string(sum) + " not divisible by 4");
  return sum / 4;
}

namespace {

struct CycleDfs {
  const OrientedGraph& d;
  int k;
  int start = 0;
  std::vector<std::uint8_t> on_path;
  std::uint64_t count = 0;

  void extend(int v, int depth) {
    if (depth == k) {
      if (d.has_arc(v, start)) ++count;
      return;
    }
    for (int w : d.out_neighbors(v)) {
      if (w <= start || on_path[static_cast<std::size_t>(w)]) continue;
      on_path[static_cast<std::size_t>(w)] = 1;
      extend(w, depth + 1);
      on_path[static_cast<std::size_t>(w)] = 0;
    }
  }
};

}  // namespace

std::uint64_t simple_cycle_count(const OrientedGraph& d, int k, CycleBudget budget) {
  if (k < 3 || k > 8) throw std::invalid_argument("cycle length must be in 3..8");
  const int cap = k <= 6 ? budget.max_order_short : budget.max_order_long;
  if (d.order() > cap) {
    throw SizeLimitError("simple cycle count of length " + std::to_string(k) + " limited to n <= " + std::to_string(cap));
  }
  CycleDfs dfs{d, k, 0, std::vector<std::uint8_t>(static_cast<std::size_t>(d.order()), 0), 0};
  for (int s = 0; s < d.order(); ++s) {
    dfs.start = s;
    dfs.on_path[static_cast<std::size_t>(s)] = 1;
    dfs.extend(s, 1);
    dfs.on_path[static_cast<std::size_t>(s)] = 0;
  }
  return dfs.count;
}

BigInt hom_cycle_count(const OrientedGraph& d, int k) {
  if (k < 1) throw std::invalid_argument("walk length must be positive");
  const auto un = static_cast<std::size_t>(d.order());
  BigInt trace = 0;
  std::vector<BigInt> cur(un), next(un);
  for (std::size_t s = 0; s < un; ++s) {
    std::fill(cur.begin(), cur.end(), BigInt(0));
    cur[s] = 1;
    for (int step = 0; step < k; ++step) {
      std::fill(next.begin(), next.end(), BigInt(0));
      for (const Arc& a : d.arcs()) {
        const auto& c = cur[static_cast<std::size_t>(a.tail)];
        if (!c.is_zero()) next[static_cast<std::size_t>(a.head)] += c;
      }
      cur.swap(next);
    }
    trace += cur[s];
  }
  return trace;
}

PathStats path_stats(const OrientedGraph& d, int unbalance_factor, std::optional<Ratio> outdeg_threshold) {
  if (unbalance_factor < 0) throw std::invalid_argument("unbalance factor must be non-negative");
  const int n = d.order();
  const auto un = static_cast<std::size_t>(n);
  PathStats st;
  st.threshold = outdeg_threshold ? *outdeg_threshold
                                  : (n == 0 ? Ratio(0, 1) : Ratio(static_cast<std::int64_t>(d.arc_count()), 8LL * n));
  st.two_path_total = two_path_count(d);
  st.e_x.assign(un, 0);
  for (int x = 0; x < n; ++x) {
    for (int y : d.out_neighbors(x)) st.e_x[static_cast<std::size_t>(x)] += static_cast<std::uint64_t>(d.out_degree(y));
  }
  for (int u = 0; u < n; ++u) {
    if (static_cast<__int128>(d.out_degree(u)) * st.threshold.den < st.threshold.num) continue;
    for (int y : d.in_neighbors(u)) st.good_two_paths += static_cast<std::uint64_t>(d.in_degree(y));
  }
  const auto paths = two_path_matrix(d);
  for (std::size_t x = 0; x < un; ++x) {
    for (std::size_t u = 0; u < un; ++u) {
      if (x == u) continue;
      const std::uint64_t there = paths[x * un + u], back = paths[u * un + x];
      if (there > static_cast<std::uint64_t>(unbalance_factor) * back) {
        ++st.unbalanced_pairs;
        st.unbalanced_two_paths += there;
      }
    }
  }
  return st;
}

}  // namespace biasgraph

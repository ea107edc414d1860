#pragma once

// Exhaustive scan over every subset A of V(D) in Gray-code order. For each
// A the visitor sees, per vertex v, a[v] = e(A,{v}) and o[v] = e({v},A) as
// byte lanes, kept current by adding/subtracting one precomputed column per
// step through the kernel table.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "biasgraph/kernels.hpp"
#include "biasgraph/oriented_graph.hpp"

namespace biasgraph::scan {

struct alignas(32) LaneRow {
  std::array<std::uint8_t, kernels::kLanes> v{};
};

struct Lanes {
  LaneRow a;  // a[v] = e(A, {v})
  LaneRow o;  // o[v] = e({v}, A)
};

/// Running optimum: larger value wins, equal values go to the smaller mask.
struct Best {
  std::int64_t value = -1;
  std::uint64_t mask = 0;

  bool improved_by(std::int64_t v, std::uint64_t m) const noexcept {
    return v > value || (v == value && m < mask);
  }
  void offer(std::int64_t v, std::uint64_t m) noexcept {
    if (improved_by(v, m)) {
      value = v;
      mask = m;
    }
  }
};

/// Visitor: std::int64_t(std::uint64_t mask, const Lanes&, const
/// kernels::LaneSums&, const Best& running) returning the value of A, or a
/// negative number when A provably cannot improve on `running`.
template <class Visit>
Best gray_scan(const OrientedGraph& d, unsigned threads, Visit visit) {
  const int n = d.order();
  if (n > static_cast<int>(kernels::kLanes)) throw std::invalid_argument("subset scan limited to 32 vertices");
  const auto& k = kernels::active();

  std::vector<LaneRow> col_a(static_cast<std::size_t>(n)), col_o(static_cast<std::size_t>(n));
  for (const Arc& arc : d.arcs()) {
    col_a[static_cast<std::size_t>(arc.tail)].v[static_cast<std::size_t>(arc.head)] = 1;
    col_o[static_cast<std::size_t>(arc.head)].v[static_cast<std::size_t>(arc.tail)] = 1;
  }

  threads = std::max(1U, threads);
  const int prefix_bits = threads == 1 ? 0 : std::min(n, static_cast<int>(std::bit_width(threads * 4U)));
  const int low_bits = n - prefix_bits;
  const std::uint64_t prefixes = std::uint64_t{1} << prefix_bits;
  const std::uint64_t steps = std::uint64_t{1} << low_bits;

  auto worker = [&](unsigned id) {
    Best best;
    Lanes lanes;
    for (std::uint64_t prefix = id; prefix < prefixes; prefix += threads) {
      std::uint64_t mask = prefix << low_bits;
      for (int v = 0; v < n; ++v) {
        lanes.a.v[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(std::popcount(d.in_mask(v) & mask));
        lanes.o.v[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(std::popcount(d.out_mask(v) & mask));
      }
      auto step = [&] {
        const auto sums = k.lane_sums(lanes.a.v.data(), lanes.o.v.data());
        const std::int64_t value = visit(mask, lanes, sums, best);
        if (value >= 0) best.offer(value, mask);
      };
      step();
      for (std::uint64_t i = 1; i < steps; ++i) {
        const int bit = std::countr_zero(i);
        mask ^= std::uint64_t{1} << bit;
        if ((mask >> bit) & 1U) {
          k.lane_add(lanes.a.v.data(), col_a[static_cast<std::size_t>(bit)].v.data());
          k.lane_add(lanes.o.v.data(), col_o[static_cast<std::size_t>(bit)].v.data());
        } else {
          k.lane_sub(lanes.a.v.data(), col_a[static_cast<std::size_t>(bit)].v.data());
          k.lane_sub(lanes.o.v.data(), col_o[static_cast<std::size_t>(bit)].v.data());
        }
        step();
      }
    }
    return best;
  };

  if (threads == 1) return worker(0);
  std::vector<Best> partial(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] { partial[t] = worker(t); });
    }
  }
  Best best;
  for (const Best& b : partial) best.offer(b.value, b.mask);
  return best;
}

}  // namespace biasgraph::scan

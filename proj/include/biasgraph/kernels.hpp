#pragma once

// Bit-counting kernels behind the subset scans and adjacency queries.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant. The active table is chosen once at startup from CPUID; setting
// BIASGRAPH_KERNELS=scalar in the environment forces the reference path.

#include <cstddef>
#include <cstdint>

namespace biasgraph::kernels {

/// Width of a lane block used by the Gray-code subset scan. Scans over
/// graphs with more vertices than this are rejected by the callers.
inline constexpr std::size_t kLanes = 32;

struct LaneSums {
  std::uint32_t sum_a = 0;                  // sum of a[v]
  std::uint32_t sum_a_where_o_zero = 0;     // sum of a[v] over v with o[v] == 0
  std::uint32_t sum_o_where_a_nonzero = 0;  // sum of o[v] over v with a[v] != 0

  friend bool operator==(const LaneSums&, const LaneSums&) = default;
};

struct KernelTable {
  const char* name;

  /// popcount(a & b) over `words` 64-bit words.
  std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t words);

  /// out[i] = popcount(row_i & mask) for `count` rows of `words` words each,
  /// rows stored contiguously.
  void (*masked_popcounts)(const std::uint64_t* rows, std::size_t count,
                           std::size_t words, const std::uint64_t* mask,
                           std::uint32_t* out);

  /// acc[i] += col[i] / acc[i] -= col[i] over kLanes bytes (wrapping).
  void (*lane_add)(std::uint8_t* acc, const std::uint8_t* col);
  void (*lane_sub)(std::uint8_t* acc, const std::uint8_t* col);

  /// Reductions over kLanes byte lanes; lanes beyond the graph must be zero.
  LaneSums (*lane_sums)(const std::uint8_t* a, const std::uint8_t* o);
};

const KernelTable& scalar_kernels();

/// The AVX2 table, or nullptr when it was not compiled in or the CPU lacks
/// AVX2.
const KernelTable* avx2_kernels();

/// The table used by the library.
const KernelTable& active();

}  // namespace biasgraph::kernels

#include "biasgraph/kernels.hpp"

#include <bit>

namespace biasgraph::kernels {
namespace {

std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

void masked_popcounts_scalar(const std::uint64_t* rows, std::size_t count,
                             std::size_t words, const std::uint64_t* mask,
                             std::uint32_t* out) {
  for (std::size_t r = 0; r < count; ++r) {
    out[r] = static_cast<std::uint32_t>(and_popcount_scalar(rows + r * words, mask, words));
  }
}

void lane_add_scalar(std::uint8_t* acc, const std::uint8_t* col) {
  for (std::size_t i = 0; i < kLanes; ++i) acc[i] = static_cast<std::uint8_t>(acc[i] + col[i]);
}

void lane_sub_scalar(std::uint8_t* acc, const std::uint8_t* col) {
  for (std::size_t i = 0; i < kLanes; ++i) acc[i] = static_cast<std::uint8_t>(acc[i] - col[i]);
}

LaneSums lane_sums_scalar(const std::uint8_t* a, const std::uint8_t* o) {
  LaneSums s;
  for (std::size_t i = 0; i < kLanes; ++i) {
    s.sum_a += a[i];
    if (o[i] == 0) s.sum_a_where_o_zero += a[i];
    if (a[i] != 0) s.sum_o_where_a_nonzero += o[i];
  }
  return s;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{
      "scalar",          and_popcount_scalar, masked_popcounts_scalar,
      lane_add_scalar,   lane_sub_scalar,     lane_sums_scalar,
  };
  return table;
}

}  // namespace biasgraph::kernels

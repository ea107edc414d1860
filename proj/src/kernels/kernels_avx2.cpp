// Compiled with -mavx2 -mpopcnt; only reached after a CPUID check.

#include "biasgraph/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace biasgraph::kernels {
namespace {

// Per-64-bit-lane popcount: nibble lookup, then byte sums folded by SAD.
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::uint64_t hsum_epi64(__m256i v) {
  const __m128i s = _mm_add_epi64(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  return static_cast<std::uint64_t>(_mm_cvtsi128_si64(s)) +
         static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_and_si256(va, vb)));
  }
  std::uint64_t total = hsum_epi64(acc);
  for (; i < words; ++i) total += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i] & b[i]));
  return total;
}

void masked_popcounts_avx2(const std::uint64_t* rows, std::size_t count,
                           std::size_t words, const std::uint64_t* mask,
                           std::uint32_t* out) {
  if (words != 1) {
    for (std::size_t r = 0; r < count; ++r) {
      out[r] = static_cast<std::uint32_t>(and_popcount_avx2(rows + r * words, mask, words));
    }
    return;
  }
  const __m256i vm = _mm256_set1_epi64x(static_cast<long long>(mask[0]));
  std::size_t r = 0;
  for (; r + 4 <= count; r += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + r));
    const __m256i c = popcount_epi64(_mm256_and_si256(v, vm));
    // Gather the low dword of each 64-bit lane into the bottom 128 bits.
    const __m256i packed = _mm256_permutevar8x32_epi32(c, _mm256_setr_epi32(0, 2, 4, 6, 1, 3, 5, 7));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + r), _mm256_castsi256_si128(packed));
  }
  for (; r < count; ++r) out[r] = static_cast<std::uint32_t>(_mm_popcnt_u64(rows[r] & mask[0]));
}

void lane_add_avx2(std::uint8_t* acc, const std::uint8_t* col) {
  const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc));
  const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col));
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc), _mm256_add_epi8(a, c));
}

void lane_sub_avx2(std::uint8_t* acc, const std::uint8_t* col) {
  const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc));
  const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col));
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc), _mm256_sub_epi8(a, c));
}

LaneSums lane_sums_avx2(const std::uint8_t* a, const std::uint8_t* o) {
  const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a));
  const __m256i vo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(o));
  const __m256i zero = _mm256_setzero_si256();
  const __m256i o_zero = _mm256_cmpeq_epi8(vo, zero);
  const __m256i a_zero = _mm256_cmpeq_epi8(va, zero);
  LaneSums s;
  s.sum_a = static_cast<std::uint32_t>(hsum_epi64(_mm256_sad_epu8(va, zero)));
  s.sum_a_where_o_zero =
      static_cast<std::uint32_t>(hsum_epi64(_mm256_sad_epu8(_mm256_and_si256(va, o_zero), zero)));
  s.sum_o_where_a_nonzero =
      static_cast<std::uint32_t>(hsum_epi64(_mm256_sad_epu8(_mm256_andnot_si256(a_zero, vo), zero)));
  return s;
}

}  // namespace

namespace detail {
const KernelTable& avx2_table() {
  static const KernelTable table{
      "avx2",        and_popcount_avx2, masked_popcounts_avx2,
      lane_add_avx2, lane_sub_avx2,     lane_sums_avx2,
  };
  return table;
}
}  // namespace detail

}  // namespace biasgraph::kernels

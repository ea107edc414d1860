#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace biasgraph {

/// Subset of {0, ..., n-1} stored as a bit row of ceil(n/64) words.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), words_(word_count(n), 0) {
    if (n < 0) throw std::invalid_argument("negative universe size");
  }
  VertexSet(int n, std::initializer_list<int> members) : VertexSet(n) {
    for (int v : members) insert(v);
  }

  static VertexSet full(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) s.insert(v);
    return s;
  }

  /// Set whose members are the set bits of `mask`; requires n <= 64.
  static VertexSet from_mask(int n, std::uint64_t mask) {
    VertexSet s(n);
    if (n > 64) throw std::invalid_argument("from_mask needs n <= 64");
    if (n < 64) mask &= (std::uint64_t{1} << n) - 1;
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
  }

  static VertexSet from_members(int n, std::span<const int> members) {
    VertexSet s(n);
    for (int v : members) s.insert(v);
    return s;
  }

  static constexpr std::size_t word_count(int n) noexcept {
    return n <= 0 ? 0 : static_cast<std::size_t>((n + 63) / 64);
  }

  int universe() const noexcept { return n_; }

  void insert(int v) {
    check(v);
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(int v) {
    check(v);
    words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  bool contains(int v) const noexcept {
    if (v < 0 || v >= n_) return false;
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }

  int size() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const noexcept { return size() == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
        out.push_back(static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      }
    }
    return out;
  }

  /// Bits as a single word; requires n <= 64.
  std::uint64_t mask() const {
    if (n_ > 64) throw std::logic_error("mask() needs n <= 64");
    return words_.empty() ? 0 : words_[0];
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  VertexSet operator&(const VertexSet& o) const {
    VertexSet r(*this);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex outside set universe");
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace biasgraph

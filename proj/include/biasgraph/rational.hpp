#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace biasgraph {

/// Non-negative exact fraction num/den in lowest terms. Used for the bias
/// ratio and for degree thresholds; comparisons are always cross-multiplied.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Ratio() = default;
  Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (d <= 0 || n < 0) throw std::invalid_argument("ratio must be non-negative with positive denominator");
    const std::int64_t g = std::gcd(n, d);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  /// Accepts "p/q" or a bare integer.
  static Ratio parse(std::string_view text);

  /// True for 0 < num/den < 1.
  bool in_open_unit_interval() const noexcept { return num > 0 && num < den; }

  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend bool operator<(const Ratio& a, const Ratio& b) noexcept {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Ratio& a, const Ratio& b) noexcept { return !(b < a); }
};

inline Ratio Ratio::parse(std::string_view text) {
  auto to_int = [](std::string_view s) -> std::int64_t {
    if (s.empty() || s.size() > 18) throw std::invalid_argument("bad ratio component");
    std::int64_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad ratio component");
      v = v * 10 + (c - '0');
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Ratio(to_int(text), 1);
  return Ratio(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
}

}  // namespace biasgraph

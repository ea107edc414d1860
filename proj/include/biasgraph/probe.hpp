#pragma once

// Searches for small cycle-free oriented graphs with unusually small bias
// (or ow) relative to their density. Reports a frontier only; nothing here
// claims or refutes a conjecture.

#include <cstdint>
#include <string>

#include "biasgraph/report.hpp"

namespace biasgraph {

struct ProbeOptions {
  std::string target;  // ow-c4 | six-cycle-3/2 | even-cycle-k
  int k = 3;           // even-cycle-k: forbidden cycle length 2k, k in 2..4
  int min_n = 1;
  int max_n = 5;
  int instances = 200;  // seeded searches only
  std::uint64_t seed = 0;
  int frontier = 10;
  unsigned threads = 1;
};

/// ow-c4: exhaustive over C4-free graphs with min_n <= n <= max_n (<= 6),
/// ranking by ow n^2 / e^2. Cycle targets: seeded random orientations,
/// polarity orientations and blow-ups with n <= 20 and no directed 2k-cycle,
/// ranking by bias^(k-1) n^2 / e^k (the (k-1)-th power of
/// bias n^(2/(k-1)) / e^(k/(k-1))). Throws std::invalid_argument for an
/// unknown target, SizeLimitError beyond the budget.
Report conjecture_probe(const ProbeOptions& opts);

}  // namespace biasgraph

#pragma once

#include <stdexcept>

namespace biasgraph {

/// An input exceeds a configured brute-force budget.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace biasgraph

#pragma once

// Homomorphism counts of small partially oriented patterns into an oriented
// host, and the exact dense-case inequality check
//   hom(H,D) >= hom(H_bar,D) / 3^s - (1 - 3^-s) (eps/2) n^k,
// s = number of oriented pattern edges, under the hypothesis
//   e(B,A) >= e_bar(A,B)/3 - (eps/3) n^2 for all A, B.

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "biasgraph/errors.hpp"
#include "biasgraph/oriented_graph.hpp"
#include "biasgraph/rational.hpp"
#include "biasgraph/vertex_set.hpp"

namespace biasgraph {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline constexpr int kDefaultPatternLimit = 6;

/// Maps V(H) -> V(D), not necessarily injective, sending each arc of H to
/// an arc of D and each undirected edge to an arc in either direction.
BigInt hom_count(const PartiallyOrientedGraph& h, const OrientedGraph& d, int max_k = kDefaultPatternLimit);

/// hom_count of H with every arc unoriented.
BigInt underlying_hom_count(const PartiallyOrientedGraph& h, const OrientedGraph& d,
                            int max_k = kDefaultPatternLimit);

/// Injective maps only (copies of H); diagnostic.
BigInt injective_hom_count(const PartiallyOrientedGraph& h, const OrientedGraph& d,
                           int max_k = kDefaultPatternLimit);

/// max over (A,B) of e(A,B) - 2 e(B,A), attained with
/// B = {v : e(A,{v}) > 2 e({v},A)}. The hypothesis above holds exactly
/// when this is at most eps n^2.
struct DenseMargin {
  std::int64_t value = 0;
  VertexSet a;
  VertexSet b;
};

/// Exhaustive over A; throws SizeLimitError when n > limit.
DenseMargin dense_margin(const OrientedGraph& d, int limit = 14, unsigned threads = 1);

enum class DenseHypothesis {
  kNone,         // nothing verified
  kCutMargin,    // the (A,B) hypothesis checked exhaustively
  kBiasPremise,  // bias(D) < eps n^2 from a supplied bias value
};

const char* to_string(DenseHypothesis h) noexcept;

struct DenseContext {
  std::optional<std::uint64_t> bias;          // exact bias(D), if known
  std::optional<std::int64_t> margin;         // dense_margin(D).value, if known
  std::optional<BigInt> hom_bar;              // cached hom(H_bar, D)
  int margin_limit = 14;
};

struct DenseBoundRecord {
  int n = 0;
  int k = 0;
  int oriented_edges = 0;  // s
  Ratio epsilon;

  DenseHypothesis hypothesis = DenseHypothesis::kNone;
  bool hypothesis_held = false;
  std::optional<bool> margin_held;        // margin <= eps n^2
  std::optional<bool> bias_premise_held;  // bias < eps n^2

  BigInt hom;
  BigInt hom_bar;
  // Both sides scaled by 2 q 3^s (eps = p/q) so the comparison is integral.
  BigInt lhs_scaled;
  BigInt rhs_scaled;
  BigInt scale;
  bool pass = false;

  // Copy test for fully oriented H: bias < eps n^2, hom(H_bar) >= 3^e eps n^k
  // and n >= 4/eps force an injective copy of H.
  bool corollary_applicable = false;
  bool corollary_premise = false;
  std::optional<bool> corollary_conclusion;

  BigRational lhs() const { return BigRational(lhs_scaled, scale); }
  BigRational rhs() const { return BigRational(rhs_scaled, scale); }
};

/// Evaluates the inequality exactly. The hypothesis is the exhaustive cut
/// margin when n <= margin_limit (or a margin is supplied), otherwise the
/// bias premise when a bias value is supplied.
DenseBoundRecord dense_bound_check(const PartiallyOrientedGraph& h, const OrientedGraph& d, Ratio epsilon,
                                   const DenseContext& ctx = {});

}  // namespace biasgraph

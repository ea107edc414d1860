#pragma once

// Largest gamma-biased subgraph (bias_gamma) and largest one-way subgraph
// (ow), exactly by subset scan or heuristically by local search. Every
// result is a certificate (A, B, e(A,B), e(B,A)) that can be rechecked
// against the graph.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "biasgraph/errors.hpp"
#include "biasgraph/oriented_graph.hpp"
#include "biasgraph/rational.hpp"
#include "biasgraph/vertex_set.hpp"

namespace biasgraph {

enum class CertificateKind { kBias, kOneWay };

struct BiasCertificate {
  CertificateKind kind = CertificateKind::kBias;
  Ratio gamma{1, 2};  // 0/1 for one-way certificates
  VertexSet a;
  VertexSet b;
  std::uint64_t e_ab = 0;
  std::uint64_t e_ba = 0;
  bool exact = false;

  std::uint64_t value() const noexcept { return e_ab; }
};

/// Recounts e(A,B) and e(B,A) on `d` and checks the kind's constraint.
bool validate(const OrientedGraph& d, const BiasCertificate& cert);

nlohmann::json to_json(const BiasCertificate& cert);
BiasCertificate certificate_from_json(const nlohmann::json& j, int n);

inline constexpr int kDefaultOwLimit = 24;
inline constexpr int kDefaultBiasLimit = 20;
/// Hard ceiling of the lane-based subset scan.
inline constexpr int kMaxScanOrder = 32;

struct ScanOptions {
  int limit = -1;        // -1: the operation's default
  unsigned threads = 1;  // workers splitting the subset range
};

/// ow(D) = max over A of e(A, B(A)); ties go to the numerically smallest A.
BiasCertificate exact_ow(const OrientedGraph& d, ScanOptions opts = {});

struct BestB {
  VertexSet b;
  std::uint64_t e_ab = 0;
  std::uint64_t e_ba = 0;
};

/// B maximising e(A,B) subject to den*e(B,A) <= num*e(A,B), solved as a
/// knapsack over per-vertex (gain, cost). Ties: fewer vertices, then the
/// numerically smallest bit pattern. Requires 0 < gamma < 1.
BestB best_b_for_a(const OrientedGraph& d, const VertexSet& a, Ratio gamma);

/// bias_gamma(D) by scanning every A with best_b_for_a; ties go to the
/// numerically smallest A.
BiasCertificate exact_bias(const OrientedGraph& d, Ratio gamma, ScanOptions opts = {});

/// Lower bound on bias_gamma(D) from `iterations` seeded restarts of
/// single-vertex local search; restart r uses seed + r.
BiasCertificate heuristic_bias(const OrientedGraph& d, Ratio gamma, std::uint64_t seed, int iterations);

}  // namespace biasgraph

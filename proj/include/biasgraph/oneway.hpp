#pragma once

// Constructive lower bounds on ow(D): the greedy two-path-avoiding
// algorithm for regular digraphs and the Bernoulli samplers.

#include <cstdint>
#include <vector>

#include "biasgraph/bias.hpp"
#include "biasgraph/oriented_graph.hpp"
#include "biasgraph/vertex_set.hpp"

namespace biasgraph {

/// e2(A): directed two-paths x -> y -> u with both ends x, u in A (the
/// middle vertex is unrestricted).
std::uint64_t path2_count_within(const OrientedGraph& d, const VertexSet& a);

struct GreedyTrace {
  int degree = 0;                  // d of the d-regular input
  int stop_t = 0;                  // floor(n / 2d)
  std::vector<int> order;          // order[t-1] is the vertex that completes A_t
  std::vector<std::uint64_t> e2;   // e2[t-1] = e2(A_t)
  VertexSet a;                     // A_{stop_t}
  VertexSet b;                     // B(A)
  std::uint64_t e_ab = 0;
  std::uint64_t e_ba = 0;
};

/// Grows A_1 = {0} by repeatedly adding the vertex outside A_t with the
/// fewest two-paths to or from A_t (lowest index on ties) and returns
/// A = A_t, B = B(A) at t = floor(n/2d). With `full_trace` the growth runs
/// on to t = n so the trace covers every step. Throws std::invalid_argument
/// for non-regular input or d = 0.
GreedyTrace greedy_oneway_regular(const OrientedGraph& d, bool full_trace = false);

struct SampleResult {
  BiasCertificate best;
  std::uint64_t total_e_ab = 0;  // exact sum over trials
  int trials = 0;
  int best_trial = 0;

  double mean() const noexcept { return trials == 0 ? 0.0 : static_cast<double>(total_e_ab) / trials; }
};

/// Each trial puts every vertex in A independently with probability p
/// (one draw per vertex, in vertex order, seed + trial), sets B = B(A).
SampleResult sampled_oneway(const OrientedGraph& d, double p, std::uint64_t seed, int trials);

struct DegreeBand {
  int index = 0;        // i: degrees in [n/2^i, n/2^(i-1))
  bool in_side = true;  // V- band (in-degree >= out-degree) or V+ band
  int size = 0;
  bool reversed = false;  // sampling ran on reverse(D)
  double p = 0.0;         // 2^i / 3n
};

struct BandedResult {
  SampleResult samples;
  DegreeBand band;

  /// 2|band|/9, the expected-value floor of the band sampler.
  double target() const noexcept { return 2.0 * band.size / 9.0; }
};

/// Picks the largest degree band (ties: smallest i, V- before V+), works
/// on reverse(D) for a V+ band, samples A with p = 2^i/3n and takes
/// B = B(A) restricted to the band. Certificates refer to D itself.
/// Throws std::invalid_argument if D has an isolated vertex.
BandedResult banded_oneway(const OrientedGraph& d, std::uint64_t seed, int trials);

/// Chooses the band used by banded_oneway.
DegreeBand choose_band(const OrientedGraph& d);

struct SqrtBound {
  std::uint64_t value = 0;
  BiasCertificate witness;
};

/// One-way certificate of size at least max(D+, e/4D+) >= sqrt(e)/2: the
/// out-star of a maximum out-degree vertex, or a sampled witness at
/// p = 1/2D+ when the star is smaller than e/4D+.
SqrtBound sqrt_lower_bound(const OrientedGraph& d);

}  // namespace biasgraph

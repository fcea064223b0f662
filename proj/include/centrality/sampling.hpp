#pragma once

#include <cstdint>
#include <vector>

#include "centrality/exact.hpp"
#include "centrality/graph.hpp"

namespace centrality {

struct SampleConfig {
  double fraction = 0.05;   // in (0, 1]
  std::uint64_t seed = 0;
  int trials = 5;
};

// max(1, round(fraction * n)), clamped to n.
std::size_t sample_size(double fraction, std::size_t n);

// Distinct vertices drawn uniformly without replacement (partial
// Fisher-Yates); deterministic for a fixed seed.
std::vector<VertexId> sample_vertices(const Graph& g, const SampleConfig& cfg);

// Runs one Brandes pass per sampled source s and extrapolates:
//   betweenness(v) ~ n/(2k) * sum_s delta_s(v)
//   farness(v)     ~ (n-1)/k' * sum_s d(s,v),  k' = |S \ {v}|
// with closeness = 1/farness. A sampled vertex with k' = 0 (k = 1) keeps the
// farness of its own SSSP, which is exact. With fraction = 1 both estimates
// collapse to the exact values.
BetweennessCloseness approx_betweenness_closeness(const Graph& g,
                                                  const SampleConfig& cfg,
                                                  int workers);

}  // namespace centrality

#pragma once

// Shared single-source machinery for the exact and sampled estimators: one
// BFS plus Brandes dependency accumulation per source, reused scratch.

#include <cstdint>
#include <vector>

#include "centrality/graph.hpp"

namespace centrality::detail {

struct BrandesScratch {
  std::vector<std::int32_t> dist;
  std::vector<double> sigma;   // geodesic counts
  std::vector<double> delta;   // dependency accumulator
  std::vector<VertexId> order; // BFS visit order

  explicit BrandesScratch(std::size_t n)
      : dist(n), sigma(n), delta(n) {
    order.reserve(n);
  }
};

// Adds delta_s(v) into bet_acc[v] (v != s) and d(s,v) into far_acc[v].
// Returns the farness of the source itself.
inline std::int64_t brandes_source(const Graph& g, VertexId s,
                                   BrandesScratch& sc, double* bet_acc,
                                   std::int64_t* far_acc) {
  const VertexId n = g.num_vertices();
  std::fill(sc.dist.begin(), sc.dist.end(), -1);
  std::fill(sc.sigma.begin(), sc.sigma.end(), 0.0);
  std::fill(sc.delta.begin(), sc.delta.end(), 0.0);
  sc.order.clear();

  sc.dist[s] = 0;
  sc.sigma[s] = 1.0;
  sc.order.push_back(s);
  std::int64_t source_farness = 0;
  // sc.order doubles as the BFS queue: vertices are appended in
  // non-decreasing distance order.
  for (std::size_t head = 0; head < sc.order.size(); ++head) {
    const VertexId v = sc.order[head];
    const std::int32_t dv = sc.dist[v];
    source_farness += dv;
    for (VertexId u : g.neighbors(v)) {
      if (sc.dist[u] < 0) {
        sc.dist[u] = dv + 1;
        sc.order.push_back(u);
      }
      if (sc.dist[u] == dv + 1) sc.sigma[u] += sc.sigma[v];
    }
  }
  if (sc.order.size() != n)
    throw GraphError("graph not connected; extract LCC first");

  for (std::size_t i = sc.order.size(); i-- > 1;) {
    const VertexId w = sc.order[i];
    const double coeff = (1.0 + sc.delta[w]) / sc.sigma[w];
    for (VertexId v : g.neighbors(w)) {
      if (sc.dist[v] == sc.dist[w] - 1) sc.delta[v] += sc.sigma[v] * coeff;
    }
    bet_acc[w] += sc.delta[w];
    far_acc[w] += sc.dist[w];
  }
  // the source contributes no dependency to itself and distance 0
  return source_farness;
}

inline constexpr std::size_t kSourceChunk = 64;

}  // namespace centrality::detail

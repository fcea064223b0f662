#include "centrality/exact.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "centrality/parallel.hpp"
#include "brandes_impl.hpp"

namespace centrality {

const char* metric_name(Metric m) {
  switch (m) {
    case Metric::degree: return "degree";
    case Metric::eigenvector: return "eigenvector";
    case Metric::betweenness: return "betweenness";
    case Metric::closeness: return "closeness";
  }
  return "?";
}

Metric metric_from_name(const std::string& name) {
  if (name == "degree") return Metric::degree;
  if (name == "eigenvector") return Metric::eigenvector;
  if (name == "betweenness") return Metric::betweenness;
  if (name == "closeness") return Metric::closeness;
  throw std::invalid_argument("unknown metric: " + name);
}

CentralityScores degree_centrality(const Graph& g) {
  CentralityScores out{Metric::degree, {}};
  out.values.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) out.values[v] = g.degree(v);
  return out;
}

namespace {

struct BrandesPartial {
  std::vector<double> bet;
  std::vector<std::int64_t> far;
};

std::atomic<std::uint64_t> bc_calls{0};

}  // namespace

std::uint64_t betweenness_closeness_call_count() {
  return bc_calls.load(std::memory_order_relaxed);
}

BetweennessCloseness betweenness_closeness(const Graph& g, int workers) {
  bc_calls.fetch_add(1, std::memory_order_relaxed);
  const VertexId n = g.num_vertices();
  BetweennessCloseness out{{Metric::betweenness, {}}, {Metric::closeness, {}}};
  if (n == 0) return out;
  if (n == 1) throw GraphError("closeness undefined for n=1");
  if (!is_connected(g)) throw GraphError("graph not connected; extract LCC first");
  if (workers < 1) workers = 1;

  std::vector<double> bet(n, 0.0);
  std::vector<std::int64_t> far(n, 0);
  chunked_reduce<BrandesPartial>(
      n, detail::kSourceChunk, workers,
      [&](std::size_t b, std::size_t e) {
        BrandesPartial p{std::vector<double>(n, 0.0), std::vector<std::int64_t>(n, 0)};
        detail::BrandesScratch scratch(n);
        for (std::size_t s = b; s < e; ++s) {
          detail::brandes_source(g, static_cast<VertexId>(s), scratch,
                                 p.bet.data(), p.far.data());
        }
        return p;
      },
      [&](BrandesPartial&& p) {
        for (VertexId v = 0; v < n; ++v) {
          bet[v] += p.bet[v];
          far[v] += p.far[v];
        }
      });

  out.betweenness.values.resize(n);
  out.closeness.values.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    // accumulation visits every ordered pair; unordered pairs count once
    out.betweenness.values[v] = bet[v] * 0.5;
    out.closeness.values[v] = 1.0 / static_cast<double>(far[v]);
  }
  return out;
}

EigenvectorResult eigenvector_centrality(const Graph& g, EigenOptions opts) {
  if (opts.tol <= 0) throw std::invalid_argument("tol must be positive");
  if (opts.max_iter < 1) throw std::invalid_argument("max_iter must be positive");
  const VertexId n = g.num_vertices();
  EigenvectorResult res;
  res.scores.metric = Metric::eigenvector;
  if (n == 0) return res;
  if (g.num_edges() == 0) {
    if (n > 1) throw GraphError("graph not connected; extract LCC first");
    res.scores.values.assign(1, 1.0);
    res.converged = true;
    return res;
  }
  if (!is_connected(g)) throw GraphError("graph not connected; extract LCC first");

  std::vector<double> e(n, 1.0 / n), next(n);
  double best_residual = std::numeric_limits<double>::infinity();
  int stall = 0;
  for (int it = 1; it <= opts.max_iter; ++it) {
    double sum = 0.0;
    for (VertexId v = 0; v < n; ++v) {
      double acc = 0.0;
      for (VertexId u : g.neighbors(v)) acc += e[u];
      next[v] = acc;
      sum += acc;
    }
    double residual = 0.0;
    for (VertexId v = 0; v < n; ++v) {
      next[v] /= sum;
      residual += std::abs(next[v] - e[v]);
    }
    e.swap(next);
    res.iterations = it;
    res.residual = residual;
    if (residual < opts.tol) {
      res.converged = true;
      break;
    }
    if (residual < best_residual) {
      best_residual = residual;
      stall = 0;
    } else if (++stall >= 10) {
      // Bipartite graphs alternate between two iterates; their average lies
      // in the convergent subspace, so average and keep iterating.
      res.oscillation = true;
      double avg_sum = 0.0;
      for (VertexId v = 0; v < n; ++v) {
        e[v] = 0.5 * (e[v] + next[v]);
        avg_sum += e[v];
      }
      for (VertexId v = 0; v < n; ++v) e[v] /= avg_sum;
      stall = 0;
      best_residual = std::numeric_limits<double>::infinity();
    }
  }
  res.scores.values = std::move(e);
  return res;
}

}  // namespace centrality

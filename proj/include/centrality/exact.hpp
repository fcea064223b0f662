#pragma once

#include <string>
#include <vector>

#include "centrality/graph.hpp"

namespace centrality {

enum class Metric { degree, eigenvector, betweenness, closeness };

const char* metric_name(Metric m);
Metric metric_from_name(const std::string& name);

struct CentralityScores {
  Metric metric;
  std::vector<double> values;  // length n
};

// values[w] = degree(w).
CentralityScores degree_centrality(const Graph& g);

struct BetweennessCloseness {
  CentralityScores betweenness;
  CentralityScores closeness;
};

// One BFS plus dependency accumulation per source; betweenness counts each
// unordered pair once; closeness(v) = 1 / sum of hop distances to v.
// Sources are distributed over `workers` threads; the reduction order is
// fixed, so the result is bit-identical for any worker count.
BetweennessCloseness betweenness_closeness(const Graph& g, int workers);

// Process-wide invocation counter, for asserting that orchestration code
// computes the exact reference only once.
std::uint64_t betweenness_closeness_call_count();

struct EigenOptions {
  double tol = 1e-12;  // L1 change between iterates
  int max_iter = 1000;
};

struct EigenvectorResult {
  CentralityScores scores;  // positive, sums to 1
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
  // Set when the stall handler fired (residual not decreasing for 10
  // iterations, e.g. on bipartite graphs); the last two iterates are
  // averaged and iteration continues.
  bool oscillation = false;
};

EigenvectorResult eigenvector_centrality(const Graph& g, EigenOptions opts = {});

}  // namespace centrality

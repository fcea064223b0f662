#pragma once

// Independent reference implementations used to freeze expected values. Each
// is written the slow, obvious way so that agreement with the library is
// meaningful: Floyd-Warshall distances, explicit geodesic counting, dense
// eigensolvers, quadratic pair loops.

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "centrality/graph.hpp"
#include "centrality/mlp.hpp"

namespace oracle {

using centrality::Graph;
using centrality::VertexId;

// All-pairs hop distances by Floyd-Warshall; -1 for unreachable.
std::vector<std::vector<int>> all_pairs_dist(const Graph& g);

// sigma[s][t]: number of distinct geodesics between s and t.
std::vector<std::vector<double>> geodesic_counts(
    const Graph& g, const std::vector<std::vector<int>>& dist);

// Betweenness via the pair formula sigma_sv * sigma_vt / sigma_st summed
// over unordered pairs {s,t} not containing v.
std::vector<double> betweenness(const Graph& g);

std::vector<double> closeness(const Graph& g);

// Component labels by flood fill over an adjacency-matrix copy.
std::vector<int> components(const Graph& g);

// 3 * triangles / wedges with triangles counted by a cubic triple loop.
double clustering(const Graph& g);

// Principal eigenvector of the dense adjacency matrix (L1-normalized,
// positive orientation) from a full symmetric eigendecomposition.
std::vector<double> eigenvector(const Graph& g);

// Quadratic pair-count tau-b sharing the library's final expression, so
// results must match bit for bit.
double tau_b_brute(const std::vector<double>& x, const std::vector<double>& y);

// Betweenness on a tree from subtree-size products (independent of any
// geodesic machinery; trees have exactly one path per pair).
std::vector<double> tree_betweenness(const Graph& g);

// G(n, p) with a private generator; retries until connected when asked.
Graph er_graph(std::uint32_t n, double p, std::uint64_t seed);
Graph connected_er_graph(std::uint32_t n, double p, std::uint64_t seed);

// Random tree on n vertices (random attachment).
Graph random_tree(std::uint32_t n, std::uint64_t seed);

// Central finite differences of the 1/2 * mean squared error loss.
Eigen::VectorXd fd_gradient(const centrality::MlpModel& m,
                            const Eigen::MatrixXd& X, const Eigen::VectorXd& t,
                            double h);

}  // namespace oracle

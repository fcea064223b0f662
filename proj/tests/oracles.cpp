#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "centrality/mlp.hpp"
#include "centrality/rng.hpp"

namespace oracle {

std::vector<std::vector<int>> all_pairs_dist(const Graph& g) {
  const std::size_t n = g.num_vertices();
  constexpr int kInf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (VertexId u : g.neighbors(static_cast<VertexId>(v))) d[v][u] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  for (auto& row : d) {
    for (int& x : row) {
      if (x >= kInf) x = -1;
    }
  }
  return d;
}

std::vector<std::vector<double>> geodesic_counts(
    const Graph& g, const std::vector<std::vector<int>>& dist) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return dist[s][a] < dist[s][b];
    });
    sigma[s][s] = 1.0;
    for (std::size_t t : order) {
      if (t == s || dist[s][t] < 0) continue;
      double acc = 0.0;
      for (VertexId u : g.neighbors(static_cast<VertexId>(t))) {
        if (dist[s][u] >= 0 && dist[s][u] + 1 == dist[s][t]) acc += sigma[s][u];
      }
      sigma[s][t] = acc;
    }
  }
  return sigma;
}

std::vector<double> betweenness(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const auto dist = all_pairs_dist(g);
  const auto sigma = geodesic_counts(g, dist);
  std::vector<double> bet(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (dist[s][t] < 0) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        if (dist[s][v] >= 0 && dist[v][t] >= 0 &&
            dist[s][v] + dist[v][t] == dist[s][t]) {
          bet[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
        }
      }
    }
  }
  return bet;
}

std::vector<double> closeness(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const auto dist = all_pairs_dist(g);
  std::vector<double> out(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    long long farness = 0;
    for (std::size_t u = 0; u < n; ++u) {
      if (dist[v][u] < 0) throw std::invalid_argument("closeness oracle: disconnected");
      farness += dist[v][u];
    }
    out[v] = 1.0 / static_cast<double>(farness);
  }
  return out;
}

std::vector<int> components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (comp[root] != -1) continue;
    std::vector<std::size_t> stack{root};
    comp[root] = next;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (VertexId u : g.neighbors(static_cast<VertexId>(v))) {
        if (comp[u] == -1) {
          comp[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return comp;
}

double clustering(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::uint64_t wedges = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint64_t d = g.degree(static_cast<VertexId>(v));
    wedges += d * (d - 1) / 2;
  }
  if (wedges == 0) return 0.0;
  std::uint64_t triangles = 0;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (VertexId c = b + 1; c < n; ++c) {
        if (g.has_edge(a, c) && g.has_edge(b, c)) ++triangles;
      }
    }
  }
  return 3.0 * static_cast<double>(triangles) / static_cast<double>(wedges);
}

std::vector<double> eigenvector(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index v = 0; v < n; ++v) {
    for (VertexId u : g.neighbors(static_cast<VertexId>(v))) a(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  Eigen::VectorXd principal = solver.eigenvectors().col(n - 1);
  if (principal.sum() < 0) principal = -principal;
  principal /= principal.template lpNorm<1>();
  return std::vector<double>(principal.data(), principal.data() + n);
}

double tau_b_brute(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::uint64_t n1 = 0, n2 = 0, n3 = 0, concordant = 0, discordant = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool tx = x[i] == x[j], ty = y[i] == y[j];
      if (tx) ++n1;
      if (ty) ++n2;
      if (tx && ty) ++n3;
      if (tx || ty) continue;
      const bool up = x[i] < x[j];
      if (up == (y[i] < y[j])) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  const std::uint64_t n0 = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (n0 == n1 || n0 == n2) throw std::invalid_argument("tau undefined");
  const std::int64_t numer =
      static_cast<std::int64_t>(concordant) - static_cast<std::int64_t>(discordant);
  return static_cast<double>(numer) /
         std::sqrt(static_cast<double>(n0 - n1) * static_cast<double>(n0 - n2));
}

std::vector<double> tree_betweenness(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (g.num_edges() != n - 1) throw std::invalid_argument("not a tree");
  std::vector<double> bet(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    // sizes of the components of g - v, one per neighbor
    std::vector<char> seen(n, 0);
    seen[v] = 1;
    std::vector<std::uint64_t> sizes;
    for (VertexId start : g.neighbors(static_cast<VertexId>(v))) {
      if (seen[start]) continue;
      std::uint64_t size = 0;
      std::vector<VertexId> stack{start};
      seen[start] = 1;
      while (!stack.empty()) {
        const VertexId w = stack.back();
        stack.pop_back();
        ++size;
        for (VertexId u : g.neighbors(w)) {
          if (!seen[u]) {
            seen[u] = 1;
            stack.push_back(u);
          }
        }
      }
      sizes.push_back(size);
    }
    double pairs = 0.0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      for (std::size_t j = i + 1; j < sizes.size(); ++j) {
        pairs += static_cast<double>(sizes[i]) * static_cast<double>(sizes[j]);
      }
    }
    bet[v] = pairs;
  }
  return bet;
}

Graph er_graph(std::uint32_t n, double p, std::uint64_t seed) {
  centrality::Rng rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.uniform01() < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph connected_er_graph(std::uint32_t n, double p, std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Graph g = er_graph(n, p, centrality::derive_seed(seed, attempt));
    const auto comp = components(g);
    if (std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; }) &&
        g.num_vertices() == n && n > 0) {
      return g;
    }
    if (attempt > 10000) throw std::runtime_error("no connected ER graph found");
  }
}

Graph random_tree(std::uint32_t n, std::uint64_t seed) {
  centrality::Rng rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 1; v < n; ++v) {
    edges.emplace_back(v, static_cast<VertexId>(rng.below(v)));
  }
  return Graph::from_edges(n, std::move(edges));
}

Eigen::VectorXd fd_gradient(const centrality::MlpModel& m,
                            const Eigen::MatrixXd& X, const Eigen::VectorXd& t,
                            double h) {
  const auto loss = [&](const centrality::MlpModel& model) {
    const Eigen::VectorXd y = centrality::forward_batch(model, X);
    return 0.5 * (y - t).squaredNorm() / static_cast<double>(X.cols());
  };
  const Eigen::VectorXd theta = centrality::flatten_parameters(m);
  Eigen::VectorXd grad(theta.size());
  centrality::MlpModel probe = m;
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    Eigen::VectorXd tp = theta;
    tp(i) = theta(i) + h;
    centrality::set_parameters(probe, tp);
    const double up = loss(probe);
    tp(i) = theta(i) - h;
    centrality::set_parameters(probe, tp);
    const double down = loss(probe);
    grad(i) = (up - down) / (2.0 * h);
  }
  return grad;
}

}  // namespace oracle

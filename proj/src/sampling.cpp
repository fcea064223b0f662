#include "centrality/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "centrality/parallel.hpp"
#include "centrality/rng.hpp"
#include "brandes_impl.hpp"

namespace centrality {

std::size_t sample_size(double fraction, std::size_t n) {
  if (!(fraction > 0.0) || fraction > 1.0)
    throw std::invalid_argument("fraction must be in (0, 1]");
  const auto k = static_cast<std::size_t>(
      std::max<long long>(1, std::llround(fraction * static_cast<double>(n))));
  return std::min(k, n);
}

std::vector<VertexId> sample_vertices(const Graph& g, const SampleConfig& cfg) {
  const std::size_t n = g.num_vertices();
  const std::size_t k = sample_size(cfg.fraction, n);
  std::vector<VertexId> pool(n);
  std::iota(pool.begin(), pool.end(), VertexId{0});
  Rng rng(cfg.seed);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

namespace {

struct ApproxPartial {
  std::vector<double> bet;
  std::vector<std::int64_t> far;
  // farness of each source in the chunk, from its own SSSP (exact)
  std::vector<std::pair<VertexId, std::int64_t>> own;
};

}  // namespace

BetweennessCloseness approx_betweenness_closeness(const Graph& g,
                                                  const SampleConfig& cfg,
                                                  int workers) {
  const VertexId n = g.num_vertices();
  BetweennessCloseness out{{Metric::betweenness, {}}, {Metric::closeness, {}}};
  if (n == 0) return out;
  if (n == 1) throw GraphError("closeness undefined for n=1");
  if (!is_connected(g)) throw GraphError("graph not connected; extract LCC first");
  if (workers < 1) workers = 1;

  std::vector<VertexId> sources = sample_vertices(g, cfg);
  // The estimator is a plain sum over sources; fixing ascending order makes
  // the fraction = 1 case accumulate exactly like the exact module.
  std::sort(sources.begin(), sources.end());
  const std::size_t k = sources.size();

  std::vector<char> in_sample(n, 0);
  for (VertexId s : sources) in_sample[s] = 1;

  std::vector<double> bet(n, 0.0);
  std::vector<std::int64_t> far(n, 0);
  std::vector<std::int64_t> own_farness(n, 0);
  chunked_reduce<ApproxPartial>(
      k, detail::kSourceChunk, workers,
      [&](std::size_t b, std::size_t e) {
        ApproxPartial p{std::vector<double>(n, 0.0), std::vector<std::int64_t>(n, 0), {}};
        detail::BrandesScratch scratch(n);
        for (std::size_t i = b; i < e; ++i) {
          const std::int64_t f = detail::brandes_source(g, sources[i], scratch,
                                                        p.bet.data(), p.far.data());
          p.own.emplace_back(sources[i], f);
        }
        return p;
      },
      [&](ApproxPartial&& p) {
        for (VertexId v = 0; v < n; ++v) {
          bet[v] += p.bet[v];
          far[v] += p.far[v];
        }
        for (const auto& [s, f] : p.own) own_farness[s] = f;
      });

  out.betweenness.values.resize(n);
  out.closeness.values.resize(n);
  const double bet_scale = static_cast<double>(n) / (2.0 * static_cast<double>(k));
  for (VertexId v = 0; v < n; ++v) {
    out.betweenness.values[v] = bet[v] * bet_scale;
    const std::size_t k_other = k - (in_sample[v] ? 1 : 0);
    double farness;
    if (k_other == 0) {
      farness = static_cast<double>(own_farness[v]);  // k = 1, v is the sample
    } else {
      farness = static_cast<double>(n - 1) / static_cast<double>(k_other) *
                static_cast<double>(far[v]);
    }
    out.closeness.values[v] = 1.0 / farness;
  }
  return out;
}

}  // namespace centrality

#include "centrality/bter.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "centrality/parallel.hpp"
#include "centrality/rng.hpp"
#include "centrality/util.hpp"

namespace centrality {

const char* family_name(DegreeFamily f) {
  return f == DegreeFamily::heavy_tailed ? "heavy_tailed" : "lognormal";
}

DegreeFamily family_from_name(const std::string& name) {
  if (name == "heavy_tailed" || name == "heavy") return DegreeFamily::heavy_tailed;
  if (name == "lognormal") return DegreeFamily::lognormal;
  throw std::invalid_argument("unknown degree family: " + name);
}

DegreeSequence realize_degree_sequence(std::uint32_t n, const DegreeDistributionSpec& dist) {
  if (n < 2) throw std::invalid_argument("degree sequence needs n >= 2");
  const std::uint32_t k_lo = std::max<std::uint32_t>(1, dist.k_min);
  const std::uint32_t k_hi = std::min(dist.k_max == 0 ? n - 1 : dist.k_max, n - 1);
  if (k_lo > k_hi) throw std::invalid_argument("empty degree range");

  std::vector<double> weights(k_hi - k_lo + 1);
  double total = 0.0;
  for (std::uint32_t k = k_lo; k <= k_hi; ++k) {
    const double kk = static_cast<double>(k);
    const double w = dist.family == DegreeFamily::heavy_tailed
                         ? std::pow(kk, -dist.lambda)
                         : std::exp(-std::log(kk) * std::log(kk) / dist.s);
    if (!std::isfinite(w) || w < 0)
      throw std::invalid_argument("degree weight not finite");
    weights[k - k_lo] = w;
    total += w;
  }
  if (!(total > 0.0) || !std::isfinite(total))
    throw std::invalid_argument("degree weights sum to zero");

  // Largest-remainder rounding of n * w_k / total.
  std::vector<std::uint64_t> counts(weights.size());
  std::vector<std::pair<double, std::uint32_t>> remainders;  // (-remainder, k)
  std::uint64_t assigned = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double exact = static_cast<double>(n) * weights[i] / total;
    counts[i] = static_cast<std::uint64_t>(std::floor(exact));
    assigned += counts[i];
    remainders.emplace_back(-(exact - std::floor(exact)),
                            static_cast<std::uint32_t>(i));
  }
  std::stable_sort(remainders.begin(), remainders.end());
  for (std::size_t i = 0; assigned < n; ++i) {
    ++counts[remainders[i % remainders.size()].second];
    ++assigned;
  }

  DegreeSequence out;
  out.degrees.reserve(n);
  std::uint64_t degree_total = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    const std::uint32_t degree = k_lo + static_cast<std::uint32_t>(i);
    out.counts.emplace_back(degree, counts[i]);
    degree_total += degree * counts[i];
    out.degrees.insert(out.degrees.end(), counts[i], degree);
  }

  if (degree_total % 2 != 0) {
    // bump one vertex of the most-populous class (degree < n-1 so the
    // result stays realizable); ties go to the smaller degree
    std::size_t best = out.counts.size();
    for (std::size_t i = 0; i < out.counts.size(); ++i) {
      if (out.counts[i].first >= n - 1) continue;
      if (best == out.counts.size() || out.counts[i].second > out.counts[best].second)
        best = i;
    }
    if (best == out.counts.size())
      throw std::invalid_argument("cannot fix degree parity");
    const std::uint32_t d = out.counts[best].first;
    // last vertex of the class keeps the per-vertex list sorted
    const auto it = std::upper_bound(out.degrees.begin(), out.degrees.end(), d);
    *(it - 1) = d + 1;
    if (--out.counts[best].second == 0) out.counts.erase(out.counts.begin() + best);
    bool merged = false;
    for (auto& [deg, cnt] : out.counts) {
      if (deg == d + 1) {
        ++cnt;
        merged = true;
        break;
      }
    }
    if (!merged) {
      auto pos = std::lower_bound(
          out.counts.begin(), out.counts.end(), d + 1,
          [](const auto& p, std::uint32_t key) { return p.first < key; });
      out.counts.insert(pos, {d + 1, 1});
    }
  }
  return out;
}

namespace {

std::uint64_t edge_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

Graph generate_bter(const BterConfig& cfg, BterDiagnostics* diag) {
  if (cfg.n < 10) throw std::invalid_argument("BTER needs n >= 10");
  if (cfg.clustering_target < 0.0 || cfg.clustering_target > 1.0)
    throw std::invalid_argument("clustering target out of range");

  const DegreeSequence seq = realize_degree_sequence(cfg.n, cfg.dist);
  Rng rng(cfg.seed);

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::unordered_set<std::uint64_t> present;
  std::vector<std::uint32_t> realized(cfg.n, 0);
  auto add_edge = [&](VertexId u, VertexId v) {
    edges.emplace_back(u, v);
    present.insert(edge_key(u, v));
    ++realized[u];
    ++realized[v];
  };

  // Phase 1+2: pack each degree class (degree >= 2) into blocks of size
  // degree+1 and wire within-block pairs with p = clustering_target.
  VertexId next_vertex = 0;
  BterDiagnostics local;
  for (const auto& [degree, count] : seq.counts) {
    const VertexId first = next_vertex;
    next_vertex += static_cast<VertexId>(count);
    if (degree < 2) continue;
    const std::uint64_t block_size = static_cast<std::uint64_t>(degree) + 1;
    for (std::uint64_t start = 0; start < count; start += block_size) {
      const std::uint64_t end = std::min<std::uint64_t>(count, start + block_size);
      for (std::uint64_t i = start; i < end; ++i) {
        for (std::uint64_t j = i + 1; j < end; ++j) {
          if (rng.uniform01() < cfg.clustering_target) {
            add_edge(first + static_cast<VertexId>(i), first + static_cast<VertexId>(j));
          }
        }
      }
    }
  }
  local.phase2_edges = edges.size();

  // Phase 3: Chung-Lu draws proportional to excess degree, consuming slots.
  std::vector<VertexId> slots;
  for (VertexId v = 0; v < cfg.n; ++v) {
    const std::uint32_t target = seq.degrees[v];
    const std::uint32_t have = realized[v];
    if (target > have) slots.insert(slots.end(), target - have, v);
  }
  const std::uint64_t initial_slots = slots.size();
  const std::uint64_t requested = static_cast<std::uint64_t>(
      std::llround(static_cast<double>(initial_slots) / 2.0));
  const std::uint64_t budget = 10 * requested;
  std::uint64_t attempts = 0;
  std::uint64_t placed = 0;
  while (placed < requested && slots.size() >= 2 && attempts < budget) {
    ++attempts;
    const std::size_t i = static_cast<std::size_t>(rng.below(slots.size()));
    const std::size_t j = static_cast<std::size_t>(rng.below(slots.size()));
    if (i == j) continue;
    const VertexId u = slots[i], v = slots[j];
    if (u == v || present.count(edge_key(u, v))) continue;
    add_edge(u, v);
    ++placed;
    const std::size_t hi = std::max(i, j), lo = std::min(i, j);
    slots[hi] = slots.back();
    slots.pop_back();
    slots[lo] = slots.back();
    slots.pop_back();
  }
  local.phase3_requested = requested;
  local.phase3_placed = placed;
  local.unplaced_excess_fraction =
      initial_slots == 0
          ? 0.0
          : static_cast<double>(slots.size()) / static_cast<double>(initial_slots);
  if (diag) *diag = local;

  return Graph::from_edges(cfg.n, std::move(edges));
}

std::vector<DegreeDistributionSpec> corpus_distribution_configs() {
  std::vector<DegreeDistributionSpec> configs;
  for (double lambda : {1.5, 2.0, 2.5}) {
    DegreeDistributionSpec d;
    d.family = DegreeFamily::heavy_tailed;
    d.lambda = lambda;
    configs.push_back(d);
  }
  for (double s : {5.0, 10.0, 15.0}) {
    DegreeDistributionSpec d;
    d.family = DegreeFamily::lognormal;
    d.s = s;
    configs.push_back(d);
  }
  return configs;
}

const char* const kManifestCsvHeader =
    "index,file,family,parameter,n,clustering_target,seed,realized_m,realized_clustering";

namespace {

std::string metadata_json(const CorpusEntry& e) {
  nlohmann::ordered_json j;
  j["family"] = e.family;
  j["parameter"] = e.parameter;
  j["n"] = e.n;
  j["clustering_target"] = e.clustering_target;
  j["seed"] = e.seed;
  j["realized_m"] = e.realized_m;
  j["realized_clustering"] = e.realized_clustering;
  return j.dump(2) + "\n";
}

std::string manifest_row(const CorpusEntry& e) {
  std::ostringstream out;
  out << e.index << ',' << e.file << ',' << e.family << ','
      << format_double(e.parameter) << ',' << e.n << ','
      << format_double(e.clustering_target) << ',' << e.seed << ','
      << e.realized_m << ',' << format_double(e.realized_clustering);
  return out.str();
}

}  // namespace

std::string corpus_manifest_csv(const CorpusManifest& m) {
  std::string out = kManifestCsvHeader;
  out += '\n';
  for (const auto& e : m.entries) {
    out += manifest_row(e);
    out += '\n';
  }
  return out;
}

CorpusManifest build_training_corpus(const CorpusConfig& cfg) {
  if (cfg.networks_per_cell < 1) throw std::invalid_argument("networks_per_cell < 1");
  std::filesystem::create_directories(cfg.directory);
  const auto configs = corpus_distribution_configs();
  const std::size_t total =
      configs.size() * cfg.sizes.size() * static_cast<std::size_t>(cfg.networks_per_cell);

  CorpusManifest manifest;
  manifest.entries.resize(total);
  chunked_reduce<int>(
      total, 1, cfg.workers,
      [&](std::size_t b, std::size_t) {
        const std::size_t index = b;
        const std::size_t per_config = cfg.sizes.size() * cfg.networks_per_cell;
        const auto& dist = configs[index / per_config];
        const std::uint32_t n = cfg.sizes[(index % per_config) / cfg.networks_per_cell];

        Rng net_rng(derive_seed(cfg.master_seed, index));
        const double target = net_rng.uniform(cfg.clustering_lo, cfg.clustering_hi);

        BterConfig bter;
        bter.n = n;
        bter.dist = dist;
        bter.clustering_target = target;
        bter.seed = net_rng.next_u64();
        const Graph g = generate_bter(bter);

        char name[32];
        std::snprintf(name, sizeof name, "net_%04zu.edges", index);

        CorpusEntry& e = manifest.entries[index];
        e.index = index;
        e.file = name;
        e.family = family_name(dist.family);
        e.parameter = dist.family == DegreeFamily::heavy_tailed ? dist.lambda : dist.s;
        e.n = n;
        e.clustering_target = target;
        e.seed = bter.seed;
        e.realized_m = g.num_edges();
        e.realized_clustering = global_clustering_coefficient(g);

        std::ostringstream edge_text;
        write_edge_list(g, edge_text);
        write_text_file(cfg.directory / name, edge_text.str());
        std::string meta_name(name);
        meta_name.replace(meta_name.size() - 6, 6, ".json");
        write_text_file(cfg.directory / meta_name, metadata_json(e));
        return 0;
      },
      [](int&&) {});

  write_text_file(cfg.directory / "manifest.csv", corpus_manifest_csv(manifest));
  return manifest;
}

CorpusManifest load_corpus_manifest(const std::filesystem::path& manifest_path) {
  const std::string text = read_text_file(manifest_path);
  CorpusManifest manifest;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line == kManifestCsvHeader) continue;
    }
    std::istringstream ls(line);
    CorpusEntry e;
    std::string field;
    auto next = [&](std::string& dst) {
      if (!std::getline(ls, dst, ','))
        throw std::invalid_argument("bad manifest row: " + line);
    };
    next(field); e.index = std::stoull(field);
    next(e.file);
    next(e.family);
    next(field); e.parameter = std::stod(field);
    next(field); e.n = static_cast<std::uint32_t>(std::stoul(field));
    next(field); e.clustering_target = std::stod(field);
    next(field); e.seed = std::stoull(field);
    next(field); e.realized_m = std::stoull(field);
    next(field); e.realized_clustering = std::stod(field);
    manifest.entries.push_back(std::move(e));
  }
  return manifest;
}

}  // namespace centrality

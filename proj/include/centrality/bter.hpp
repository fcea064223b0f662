#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "centrality/graph.hpp"

namespace centrality {

enum class DegreeFamily { heavy_tailed, lognormal };

const char* family_name(DegreeFamily f);
DegreeFamily family_from_name(const std::string& name);

// Weight w_k evaluated at integer degrees k in [k_min, k_max]:
//   heavy_tailed: k^(-lambda)      lognormal: exp(-(ln k)^2 / s)
struct DegreeDistributionSpec {
  DegreeFamily family = DegreeFamily::heavy_tailed;
  double lambda = 2.0;
  double s = 10.0;
  std::uint32_t k_min = 1;
  std::uint32_t k_max = 0;  // 0 means n - 1
};

struct BterConfig {
  std::uint32_t n = 0;
  DegreeDistributionSpec dist;
  double clustering_target = 0.5;
  std::uint64_t seed = 0;
};

struct DegreeSequence {
  // (degree, vertex count), ascending degree, counts > 0.
  std::vector<std::pair<std::uint32_t, std::uint64_t>> counts;
  std::vector<std::uint32_t> degrees;  // per vertex, ascending
};

// Largest-remainder rounding of n * normalized weights; if the total degree
// comes out odd, one vertex of the most-populous class gets degree + 1.
DegreeSequence realize_degree_sequence(std::uint32_t n, const DegreeDistributionSpec& dist);

struct BterDiagnostics {
  std::uint64_t phase2_edges = 0;
  std::uint64_t phase3_requested = 0;
  std::uint64_t phase3_placed = 0;
  double unplaced_excess_fraction = 0.0;
};

// Three phases: pack vertices of target degree d (d >= 2) into affinity
// blocks of size d+1; connect each within-block pair with probability
// clustering_target; then consume per-vertex excess degree with Chung-Lu
// endpoint draws (self-loops/duplicates resampled up to a retry budget).
// Degree-1 vertices get all their edges in phase 3.
Graph generate_bter(const BterConfig& cfg, BterDiagnostics* diag = nullptr);

struct CorpusConfig {
  std::filesystem::path directory;
  std::vector<std::uint32_t> sizes = {100, 200, 300, 400, 500};
  int networks_per_cell = 4;  // per (distribution config, size)
  std::uint64_t master_seed = 1;
  double clustering_lo = 0.3;
  double clustering_hi = 0.7;
  int workers = 1;
};

// The six stock distribution configs: heavy-tailed lambda {1.5, 2, 2.5}
// and lognormal s {5, 10, 15}.
std::vector<DegreeDistributionSpec> corpus_distribution_configs();

struct CorpusEntry {
  std::size_t index = 0;
  std::string file;  // relative to the manifest directory
  std::string family;
  double parameter = 0.0;
  std::uint32_t n = 0;
  double clustering_target = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t realized_m = 0;
  double realized_clustering = 0.0;
};

struct CorpusManifest {
  std::vector<CorpusEntry> entries;
};

extern const char* const kManifestCsvHeader;

// Generates every network (edge list + metadata JSON), writes
// manifest.csv into the directory and returns the manifest. Deterministic
// for a fixed master seed, independent of the worker count.
CorpusManifest build_training_corpus(const CorpusConfig& cfg);

CorpusManifest load_corpus_manifest(const std::filesystem::path& manifest_path);
std::string corpus_manifest_csv(const CorpusManifest& m);

}  // namespace centrality

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "centrality/bter.hpp"
#include "centrality/exact.hpp"

namespace centrality {

// Training rows: per LCC vertex of every corpus network, the degree and
// eigenvector ranks (inputs) and the target-metric rank (label), all taken
// through normalization steps 1-2 (r/n then 2x-1) with the network's own LCC
// size. The z-score step happens at training time, on the training split
// only, and its stats live in the model file.
struct Dataset {
  std::string target_metric;
  std::uint64_t manifest_hash = 0;  // FNV-1a of the manifest file bytes
  std::vector<double> degree_rank;
  std::vector<double> eigenvector_rank;
  std::vector<double> label_rank;
  std::vector<std::uint32_t> network_id;  // manifest index
  std::vector<std::uint64_t> vertex_id;   // original external id
  std::size_t size() const { return label_rank.size(); }
};

Dataset make_dataset(const std::filesystem::path& manifest_path, Metric target,
                     int workers);

// Flat little-endian binary format (see README); byte-identical for
// identical inputs.
void save_dataset(const Dataset& d, const std::filesystem::path& path);
Dataset load_dataset(const std::filesystem::path& path);

}  // namespace centrality

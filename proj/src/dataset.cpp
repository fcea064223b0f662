#include "centrality/dataset.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "centrality/parallel.hpp"
#include "centrality/ranks.hpp"
#include "centrality/util.hpp"

static_assert(std::endian::native == std::endian::little,
              "dataset files assume a little-endian host");

namespace centrality {

namespace {

constexpr char kMagic[8] = {'C', 'N', 'D', 'S', '0', '0', '0', '1'};

struct NetworkRows {
  std::vector<double> degree, eigen, label;
  std::vector<std::uint64_t> vertex;
};

template <class T>
void write_pod(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
void write_vec(std::ostream& out, const std::vector<T>& v) {
  out.write(reinterpret_cast<const char*>(v.data()),
            static_cast<std::streamsize>(v.size() * sizeof(T)));
}

template <class T>
void read_pod(std::istream& in, T& v) {
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  if (!in) throw std::runtime_error("dataset file truncated");
}

template <class T>
void read_vec(std::istream& in, std::vector<T>& v, std::size_t count) {
  v.resize(count);
  in.read(reinterpret_cast<char*>(v.data()),
          static_cast<std::streamsize>(count * sizeof(T)));
  if (!in) throw std::runtime_error("dataset file truncated");
}

}  // namespace

Dataset make_dataset(const std::filesystem::path& manifest_path, Metric target,
                     int workers) {
  if (target != Metric::betweenness && target != Metric::closeness)
    throw std::invalid_argument("dataset target must be betweenness or closeness");
  const CorpusManifest manifest = load_corpus_manifest(manifest_path);
  const auto dir = manifest_path.parent_path();

  Dataset d;
  d.target_metric = metric_name(target);
  d.manifest_hash = fnv1a64(read_text_file(manifest_path));

  std::uint32_t next_id = 0;
  chunked_reduce<NetworkRows>(
      manifest.entries.size(), 1, workers,
      [&](std::size_t b, std::size_t) {
        const CorpusEntry& entry = manifest.entries[b];
        const auto file = dir / entry.file;
        if (!std::filesystem::exists(file))
          throw std::runtime_error("missing corpus file: " + file.string());
        const Graph lcc = largest_connected_component(load_edge_list_file(file.string()));
        const std::size_t n = lcc.num_vertices();

        const auto deg_ranks = rank_transform(degree_centrality(lcc).values);
        const auto eig_ranks =
            rank_transform(eigenvector_centrality(lcc).scores.values);
        const auto bc = betweenness_closeness(lcc, 1);
        const auto& target_scores =
            target == Metric::betweenness ? bc.betweenness : bc.closeness;
        const auto label_ranks = rank_transform(target_scores.values);

        NetworkRows rows;
        rows.degree = rank_scale(deg_ranks, n);
        rows.eigen = rank_scale(eig_ranks, n);
        rows.label = rank_scale(label_ranks, n);
        rows.vertex.resize(n);
        for (VertexId v = 0; v < n; ++v) rows.vertex[v] = lcc.label(v);
        return rows;
      },
      [&](NetworkRows&& rows) {
        const std::uint32_t id = next_id++;
        d.degree_rank.insert(d.degree_rank.end(), rows.degree.begin(), rows.degree.end());
        d.eigenvector_rank.insert(d.eigenvector_rank.end(), rows.eigen.begin(),
                                  rows.eigen.end());
        d.label_rank.insert(d.label_rank.end(), rows.label.begin(), rows.label.end());
        d.network_id.insert(d.network_id.end(), rows.degree.size(), id);
        d.vertex_id.insert(d.vertex_id.end(), rows.vertex.begin(), rows.vertex.end());
      });

  return d;
}

void save_dataset(const Dataset& d, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write dataset: " + path.string());
  out.write(kMagic, sizeof kMagic);
  const std::uint32_t metric_len = static_cast<std::uint32_t>(d.target_metric.size());
  write_pod(out, metric_len);
  out.write(d.target_metric.data(), metric_len);
  write_pod(out, d.manifest_hash);
  const std::uint64_t rows = d.size();
  write_pod(out, rows);
  write_vec(out, d.degree_rank);
  write_vec(out, d.eigenvector_rank);
  write_vec(out, d.label_rank);
  write_vec(out, d.network_id);
  write_vec(out, d.vertex_id);
  if (!out) throw std::runtime_error("dataset write failed: " + path.string());
}

Dataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open dataset: " + path.string());
  char magic[8];
  in.read(magic, sizeof magic);
  if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0)
    throw std::runtime_error("not a dataset file: " + path.string());
  Dataset d;
  std::uint32_t metric_len = 0;
  read_pod(in, metric_len);
  if (metric_len > 64) throw std::runtime_error("corrupt dataset header");
  d.target_metric.resize(metric_len);
  in.read(d.target_metric.data(), metric_len);
  read_pod(in, d.manifest_hash);
  std::uint64_t rows = 0;
  read_pod(in, rows);
  read_vec(in, d.degree_rank, rows);
  read_vec(in, d.eigenvector_rank, rows);
  read_vec(in, d.label_rank, rows);
  read_vec(in, d.network_id, rows);
  read_vec(in, d.vertex_id, rows);
  return d;
}

}  // namespace centrality

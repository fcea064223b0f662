#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace centrality {

using VertexId = std::uint32_t;

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : GraphError {
  ParseError(const std::string& what, std::size_t line_number);
  std::size_t line;
};

struct LoadDiagnostics {
  std::size_t edge_lines = 0;
  std::size_t comment_lines = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
};

// Immutable undirected simple graph in compressed adjacency (CSR) form.
// Neighbor lists are sorted ascending. label(v) recovers the external id the
// vertex had in the input; for generated graphs labels are the identity.
class Graph {
 public:
  Graph() = default;

  // Drops self-loops and duplicate edges (counted in diag when given).
  static Graph from_edges(VertexId n,
                          std::vector<std::pair<VertexId, VertexId>> edges,
                          LoadDiagnostics* diag = nullptr);

  VertexId num_vertices() const { return n_; }
  std::uint64_t num_edges() const { return m_; }

  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v],
            neighbors_.data() + offsets_[v + 1]};
  }

  bool has_edge(VertexId u, VertexId v) const;

  std::uint64_t label(VertexId v) const {
    return labels_.empty() ? v : labels_[v];
  }
  bool has_labels() const { return !labels_.empty(); }
  void set_labels(std::vector<std::uint64_t> labels);

 private:
  VertexId n_ = 0;
  std::uint64_t m_ = 0;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<VertexId> neighbors_;
  std::vector<std::uint64_t> labels_;
};

// Parses "u v" lines; '#' starts a comment line; blank lines are skipped.
// External ids are remapped to [0, n) in first-appearance order.
Graph load_edge_list(std::istream& in, LoadDiagnostics* diag = nullptr);
Graph load_edge_list_file(const std::string& path, LoadDiagnostics* diag = nullptr);

// One "u v" line per edge (external labels), ordered by internal id.
void write_edge_list(const Graph& g, std::ostream& out);

struct ComponentLabeling {
  std::vector<VertexId> component_id;       // per vertex
  std::vector<VertexId> component_sizes;    // per component
  VertexId lcc_index = 0;                   // largest, ties -> smallest index
};

ComponentLabeling connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Subgraph induced on the largest component, vertices re-indexed ascending.
// Labels compose, so original external ids stay recoverable.
Graph largest_connected_component(const Graph& g);

// 3 * triangles / wedges, 0 when the graph has no wedge.
double global_clustering_coefficient(const Graph& g);

// Diagnostic summary (n, m, drop counts, LCC fraction) as a JSON object.
std::string diagnostics_json(const Graph& g, const LoadDiagnostics& diag);

}  // namespace centrality

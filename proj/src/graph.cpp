#include "centrality/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "centrality/util.hpp"

namespace centrality {

namespace {

constexpr std::uint64_t kMaxVertices = 1ULL << 31;

bool parse_u64(std::string_view token, std::uint64_t& out) {
  if (token.empty()) return false;
  auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && p == token.data() + token.size();
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line_number)
    : GraphError("line " + std::to_string(line_number) + ": " + what),
      line(line_number) {}

Graph Graph::from_edges(VertexId n, std::vector<std::pair<VertexId, VertexId>> edges,
                        LoadDiagnostics* diag) {
  std::size_t self_loops = 0;
  std::size_t kept = 0;
  for (auto& e : edges) {
    if (e.first == e.second) {
      ++self_loops;
      continue;
    }
    if (e.first > e.second) std::swap(e.first, e.second);
    edges[kept++] = e;
  }
  edges.resize(kept);
  std::sort(edges.begin(), edges.end());
  const auto last = std::unique(edges.begin(), edges.end());
  const std::size_t duplicates = static_cast<std::size_t>(edges.end() - last);
  edges.erase(last, edges.end());
  if (diag) {
    diag->self_loops_dropped += self_loops;
    diag->duplicates_dropped += duplicates;
  }

  Graph g;
  g.n_ = n;
  g.m_ = edges.size();
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw GraphError("edge endpoint out of range");
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) g.offsets_[i] += g.offsets_[i - 1];
  g.neighbors_.resize(2 * edges.size());
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.neighbors_[cursor[u]++] = v;
    g.neighbors_[cursor[v]++] = u;
  }
  // Edges were sorted by (min, max); the second pass can leave a vertex's
  // list unsorted, so sort each list once here.
  for (VertexId v = 0; v < n; ++v) {
    std::sort(g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::set_labels(std::vector<std::uint64_t> labels) {
  if (!labels.empty() && labels.size() != n_)
    throw GraphError("label vector size mismatch");
  labels_ = std::move(labels);
}

Graph load_edge_list(std::istream& in, LoadDiagnostics* diag) {
  std::unordered_map<std::uint64_t, VertexId> id_map;
  std::vector<std::uint64_t> labels;
  std::vector<std::pair<VertexId, VertexId>> edges;
  LoadDiagnostics local;

  auto intern = [&](std::uint64_t ext, std::size_t line_no) -> VertexId {
    auto [it, inserted] = id_map.try_emplace(ext, static_cast<VertexId>(labels.size()));
    if (inserted) {
      if (labels.size() + 1 > kMaxVertices)
        throw ParseError("too many vertices (n must be < 2^31)", line_no);
      labels.push_back(ext);
    }
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      ++local.comment_lines;
      continue;
    }
    std::istringstream tokens(line);
    std::string a, b, extra;
    if (!(tokens >> a >> b) || (tokens >> extra))
      throw ParseError("expected two integer tokens", line_no);
    std::uint64_t ua = 0, ub = 0;
    if (!parse_u64(a, ua) || !parse_u64(b, ub))
      throw ParseError("malformed vertex id", line_no);
    ++local.edge_lines;
    // two statements: argument evaluation order must not decide which
    // endpoint gets interned first
    const VertexId ia = intern(ua, line_no);
    const VertexId ib = intern(ub, line_no);
    edges.emplace_back(ia, ib);
  }
  if (local.edge_lines == 0) throw GraphError("no edges");

  Graph g = Graph::from_edges(static_cast<VertexId>(labels.size()), std::move(edges), &local);
  g.set_labels(std::move(labels));
  if (diag) *diag = local;
  return g;
}

Graph load_edge_list_file(const std::string& path, LoadDiagnostics* diag) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open edge list: " + path);
  return load_edge_list(in, diag);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (VertexId u : g.neighbors(v)) {
      if (u > v) out << g.label(v) << ' ' << g.label(u) << '\n';
    }
  }
}

ComponentLabeling connected_components(const Graph& g) {
  const VertexId n = g.num_vertices();
  ComponentLabeling out;
  out.component_id.assign(n, static_cast<VertexId>(-1));
  std::vector<VertexId> queue;
  for (VertexId root = 0; root < n; ++root) {
    if (out.component_id[root] != static_cast<VertexId>(-1)) continue;
    const VertexId comp = static_cast<VertexId>(out.component_sizes.size());
    VertexId size = 0;
    queue.clear();
    queue.push_back(root);
    out.component_id[root] = comp;
    while (!queue.empty()) {
      const VertexId v = queue.back();
      queue.pop_back();
      ++size;
      for (VertexId u : g.neighbors(v)) {
        if (out.component_id[u] == static_cast<VertexId>(-1)) {
          out.component_id[u] = comp;
          queue.push_back(u);
        }
      }
    }
    out.component_sizes.push_back(size);
  }
  out.lcc_index = 0;
  for (VertexId c = 1; c < out.component_sizes.size(); ++c) {
    if (out.component_sizes[c] > out.component_sizes[out.lcc_index]) out.lcc_index = c;
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  return connected_components(g).component_sizes.size() == 1;
}

Graph largest_connected_component(const Graph& g) {
  const VertexId n = g.num_vertices();
  if (n == 0) return Graph();
  const ComponentLabeling labeling = connected_components(g);
  if (labeling.component_sizes.size() == 1 && !g.has_labels()) return g;

  std::vector<VertexId> keep;
  keep.reserve(labeling.component_sizes[labeling.lcc_index]);
  for (VertexId v = 0; v < n; ++v) {
    if (labeling.component_id[v] == labeling.lcc_index) keep.push_back(v);
  }
  std::vector<VertexId> remap(n, 0);
  for (std::size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = static_cast<VertexId>(i);

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::uint64_t> labels(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const VertexId v = keep[i];
    labels[i] = g.label(v);
    for (VertexId u : g.neighbors(v)) {
      if (u > v) edges.emplace_back(remap[v], remap[u]);
    }
  }
  Graph lcc = Graph::from_edges(static_cast<VertexId>(keep.size()), std::move(edges));
  lcc.set_labels(std::move(labels));
  return lcc;
}

double global_clustering_coefficient(const Graph& g) {
  const VertexId n = g.num_vertices();
  std::uint64_t wedges = 0;
  for (VertexId v = 0; v < n; ++v) {
    const std::uint64_t d = g.degree(v);
    wedges += d * (d - 1) / 2;
  }
  if (wedges == 0) return 0.0;

  std::uint64_t triangles = 0;
  for (VertexId v = 0; v < n; ++v) {
    const auto nv = g.neighbors(v);
    for (VertexId u : nv) {
      if (u <= v) continue;
      // common neighbors w > u close a triangle v < u < w exactly once
      const auto nu = g.neighbors(u);
      auto iv = std::upper_bound(nv.begin(), nv.end(), u);
      auto iu = std::upper_bound(nu.begin(), nu.end(), u);
      while (iv != nv.end() && iu != nu.end()) {
        if (*iv < *iu) {
          ++iv;
        } else if (*iu < *iv) {
          ++iu;
        } else {
          ++triangles;
          ++iv;
          ++iu;
        }
      }
    }
  }
  return 3.0 * static_cast<double>(triangles) / static_cast<double>(wedges);
}

std::string diagnostics_json(const Graph& g, const LoadDiagnostics& diag) {
  const ComponentLabeling labeling = connected_components(g);
  const double lcc_fraction =
      g.num_vertices() == 0
          ? 0.0
          : static_cast<double>(labeling.component_sizes[labeling.lcc_index]) /
                static_cast<double>(g.num_vertices());
  std::ostringstream out;
  out << "{\"n\": " << g.num_vertices() << ", \"m\": " << g.num_edges()
      << ", \"self_loops_dropped\": " << diag.self_loops_dropped
      << ", \"duplicates_dropped\": " << diag.duplicates_dropped
      << ", \"components\": " << labeling.component_sizes.size()
      << ", \"lcc_fraction\": " << format_double(lcc_fraction) << "}";
  return out.str();
}

}  // namespace centrality

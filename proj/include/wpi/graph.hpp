#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wpi {

/// External vertex label as it appears in input files.
using VertexId = std::uint64_t;

/// Dense internal vertex index, 0..order()-1. Indices follow ascending label
/// order, so any ordering expressed on indices is also an ordering on labels.
using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;  // u < v
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph, immutable after construction.
///
/// Adjacency is stored in CSR form with neighbours sorted ascending; each
/// adjacency slot also records the index of the undirected edge it belongs to.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph over `vertices` (plus every endpoint mentioned in
  /// `edges`). Throws ParseError on self-loops or duplicate edges.
  static Graph from_labels(std::vector<VertexId> vertices,
                           const std::vector<std::pair<VertexId, VertexId>>& edges);

  /// Convenience for dense 0..n-1 labelled graphs.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const noexcept { return static_cast<int>(labels_.size()); }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  /// Edge indices parallel to neighbors(v).
  std::span<const int> incident_edges(Vertex v) const noexcept {
    return {adj_edge_.data() + offsets_[v], adj_edge_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  bool adjacent(Vertex u, Vertex v) const noexcept { return edge_index(u, v).has_value(); }
  std::optional<int> edge_index(Vertex u, Vertex v) const noexcept;

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  VertexId label(Vertex v) const noexcept { return labels_[v]; }
  const std::vector<VertexId>& labels() const noexcept { return labels_; }
  std::optional<Vertex> index_of(VertexId label) const noexcept;

  friend bool operator==(const Graph&, const Graph&) = default;

  /// Edge endpoints by label plus the 1-based source line (0 = none), used
  /// for error reporting.
  struct SourcedEdge {
    VertexId a;
    VertexId b;
    std::size_t line;
  };
  static Graph assemble(std::vector<VertexId> vertices, const std::vector<SourcedEdge>& edges);

 private:
  std::vector<VertexId> labels_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<int> adj_edge_;
  std::vector<Edge> edges_;
};

/// Hop distances from one source, indexed by Vertex.
struct DistanceRow {
  Vertex source = 0;
  std::vector<int> dist;

  int at(Vertex v) const { return dist.at(static_cast<std::size_t>(v)); }
};

/// Parses the edge-list format: one "u v" pair per line, '#' starts a
/// comment, blank lines are skipped.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);

/// Canonical edge-list text: one "u v" line per edge with u < v by label,
/// lines sorted ascending.
std::string serialize_edge_list(const Graph& g);

/// Throws DisconnectedError naming two vertices in different components.
/// A single vertex is connected; the empty graph is not.
void validate_connected(const Graph& g);
bool is_connected(const Graph& g);

/// Breadth-first hop distances. Unreachable vertices get -1.
DistanceRow distances_from(const Graph& g, Vertex source);
/// Same, addressed by external label. Throws std::out_of_range for unknown labels.
DistanceRow distances_from_label(const Graph& g, VertexId source);

/// n_k: number of vertices of degree k.
int count_degree(const Graph& g, int k);

}  // namespace wpi

#include "wpi/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "wpi/error.hpp"

namespace wpi {

Graph Graph::assemble(std::vector<VertexId> vertices, const std::vector<SourcedEdge>& edges) {
  for (const auto& e : edges) {
    vertices.push_back(e.a);
    vertices.push_back(e.b);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  auto index = [&](VertexId id) {
    return static_cast<Vertex>(std::lower_bound(vertices.begin(), vertices.end(), id) - vertices.begin());
  };

  const int n = static_cast<int>(vertices.size());
  std::map<std::pair<Vertex, Vertex>, std::size_t> seen;
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.a == e.b) throw ParseError("self-loop at vertex " + std::to_string(e.a), e.line);
    Vertex u = index(e.a), v = index(e.b);
    if (u > v) std::swap(u, v);
    auto [it, fresh] = seen.emplace(std::pair{u, v}, e.line);
    if (!fresh) {
      std::string first = it->second ? " (first seen on line " + std::to_string(it->second) + ")" : "";
      throw ParseError("duplicate edge " + std::to_string(e.a) + " " + std::to_string(e.b) + first, e.line);
    }
    list.push_back({u, v});
  }
  std::sort(list.begin(), list.end());

  std::vector<std::vector<std::pair<Vertex, int>>> slots(n);
  for (int i = 0; i < static_cast<int>(list.size()); ++i) {
    slots[list[i].u].emplace_back(list[i].v, i);
    slots[list[i].v].emplace_back(list[i].u, i);
  }

  Graph g;
  g.labels_ = std::move(vertices);
  g.edges_ = std::move(list);
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    std::sort(slots[v].begin(), slots[v].end());
    for (auto [w, ei] : slots[v]) {
      g.adj_.push_back(w);
      g.adj_edge_.push_back(ei);
    }
    g.offsets_[v + 1] = static_cast<int>(g.adj_.size());
  }
  return g;
}

Graph Graph::from_labels(std::vector<VertexId> vertices,
                         const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<SourcedEdge> sourced;
  sourced.reserve(edges.size());
  for (auto [a, b] : edges) sourced.push_back({a, b, 0});
  return assemble(std::move(vertices), sourced);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<VertexId> vertices(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vertices[i] = static_cast<VertexId>(i);
  std::vector<SourcedEdge> sourced;
  sourced.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::out_of_range("edge endpoint outside 0..n-1");
    sourced.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b), 0});
  }
  return assemble(std::move(vertices), sourced);
}

std::optional<int> Graph::edge_index(Vertex u, Vertex v) const noexcept {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return std::nullopt;
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return incident_edges(u)[static_cast<std::size_t>(it - nb.begin())];
}

std::optional<Vertex> Graph::index_of(VertexId label) const noexcept {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

namespace {

bool parse_id(std::string_view tok, VertexId& out) {
  if (tok.empty() || tok.front() == '+' || tok.front() == '-') return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Graph::SourcedEdge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    VertexId a = 0, b = 0;
    if (tokens.size() != 2 || !parse_id(tokens[0], a) || !parse_id(tokens[1], b))
      throw ParseError("expected two non-negative integers, got '" + std::string(line) + "'", line_no);
    edges.push_back({a, b, line_no});
    if (end == text.size()) break;
  }
  return Graph::assemble({}, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string serialize_edge_list(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    out += std::to_string(g.label(e.u));
    out += ' ';
    out += std::to_string(g.label(e.v));
    out += '\n';
  }
  return out;
}

DistanceRow distances_from(const Graph& g, Vertex source) {
  if (source < 0 || source >= g.order()) throw std::out_of_range("unknown source vertex");
  DistanceRow row{source, std::vector<int>(static_cast<std::size_t>(g.order()), -1)};
  std::deque<Vertex> queue{source};
  row.dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (row.dist[w] < 0) {
        row.dist[w] = row.dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return row;
}

DistanceRow distances_from_label(const Graph& g, VertexId source) {
  auto v = g.index_of(source);
  if (!v) throw std::out_of_range("unknown source vertex " + std::to_string(source));
  return distances_from(g, *v);
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  auto row = distances_from(g, 0);
  return std::none_of(row.dist.begin(), row.dist.end(), [](int d) { return d < 0; });
}

void validate_connected(const Graph& g) {
  if (g.order() == 0) throw DisconnectedError("graph has no vertices");
  auto row = distances_from(g, 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (row.dist[v] < 0) {
      throw DisconnectedError("graph is disconnected: vertices " + std::to_string(g.label(0)) + " and " +
                              std::to_string(g.label(v)) + " lie in different components");
    }
  }
}

int count_degree(const Graph& g, int k) {
  int n = 0;
  for (Vertex v = 0; v < g.order(); ++v) n += g.degree(v) == k;
  return n;
}

}  // namespace wpi

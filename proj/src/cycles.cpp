#include "wpi/cycles.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace wpi {

namespace {

void check_length(int k) {
  if (k < kMinCycleLength || k > kMaxCycleLength)
    throw std::invalid_argument("cycle length " + std::to_string(k) + " outside 3..6");
}

// Depth-first extension of `path` through vertices larger than the root.
// A cycle is emitted when the path closes back to the root at length k and
// its second vertex is smaller than its last, which leaves exactly one of
// the 2k rotations/reflections.
void extend(const Graph& g, int k, std::vector<Vertex>& path, std::vector<char>& on_path,
            std::vector<Cycle>& out) {
  const Vertex root = path.front();
  const Vertex tail = path.back();
  const int len = static_cast<int>(path.size());
  for (Vertex w : g.neighbors(tail)) {
    if (len == k) {
      if (w == root && path[1] < path[k - 1]) out.push_back(path);
      continue;
    }
    if (w <= root || on_path[w]) continue;
    path.push_back(w);
    on_path[w] = 1;
    extend(g, k, path, on_path, out);
    on_path[w] = 0;
    path.pop_back();
  }
}

std::vector<Cycle> cycles_from_root(const Graph& g, int k, Vertex root, std::vector<char>& on_path) {
  std::vector<Cycle> out;
  std::vector<Vertex> path{root};
  path.reserve(static_cast<std::size_t>(k));
  on_path[root] = 1;
  extend(g, k, path, on_path, out);
  on_path[root] = 0;
  return out;
}

bool has_triangle(const Graph& g) {
  for (const Edge& e : g.edges()) {
    auto a = g.neighbors(e.u), b = g.neighbors(e.v);
    auto i = a.begin(), j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i == *j) return true;
      if (*i < *j) ++i; else ++j;
    }
  }
  return false;
}

int shared_count(const std::vector<int>& a, const std::vector<int>& b) {
  int n = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) {
      ++n;
      ++i;
      ++j;
    } else if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return n;
}

}  // namespace

namespace serial {

std::vector<Cycle> enumerate_cycles(const Graph& g, int k) {
  check_length(k);
  std::vector<Cycle> out;
  std::vector<char> on_path(static_cast<std::size_t>(g.order()), 0);
  for (Vertex root = 0; root < g.order(); ++root) {
    auto part = cycles_from_root(g, k, root, on_path);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace serial

std::vector<Cycle> enumerate_cycles(const Graph& g, int k) {
  check_length(k);
  const int n = g.order();
  std::vector<std::vector<Cycle>> per_root(static_cast<std::size_t>(n));
#pragma omp parallel
  {
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
#pragma omp for schedule(dynamic, 4)
    for (Vertex root = 0; root < n; ++root) per_root[root] = cycles_from_root(g, k, root, on_path);
  }
  std::vector<Cycle> out;
  for (auto& part : per_root) std::move(part.begin(), part.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> cycle_edges(const Graph& g, const Cycle& c) {
  std::vector<int> out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto e = g.edge_index(c[i], c[(i + 1) % c.size()]);
    if (!e) throw std::invalid_argument("vertex sequence is not a cycle of the graph");
    out.push_back(*e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t exiting_edge_count(const Graph& g, const Cycle& c) {
  if (c.size() != 4) throw std::invalid_argument("exiting_edge_count expects a 4-cycle");
  if (has_triangle(g)) {
    throw PreconditionError("graph contains a triangle; the exiting-edge degree formula needs a "
                            "triangle-free graph (see check_preconditions)",
                            check_preconditions(g));
  }
  cycle_edges(g, c);  // validates membership
  std::int64_t sum = 0;
  for (Vertex v : c) sum += g.degree(v);
  return sum - 8;
}

std::int64_t f_of(const Graph& g) {
  if (has_triangle(g)) {
    throw PreconditionError("graph contains a triangle; f(G) is defined for triangle-free graphs only",
                            check_preconditions(g));
  }
  std::int64_t f = 0;
  for (const Cycle& c : enumerate_cycles(g, 4)) {
    for (Vertex v : c) f += g.degree(v);
    f -= 8;
  }
  return f;
}

CycleInventory cycle_inventory(const Graph& g) {
  CycleInventory inv;
  for (int k = kMinCycleLength; k <= kMaxCycleLength; ++k) inv.by_length[k] = enumerate_cycles(g, k);
  if (inv.by_length[3].empty()) {
    std::int64_t f = 0;
    for (const Cycle& c : inv.by_length[4]) {
      for (Vertex v : c) f += g.degree(v);
      f -= 8;
    }
    inv.f_value = f;
  }
  return inv;
}

PreconditionReport check_preconditions(const Graph& g) { return check_preconditions(g, cycle_inventory(g)); }

PreconditionReport check_preconditions(const Graph& g, const CycleInventory& inv) {
  PreconditionReport rep;
  rep.triangle_free = inv.cycles(3).empty();
  if (!rep.triangle_free) rep.triangle = inv.cycles(3).front();

  std::vector<const Cycle*> small;
  std::vector<std::vector<int>> edge_sets;
  for (int k = 4; k <= 6; ++k) {
    for (const Cycle& c : inv.cycles(k)) {
      small.push_back(&c);
      edge_sets.push_back(cycle_edges(g, c));
    }
  }

  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i + 1; j < small.size(); ++j) {
      int shared = shared_count(edge_sets[i], edge_sets[j]);
      auto update = [&](std::optional<SharedEdgePair>& slot) {
        if (!slot || shared > slot->shared_edges) slot = SharedEdgePair{*small[i], *small[j], shared};
      };
      update(rep.max_shared_edges_456);
      if (small[i]->size() == 4 && small[j]->size() == 4) update(rep.max_shared_edges_44);
    }
  }

  rep.passes = rep.triangle_free &&
               (!rep.max_shared_edges_456 || rep.max_shared_edges_456->shared_edges <= 2) &&
               (!rep.max_shared_edges_44 || rep.max_shared_edges_44->shared_edges <= 1);
  return rep;
}

std::string format_cycle(const Graph& g, const Cycle& c) {
  std::string out;
  for (Vertex v : c) {
    if (!out.empty()) out += '-';
    out += std::to_string(g.label(v));
  }
  return out;
}

std::string PreconditionReport::reason(const Graph& g) const {
  if (passes) return {};
  if (!triangle_free) return "graph contains the triangle " + format_cycle(g, *triangle);
  if (max_shared_edges_44 && max_shared_edges_44->shared_edges > 1) {
    return "4-cycles " + format_cycle(g, max_shared_edges_44->first) + " and " +
           format_cycle(g, max_shared_edges_44->second) + " share " +
           std::to_string(max_shared_edges_44->shared_edges) + " edges (at most 1 allowed)";
  }
  const auto& p = *max_shared_edges_456;
  return "cycles " + format_cycle(g, p.first) + " and " + format_cycle(g, p.second) + " share " +
         std::to_string(p.shared_edges) + " edges (at most 2 allowed)";
}

}  // namespace wpi

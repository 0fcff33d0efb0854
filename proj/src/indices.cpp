#include "wpi/indices.hpp"

#include <deque>
#include <vector>

namespace wpi {

std::int64_t first_zagreb(const Graph& g) {
  std::int64_t m1 = 0;
  for (Vertex v = 0; v < g.order(); ++v) m1 += std::int64_t{g.degree(v)} * g.degree(v);
  return m1;
}

std::int64_t second_zagreb(const Graph& g) {
  std::int64_t m2 = 0;
  for (const Edge& e : g.edges()) m2 += std::int64_t{g.degree(e.u)} * g.degree(e.v);
  return m2;
}

std::int64_t path3_count(const Graph& g) {
  std::int64_t p3 = 0;
  for (const Edge& e : g.edges()) p3 += std::int64_t{g.degree(e.u) - 1} * (g.degree(e.v) - 1);
  return p3;
}

namespace {

// Vertices w > source at distance exactly 3. BFS stops expanding at depth 3.
std::int64_t pairs_at_three(const Graph& g, Vertex source, std::vector<int>& dist, std::vector<Vertex>& queue) {
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  std::int64_t count = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    if (dist[u] == 3) {
      count += u > source;
      continue;
    }
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  for (Vertex v : queue) dist[v] = -1;
  return count;
}

}  // namespace

namespace serial {

std::int64_t wiener_polarity_oracle(const Graph& g) {
  validate_connected(g);
  std::int64_t total = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    DistanceRow row = distances_from(g, s);
    for (Vertex v = s + 1; v < g.order(); ++v) total += row.dist[v] == 3;
  }
  return total;
}

}  // namespace serial

std::int64_t wiener_polarity_oracle(const Graph& g) {
  validate_connected(g);
  const int n = g.order();
  std::int64_t total = 0;
#pragma omp parallel reduction(+ : total)
  {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> queue;
    queue.reserve(static_cast<std::size_t>(n));
#pragma omp for schedule(dynamic, 16)
    for (Vertex s = 0; s < n; ++s) total += pairs_at_three(g, s, dist, queue);
  }
  return total;
}

std::int64_t wiener_polarity_formula_unchecked(const Graph& g, const CycleInventory& inv) {
  const std::int64_t f = inv.f_value.value_or(0);
  return second_zagreb(g) - first_zagreb(g) - f - 4 * inv.count(4) - 5 * inv.count(5) - 3 * inv.count(6) +
         g.size();
}

std::int64_t wiener_polarity_formula(const Graph& g) {
  CycleInventory inv = cycle_inventory(g);
  PreconditionReport rep = check_preconditions(g, inv);
  if (!rep.passes) {
    std::string why = rep.reason(g);
    throw PreconditionError("Wiener polarity formula not applicable: " + why, std::move(rep));
  }
  return wiener_polarity_formula_unchecked(g, inv);
}

IndexReport full_report(const Graph& g, Method method) {
  validate_connected(g);
  IndexReport r;
  r.vertex_count = g.order();
  r.m1 = first_zagreb(g);
  r.m2 = second_zagreb(g);
  r.p3 = path3_count(g);
  r.edge_count = g.size();

  CycleInventory inv = cycle_inventory(g);
  r.c3 = inv.count(3);
  r.c4 = inv.count(4);
  r.c5 = inv.count(5);
  r.c6 = inv.count(6);
  r.f = inv.f_value;
  r.preconditions = check_preconditions(g, inv);
  r.preconditions_pass = r.preconditions.passes;

  if (method != Method::oracle) {
    if (r.preconditions_pass) {
      r.wp_formula = wiener_polarity_formula_unchecked(g, inv);
    } else {
      r.wp_formula_diagnostic = r.preconditions.reason(g);
    }
  } else {
    r.wp_formula_diagnostic = "not requested";
  }
  if (method != Method::formula) r.wp_oracle = wiener_polarity_oracle(g);
  return r;
}

}  // namespace wpi

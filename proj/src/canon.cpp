#include "wpi/canon.hpp"

#include <algorithm>
#include <optional>

namespace wpi {

namespace {

using Colouring = std::vector<int>;

int count_colours(const Colouring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Iterated 1-WL refinement. New colours are ranks of (old colour, sorted
// neighbour colours), so the result depends only on isomorphism-invariant data
// and never merges existing cells.
void refine(const Graph& g, Colouring& colour) {
  const int n = g.order();
  std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n));
  int classes = count_colours(colour);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sig[v].first;
      s.clear();
      s.push_back(colour[v]);
      for (Vertex w : g.neighbors(v)) s.push_back(colour[w]);
      std::sort(s.begin() + 1, s.end());
      sig[v].second = v;
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a].first < sig[b].first; });
    Colouring next(static_cast<std::size_t>(n));
    int rank = -1;
    for (int i = 0; i < n; ++i) {
      if (i == 0 || sig[order[i]].first != sig[order[i - 1]].first) ++rank;
      next[order[i]] = rank;
    }
    colour = std::move(next);
    if (rank + 1 == classes) return;
    classes = rank + 1;
  }
}

CanonicalForm certificate(const Graph& g, const Colouring& discrete) {
  CanonicalForm cf{g.order(), {}};
  cf.edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    int a = discrete[e.u], b = discrete[e.v];
    if (a > b) std::swap(a, b);
    cf.edges.push_back({a, b});
  }
  std::sort(cf.edges.begin(), cf.edges.end());
  return cf;
}

void search(const Graph& g, Colouring colour, std::optional<CanonicalForm>& best) {
  refine(g, colour);
  const int n = g.order();
  if (count_colours(colour) == n) {
    CanonicalForm cf = certificate(g, colour);
    if (!best || cf < *best) best = std::move(cf);
    return;
  }
  // First non-singleton cell.
  std::vector<int> size(static_cast<std::size_t>(n), 0);
  for (int c : colour) ++size[c];
  int target = 0;
  while (size[target] < 2) ++target;

  for (Vertex v = 0; v < n; ++v) {
    if (colour[v] != target) continue;
    Colouring child(colour.size());
    for (Vertex w = 0; w < n; ++w) child[w] = 2 * colour[w] + (colour[w] == target && w != v ? 1 : 0);
    search(g, std::move(child), best);
  }
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() == 0) return {};
  std::optional<CanonicalForm> best;
  search(g, Colouring(static_cast<std::size_t>(g.order()), 0), best);
  return *best;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace wpi

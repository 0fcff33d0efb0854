#pragma once

#include <compare>
#include <vector>

#include "wpi/graph.hpp"

namespace wpi {

/// Isomorphism-invariant certificate: two graphs are isomorphic iff their
/// canonical forms compare equal.
struct CanonicalForm {
  int order = 0;
  /// Edges under the canonical relabelling, each (u < v), sorted.
  std::vector<Edge> edges;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Exact canonical labelling by colour refinement plus individualisation
/// backtracking. Explores every leaf of the search tree, so the cost grows
/// with the automorphism group; intended for molecule-sized graphs.
CanonicalForm canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace wpi

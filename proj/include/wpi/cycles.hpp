#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wpi/error.hpp"
#include "wpi/graph.hpp"

namespace wpi {

/// A simple cycle as a vertex sequence in canonical form: the smallest vertex
/// first, then the direction whose second vertex is smaller.
using Cycle = std::vector<Vertex>;

inline constexpr int kMinCycleLength = 3;
inline constexpr int kMaxCycleLength = 6;

/// All 3..6-cycles of a graph together with f(G).
struct CycleInventory {
  /// by_length[k] holds the k-cycles for k in 3..6; lower slots are unused.
  std::array<std::vector<Cycle>, kMaxCycleLength + 1> by_length;
  /// Exiting-edge functional; empty when the graph has a triangle.
  std::optional<std::int64_t> f_value;

  const std::vector<Cycle>& cycles(int k) const { return by_length.at(static_cast<std::size_t>(k)); }
  std::int64_t count(int k) const { return static_cast<std::int64_t>(cycles(k).size()); }
};

/// Worst pair of cycles found by the shared-edge scan; the first such pair in
/// canonical order wins ties.
struct SharedEdgePair {
  Cycle first;
  Cycle second;
  int shared_edges = 0;
};

struct PreconditionReport {
  bool triangle_free = true;
  std::optional<Cycle> triangle;
  /// Pair of distinct cycles from C4 ∪ C5 ∪ C6 sharing the most edges.
  std::optional<SharedEdgePair> max_shared_edges_456;
  /// Pair of distinct 4-cycles sharing the most edges.
  std::optional<SharedEdgePair> max_shared_edges_44;
  bool passes = true;

  /// One-line human explanation of the first failed condition, empty on pass.
  std::string reason(const Graph& g) const;
};

/// Raised when an operation requires a triangle-free graph, or when the
/// closed Wiener polarity formula is requested for a graph that does not
/// satisfy its hypotheses.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, PreconditionReport report)
      : Error(what), report_(std::move(report)) {}
  const PreconditionReport& report() const noexcept { return report_; }

 private:
  PreconditionReport report_;
};

/// Every simple k-cycle, once each, sorted. Throws std::invalid_argument
/// unless 3 <= k <= 6. Roots are processed in parallel.
std::vector<Cycle> enumerate_cycles(const Graph& g, int k);

/// Edge indices of a cycle, sorted ascending.
std::vector<int> cycle_edges(const Graph& g, const Cycle& c);

/// Number of edges sharing exactly one vertex with the 4-cycle `c`, via the
/// degree sum deg(u1)+..+deg(u4)-8. Throws PreconditionError if `g` has a triangle.
std::int64_t exiting_edge_count(const Graph& g, const Cycle& c);

/// f(G): sum of exiting_edge_count over all 4-cycles; 0 without 4-cycles.
/// Throws PreconditionError if `g` has a triangle.
std::int64_t f_of(const Graph& g);

CycleInventory cycle_inventory(const Graph& g);

PreconditionReport check_preconditions(const Graph& g);
PreconditionReport check_preconditions(const Graph& g, const CycleInventory& inv);

std::string format_cycle(const Graph& g, const Cycle& c);

namespace serial {
/// Single-threaded reference for wpi::enumerate_cycles.
std::vector<Cycle> enumerate_cycles(const Graph& g, int k);
}  // namespace serial

}  // namespace wpi

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wpi/cycles.hpp"
#include "wpi/graph.hpp"

namespace wpi {

/// Every quantity that enters the closed Wiener polarity formula, plus the
/// brute-force value it must reproduce.
struct IndexReport {
  int vertex_count = 0;
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
  std::int64_t p3 = 0;
  std::int64_t edge_count = 0;
  std::int64_t c3 = 0;
  std::int64_t c4 = 0;
  std::int64_t c5 = 0;
  std::int64_t c6 = 0;
  /// Absent when the graph has a triangle.
  std::optional<std::int64_t> f;
  /// Present iff preconditions_pass.
  std::optional<std::int64_t> wp_formula;
  /// Why wp_formula is absent.
  std::string wp_formula_diagnostic;
  std::optional<std::int64_t> wp_oracle;
  bool preconditions_pass = false;
  PreconditionReport preconditions;
};

/// Which Wiener polarity routes full_report evaluates.
enum class Method { formula, oracle, both };

/// M1 = sum of squared degrees.
std::int64_t first_zagreb(const Graph& g);
/// M2 = sum over edges of the endpoint-degree product.
std::int64_t second_zagreb(const Graph& g);
/// Number of paths of length three: sum over edges of (deg u - 1)(deg v - 1).
std::int64_t path3_count(const Graph& g);

/// Number of unordered vertex pairs at distance exactly three, by one BFS
/// per source. Sources are processed in parallel. Throws DisconnectedError.
std::int64_t wiener_polarity_oracle(const Graph& g);

/// M2 - M1 - f - 4|C4| - 5|C5| - 3|C6| + |E|.
///
/// Valid only for triangle-free graphs in which distinct 4/5/6-cycles share
/// at most two edges and distinct 4-cycles at most one; otherwise throws
/// PreconditionError carrying the failing report.
std::int64_t wiener_polarity_formula(const Graph& g);

/// The right-hand side without the precondition gate. Test and diagnostic
/// use only: the result is meaningless when the hypotheses fail.
std::int64_t wiener_polarity_formula_unchecked(const Graph& g, const CycleInventory& inv);

/// Assembles an IndexReport. The graph must be connected (throws DisconnectedError).
IndexReport full_report(const Graph& g, Method method = Method::both);

namespace serial {
/// Single-threaded reference for wpi::wiener_polarity_oracle.
std::int64_t wiener_polarity_oracle(const Graph& g);
}  // namespace serial

}  // namespace wpi

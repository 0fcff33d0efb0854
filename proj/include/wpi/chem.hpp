#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wpi/graph.hpp"

namespace wpi {

enum class SystemKind { benzenoid, phenylene };

std::string_view to_string(SystemKind kind);
/// Accepts "benzenoid" or "phenylene"; throws std::invalid_argument otherwise.
SystemKind parse_kind(std::string_view name);

// ---------------------------------------------------------------------------
// Hexagonal lattice
// ---------------------------------------------------------------------------

/// Hexagon cell in axial coordinates.
struct Cell {
  int q = 0;
  int r = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline constexpr std::array<Cell, 6> kDirections{{{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};

inline constexpr int wrap_direction(int d) noexcept { return ((d % 6) + 6) % 6; }
inline constexpr int opposite(int d) noexcept { return wrap_direction(d + 3); }

inline Cell neighbor(Cell c, int direction) noexcept {
  const Cell& d = kDirections[static_cast<std::size_t>(wrap_direction(direction))];
  return {c.q + d.q, c.r + d.r};
}

/// Exact identity of a lattice vertex: the sum of the three cells meeting at
/// it. Corner i of a cell lies between its neighbours in directions i and i+1;
/// the edge shared with the neighbour in direction d joins corners d-1 and d.
inline Cell corner_key(Cell c, int corner) noexcept {
  const Cell& a = kDirections[static_cast<std::size_t>(wrap_direction(corner))];
  const Cell& b = kDirections[static_cast<std::size_t>(wrap_direction(corner + 1))];
  return {3 * c.q + a.q + b.q, 3 * c.r + a.r + b.r};
}

// ---------------------------------------------------------------------------
// Dualist-tree blueprint
// ---------------------------------------------------------------------------

struct HexNode {
  int id = 0;
  std::optional<int> parent;
  /// Lattice direction from the parent to this hexagon, 0..5. Ignored for the root.
  int direction = 0;
};

/// Dualist tree of a catacondensed system with lattice directions on its edges.
struct PolycyclicSpec {
  std::vector<HexNode> nodes;
  SystemKind kind = SystemKind::benzenoid;

  int hexagon_count() const noexcept { return static_cast<int>(nodes.size()); }
  const HexNode& node(int id) const;
  int root() const;
  /// Tree neighbours of `id` with the direction pointing from `id` to each.
  std::vector<std::pair<int, int>> neighbors(int id) const;
  int max_id() const;
};

/// Lines "id parent direction"; parent -1 marks the root. '#' comments and
/// blank lines are skipped. Checks tree shape, tree degree <= 3 and distinct
/// incident directions; lattice placement is checked when building.
PolycyclicSpec parse_spec(std::string_view text, SystemKind kind = SystemKind::benzenoid);
PolycyclicSpec read_spec_file(const std::string& path, SystemKind kind);
/// Same checks as parse_spec for programmatically assembled specs (ParseError, line 0).
void validate_spec(const PolycyclicSpec& spec);
/// Lines "id parent direction" in ascending id order.
std::string serialize_spec(const PolycyclicSpec& spec);

/// Places hexagons on the lattice, root at the origin. Throws
/// UnrealizableError on a cell collision or when two hexagons that are not
/// tree neighbours would share an edge.
std::map<int, Cell> place_on_lattice(const PolycyclicSpec& spec);

// ---------------------------------------------------------------------------
// Built systems
// ---------------------------------------------------------------------------

/// `single` is the lone hexagon of h = 1, counted in none of t, b, a, l.
enum class HexClass { single, terminal, linear, angular, branched };
std::string_view to_string(HexClass c);

struct HexProfile {
  int h = 0;
  int t = 0;
  int b = 0;
  int a = 0;
  int l = 0;
  int s = 0;
  int n_i = 0;
  std::map<int, HexClass> per_hexagon;

  friend bool operator==(const HexProfile&, const HexProfile&) = default;
};

struct BuiltSystem {
  SystemKind kind = SystemKind::benzenoid;
  PolycyclicSpec spec;
  Graph graph;
  HexProfile profile;
  std::map<int, Cell> cells;
  /// Boundary of each hexagon in cyclic order.
  std::map<int, std::array<Vertex, 6>> hexagon_faces;
  /// Phenylene only: [a, b, c, d] in cyclic order, where a-b lies on the
  /// parent hexagon, c-d on the child, and b-c, d-a are the inserted edges.
  std::vector<std::array<Vertex, 4>> quadrilateral_faces;
};

BuiltSystem build_benzenoid(const PolycyclicSpec& spec);
/// Needs at least two hexagons.
BuiltSystem build_phenylene(const PolycyclicSpec& spec);
/// Dispatches on spec.kind.
BuiltSystem build_system(const PolycyclicSpec& spec);

/// Class of every hexagon from the dualist tree, aggregate counts, segment
/// count by walking maximal linear runs, and n_i from the faces.
HexProfile classify_hexagons(const BuiltSystem& sys);
HexProfile classify_spec(const PolycyclicSpec& spec);

/// Segment count by direct traversal of maximal linear chains.
int count_segments(const PolycyclicSpec& spec, const std::map<int, HexClass>& classes);

struct ClosedForm {
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
  std::int64_t wp = 0;
};

/// Closed forms in h, s, b:
///   benzenoid  M1 = 26h-2,  M2 = 33h+s+b-10, Wp = 9h+s+b-7   (h >= 1)
///   phenylene  M1 = 44h-20, M2 = 60h+s+b-37, Wp = 13h+s+b-11 (h >= 2)
ClosedForm closed_form_report(const HexProfile& profile, SystemKind kind);

/// Contracts the two inserted edges of every quadrilateral of a phenylene.
Graph hexagonal_squeeze(const BuiltSystem& phenylene);

/// Edge list in the graph_core format preceded by '#' metadata lines
/// ("# key = value") describing hexagon faces, classes and quadrilaterals.
std::string export_system(const BuiltSystem& sys);

}  // namespace wpi

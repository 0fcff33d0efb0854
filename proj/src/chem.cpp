#include "wpi/chem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wpi/error.hpp"

namespace wpi {

std::string_view to_string(SystemKind kind) {
  return kind == SystemKind::benzenoid ? "benzenoid" : "phenylene";
}

SystemKind parse_kind(std::string_view name) {
  if (name == "benzenoid") return SystemKind::benzenoid;
  if (name == "phenylene") return SystemKind::phenylene;
  throw std::invalid_argument("unknown system kind '" + std::string(name) + "'");
}

std::string_view to_string(HexClass c) {
  switch (c) {
    case HexClass::single: return "single";
    case HexClass::terminal: return "terminal";
    case HexClass::linear: return "linear";
    case HexClass::angular: return "angular";
    case HexClass::branched: return "branched";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// PolycyclicSpec
// ---------------------------------------------------------------------------

const HexNode& PolycyclicSpec::node(int id) const {
  for (const auto& n : nodes)
    if (n.id == id) return n;
  throw std::out_of_range("no hexagon with id " + std::to_string(id));
}

int PolycyclicSpec::root() const {
  for (const auto& n : nodes)
    if (!n.parent) return n.id;
  throw std::logic_error("spec has no root");
}

std::vector<std::pair<int, int>> PolycyclicSpec::neighbors(int id) const {
  std::vector<std::pair<int, int>> out;
  for (const auto& n : nodes) {
    if (n.id == id && n.parent) out.emplace_back(*n.parent, opposite(n.direction));
    if (n.parent && *n.parent == id) out.emplace_back(n.id, wrap_direction(n.direction));
  }
  return out;
}

int PolycyclicSpec::max_id() const {
  int m = -1;
  for (const auto& n : nodes) m = std::max(m, n.id);
  return m;
}

namespace {

// `lines[i]` is the source line of nodes[i], 0 when built in code.
void validate(const PolycyclicSpec& spec, const std::vector<std::size_t>& lines) {
  auto line_of = [&](std::size_t i) { return i < lines.size() ? lines[i] : std::size_t{0}; };
  const auto& nodes = spec.nodes;
  if (nodes.empty()) throw ParseError("spec has no hexagons", 0);

  std::map<int, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id < 0) throw ParseError("negative hexagon id " + std::to_string(nodes[i].id), line_of(i));
    if (!index.emplace(nodes[i].id, i).second)
      throw ParseError("duplicate hexagon id " + std::to_string(nodes[i].id), line_of(i));
  }

  std::optional<std::size_t> root;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const HexNode& n = nodes[i];
    if (!n.parent) {
      if (root) throw ParseError("more than one root hexagon", line_of(i));
      root = i;
      continue;
    }
    if (!index.count(*n.parent))
      throw ParseError("hexagon " + std::to_string(n.id) + " has unknown parent " + std::to_string(*n.parent),
                       line_of(i));
    if (n.direction < 0 || n.direction > 5)
      throw ParseError("direction " + std::to_string(n.direction) + " outside 0..5", line_of(i));
  }
  if (!root) throw ParseError("no root hexagon (parent -1)", 0);

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::size_t cur = i;
    for (std::size_t steps = 0; nodes[cur].parent; ++steps) {
      if (steps > nodes.size())
        throw ParseError("cycle in parent links through hexagon " + std::to_string(nodes[i].id), line_of(i));
      cur = index[*nodes[cur].parent];
    }
  }

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto nb = spec.neighbors(nodes[i].id);
    if (nb.size() > 3)
      throw ParseError("hexagon " + std::to_string(nodes[i].id) + " has " + std::to_string(nb.size()) +
                           " neighbours (at most 3 in a catacondensed system)",
                       line_of(i));
    std::set<int> dirs;
    for (auto [other, d] : nb) {
      if (!dirs.insert(d).second)
        throw ParseError("hexagon " + std::to_string(nodes[i].id) + " has two neighbours in direction " +
                             std::to_string(d),
                         line_of(i));
    }
  }
}

bool parse_int(std::string_view tok, long long& out) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace

void validate_spec(const PolycyclicSpec& spec) { validate(spec, {}); }

PolycyclicSpec parse_spec(std::string_view text, SystemKind kind) {
  PolycyclicSpec spec;
  spec.kind = kind;
  std::vector<std::size_t> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream fields{std::string(line)};
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    long long id = 0, parent = 0, dir = 0;
    if (tok.size() != 3 || !parse_int(tok[0], id) || !parse_int(tok[1], parent) || !parse_int(tok[2], dir))
      throw ParseError("expected 'id parent direction', got '" + std::string(line) + "'", line_no);
    if (id < 0 || id > 1'000'000'000) throw ParseError("hexagon id out of range", line_no);
    if (parent < -1 || parent > 1'000'000'000) throw ParseError("parent id out of range", line_no);
    HexNode n;
    n.id = static_cast<int>(id);
    if (parent >= 0) n.parent = static_cast<int>(parent);
    if (parent >= 0 && (dir < 0 || dir > 5))
      throw ParseError("direction " + std::to_string(dir) + " outside 0..5", line_no);
    n.direction = parent >= 0 ? static_cast<int>(dir) : 0;
    spec.nodes.push_back(n);
    lines.push_back(line_no);
  }
  validate(spec, lines);
  return spec;
}

PolycyclicSpec read_spec_file(const std::string& path, SystemKind kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str(), kind);
}

std::string serialize_spec(const PolycyclicSpec& spec) {
  auto nodes = spec.nodes;
  std::sort(nodes.begin(), nodes.end(), [](const HexNode& a, const HexNode& b) { return a.id < b.id; });
  std::string out;
  for (const auto& n : nodes) {
    out += std::to_string(n.id) + ' ' + std::to_string(n.parent ? *n.parent : -1) + ' ' +
           std::to_string(n.parent ? n.direction : 0) + '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lattice placement
// ---------------------------------------------------------------------------

std::map<int, Cell> place_on_lattice(const PolycyclicSpec& spec) {
  validate_spec(spec);
  std::map<int, Cell> cells;
  std::map<Cell, int> occupant;
  std::vector<int> queue{spec.root()};
  cells[spec.root()] = Cell{0, 0};
  occupant[Cell{0, 0}] = spec.root();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int id = queue[head];
    for (const auto& n : spec.nodes) {
      if (!n.parent || *n.parent != id) continue;
      Cell c = neighbor(cells[id], n.direction);
      if (auto it = occupant.find(c); it != occupant.end()) {
        throw UnrealizableError("spec not realizable as catacondensed system: hexagons " +
                                    std::to_string(it->second) + " and " + std::to_string(n.id) +
                                    " occupy the same lattice cell",
                                {std::min(it->second, n.id), std::max(it->second, n.id)});
      }
      cells[n.id] = c;
      occupant[c] = n.id;
      queue.push_back(n.id);
    }
  }

  // Every lattice adjacency must be a tree edge.
  std::set<std::pair<int, int>> tree;
  for (const auto& n : spec.nodes)
    if (n.parent) tree.emplace(std::min(n.id, *n.parent), std::max(n.id, *n.parent));
  for (const auto& [id, cell] : cells) {
    for (int d = 0; d < 6; ++d) {
      auto it = occupant.find(neighbor(cell, d));
      if (it == occupant.end() || it->second < id) continue;
      if (!tree.count({id, it->second})) {
        throw UnrealizableError("spec not realizable as catacondensed system: hexagons " + std::to_string(id) +
                                    " and " + std::to_string(it->second) +
                                    " share an edge but are not adjacent in the dualist tree",
                                {id, it->second});
      }
    }
  }
  return cells;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

int count_segments(const PolycyclicSpec& spec, const std::map<int, HexClass>& classes) {
  if (spec.hexagon_count() == 1) return 1;
  auto is_linear = [&](int id) { return classes.at(id) == HexClass::linear; };
  int segments = 0;
  for (const auto& [id, cls] : classes) {
    if (cls == HexClass::linear) continue;
    for (auto [next, dir] : spec.neighbors(id)) {
      int prev = id, cur = next;
      while (is_linear(cur)) {
        int step = -1;
        for (auto [w, d] : spec.neighbors(cur))
          if (w != prev) step = w;
        prev = cur;
        cur = step;
      }
      // Each maximal chain is met from both of its ends.
      if (id < cur) ++segments;
    }
  }
  return segments;
}

HexProfile classify_spec(const PolycyclicSpec& spec) {
  validate_spec(spec);
  HexProfile p;
  p.h = spec.hexagon_count();
  for (const auto& n : spec.nodes) {
    auto nb = spec.neighbors(n.id);
    HexClass c = HexClass::single;
    switch (nb.size()) {
      case 0: c = HexClass::single; break;
      case 1: c = HexClass::terminal; ++p.t; break;
      case 2:
        if (nb[0].second == opposite(nb[1].second)) {
          c = HexClass::linear;
          ++p.l;
        } else {
          c = HexClass::angular;
          ++p.a;
        }
        break;
      default: c = HexClass::branched; ++p.b; break;
    }
    p.per_hexagon[n.id] = c;
  }
  p.s = count_segments(spec, p.per_hexagon);
  return p;
}

HexProfile classify_hexagons(const BuiltSystem& sys) {
  HexProfile p = classify_spec(sys.spec);
  std::vector<int> faces_at(static_cast<std::size_t>(sys.graph.order()), 0);
  for (const auto& [id, face] : sys.hexagon_faces)
    for (Vertex v : face) ++faces_at[v];
  p.n_i = static_cast<int>(std::count_if(faces_at.begin(), faces_at.end(), [](int k) { return k >= 3; }));
  return p;
}

ClosedForm closed_form_report(const HexProfile& p, SystemKind kind) {
  const std::int64_t h = p.h, s = p.s, b = p.b;
  if (kind == SystemKind::benzenoid) {
    if (h < 1) throw std::invalid_argument("benzenoid closed forms need h >= 1");
    return {26 * h - 2, 33 * h + s + b - 10, 9 * h + s + b - 7};
  }
  if (h < 2) throw std::invalid_argument("phenylene closed forms need h >= 2");
  return {44 * h - 20, 60 * h + s + b - 37, 13 * h + s + b - 11};
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

namespace {

std::vector<int> ids_ascending(const PolycyclicSpec& spec) {
  std::vector<int> ids;
  for (const auto& n : spec.nodes) ids.push_back(n.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

BuiltSystem build_benzenoid(const PolycyclicSpec& spec) {
  BuiltSystem sys;
  sys.kind = SystemKind::benzenoid;
  sys.spec = spec;
  sys.spec.kind = SystemKind::benzenoid;
  sys.cells = place_on_lattice(spec);

  std::map<Cell, Vertex> vertex_of;
  std::set<std::pair<int, int>> edges;
  for (int id : ids_ascending(spec)) {
    std::array<Vertex, 6> face{};
    for (int i = 0; i < 6; ++i) {
      auto [it, fresh] = vertex_of.emplace(corner_key(sys.cells[id], i), static_cast<Vertex>(vertex_of.size()));
      face[i] = it->second;
    }
    for (int i = 0; i < 6; ++i) {
      auto [u, v] = std::minmax(face[i], face[(i + 1) % 6]);
      edges.emplace(u, v);
    }
    sys.hexagon_faces[id] = face;
  }
  sys.graph = Graph::from_edges(static_cast<int>(vertex_of.size()), {edges.begin(), edges.end()});
  sys.profile = classify_hexagons(sys);
  return sys;
}

BuiltSystem build_phenylene(const PolycyclicSpec& spec) {
  if (spec.hexagon_count() < 2) throw std::invalid_argument("a phenylene needs at least two hexagons");
  BuiltSystem sys;
  sys.kind = SystemKind::phenylene;
  sys.spec = spec;
  sys.spec.kind = SystemKind::phenylene;
  sys.cells = place_on_lattice(spec);

  // Each hexagon owns six fresh vertices: hexagon k (ascending id) gets 6k..6k+5.
  const auto ids = ids_ascending(spec);
  std::map<int, int> rank;
  for (std::size_t k = 0; k < ids.size(); ++k) rank[ids[k]] = static_cast<int>(k);
  auto vertex = [&](int id, int corner) { return static_cast<Vertex>(6 * rank[id] + wrap_direction(corner)); };

  std::vector<std::pair<int, int>> edges;
  for (int id : ids) {
    std::array<Vertex, 6> face{};
    for (int i = 0; i < 6; ++i) face[i] = vertex(id, i);
    for (int i = 0; i < 6; ++i) edges.emplace_back(face[i], face[(i + 1) % 6]);
    sys.hexagon_faces[id] = face;
  }

  // One quadrilateral per tree edge, ordered by (parent, child) id.
  std::vector<const HexNode*> children;
  for (const auto& n : spec.nodes)
    if (n.parent) children.push_back(&n);
  std::sort(children.begin(), children.end(), [](const HexNode* x, const HexNode* y) {
    return std::pair{std::min(*x->parent, x->id), std::max(*x->parent, x->id)} <
           std::pair{std::min(*y->parent, y->id), std::max(*y->parent, y->id)};
  });
  for (const HexNode* n : children) {
    const int parent = *n->parent, d = n->direction;
    const Cell pc = sys.cells[parent], cc = sys.cells[n->id];
    auto matching_corner = [&](Cell key) {
      for (int j = 0; j < 6; ++j)
        if (corner_key(cc, j) == key) return j;
      throw std::logic_error("adjacent hexagons without a shared corner");
    };
    const int pa = d - 1, pb = d;
    const int cb = matching_corner(corner_key(pc, pb)), ca = matching_corner(corner_key(pc, pa));
    std::array<Vertex, 4> quad{vertex(parent, pa), vertex(parent, pb), vertex(n->id, cb), vertex(n->id, ca)};
    edges.emplace_back(quad[1], quad[2]);
    edges.emplace_back(quad[3], quad[0]);
    sys.quadrilateral_faces.push_back(quad);
  }

  sys.graph = Graph::from_edges(6 * static_cast<int>(ids.size()), edges);
  sys.profile = classify_hexagons(sys);
  return sys;
}

BuiltSystem build_system(const PolycyclicSpec& spec) {
  return spec.kind == SystemKind::benzenoid ? build_benzenoid(spec) : build_phenylene(spec);
}

Graph hexagonal_squeeze(const BuiltSystem& sys) {
  if (sys.kind != SystemKind::phenylene) throw std::invalid_argument("hexagonal squeeze needs a phenylene");
  std::vector<Vertex> rep(static_cast<std::size_t>(sys.graph.order()));
  for (Vertex v = 0; v < sys.graph.order(); ++v) rep[v] = v;
  auto find = [&](Vertex v) {
    while (rep[v] != v) v = rep[v] = rep[rep[v]];
    return v;
  };
  for (const auto& q : sys.quadrilateral_faces) {
    rep[find(q[2])] = find(q[1]);
    rep[find(q[3])] = find(q[0]);
  }
  std::map<Vertex, int> compact;
  for (Vertex v = 0; v < sys.graph.order(); ++v) compact.emplace(find(v), 0);
  int next = 0;
  for (auto& [v, id] : compact) id = next++;
  std::set<std::pair<int, int>> edges;
  for (const Edge& e : sys.graph.edges()) {
    int a = compact[find(e.u)], b = compact[find(e.v)];
    if (a != b) edges.insert(std::minmax(a, b));
  }
  return Graph::from_edges(next, {edges.begin(), edges.end()});
}

std::string export_system(const BuiltSystem& sys) {
  std::ostringstream out;
  out << "# kind = " << to_string(sys.kind) << '\n';
  out << "# h = " << sys.profile.h << '\n';
  for (const auto& [id, face] : sys.hexagon_faces) {
    const Cell c = sys.cells.at(id);
    out << "# hexagon." << id << " = " << to_string(sys.profile.per_hexagon.at(id)) << " cell " << c.q << ' '
        << c.r << " face";
    for (Vertex v : face) out << ' ' << sys.graph.label(v);
    out << '\n';
  }
  for (std::size_t i = 0; i < sys.quadrilateral_faces.size(); ++i) {
    out << "# quadrilateral." << i << " =";
    for (Vertex v : sys.quadrilateral_faces[i]) out << ' ' << sys.graph.label(v);
    out << '\n';
  }
  out << serialize_edge_list(sys.graph);
  return out.str();
}

}  // namespace wpi

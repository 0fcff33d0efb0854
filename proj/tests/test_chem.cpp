#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wpi/canon.hpp"
#include "wpi/chem.hpp"
#include "wpi/error.hpp"
#include "wpi/extremal.hpp"
#include "wpi/indices.hpp"

using namespace wpi;

namespace {

const char* kReference = "0 -1 0\n1 0 0\n2 1 1\n3 2 0\n4 2 2\n5 4 2\n";

// Angular vs linear straight from the graph: a degree-2 hexagon of the tree
// keeps two degree-2 vertices (benzenoid), adjacent iff the hexagon is angular.
HexClass class_from_graph(const BuiltSystem& sys, int id) {
  const auto& face = sys.hexagon_faces.at(id);
  std::vector<Vertex> deg2;
  for (Vertex v : face)
    if (sys.graph.degree(v) == 2) deg2.push_back(v);
  switch (deg2.size()) {
    case 6: return HexClass::single;
    case 4: return HexClass::terminal;
    case 0: return HexClass::branched;
    default: return sys.graph.adjacent(deg2[0], deg2[1]) ? HexClass::angular : HexClass::linear;
  }
}

// Benzenoid counts by the profile's definition, straight from the graph.
void check_structure(const BuiltSystem& sys) {
  const int h = sys.profile.h;
  const auto& g = sys.graph;
  if (sys.kind == SystemKind::benzenoid) {
    CHECK(g.order() == 4 * h + 2);
    CHECK(g.size() == 5 * h + 1);
    CHECK(count_degree(g, 3) == 2 * h - 2);
    CHECK(count_degree(g, 2) == 2 * h + 4);
  } else {
    CHECK(g.order() == 6 * h);
    CHECK(g.size() == 8 * h - 2);
    CHECK(count_degree(g, 3) == 4 * h - 4);
    CHECK(count_degree(g, 2) == 2 * h + 4);
    CHECK(sys.quadrilateral_faces.size() == static_cast<std::size_t>(h - 1));
  }
  CHECK(sys.profile.n_i == 0);
  CHECK(is_connected(g));
}

}  // namespace

TEST_CASE("kind names") {
  CHECK(parse_kind("benzenoid") == SystemKind::benzenoid);
  CHECK(parse_kind("phenylene") == SystemKind::phenylene);
  CHECK_THROWS_AS(parse_kind("coronoid"), std::invalid_argument);
  CHECK(to_string(SystemKind::phenylene) == "phenylene");
}

TEST_CASE("lattice geometry") {
  for (int d = 0; d < 6; ++d) {
    Cell sum{kDirections[wrap_direction(d - 1)].q + kDirections[wrap_direction(d + 1)].q,
             kDirections[wrap_direction(d - 1)].r + kDirections[wrap_direction(d + 1)].r};
    CHECK(sum == kDirections[d]);
    // The edge towards the neighbour in direction d is shared by both cells.
    Cell c{2, -1};
    Cell n = neighbor(c, d);
    CHECK(corner_key(c, d - 1) == corner_key(n, opposite(d)));
    CHECK(corner_key(c, d) == corner_key(n, opposite(d) - 1));
  }
  std::set<Cell> corners;
  for (int i = 0; i < 6; ++i) corners.insert(corner_key({0, 0}, i));
  CHECK(corners.size() == 6);
}

TEST_CASE("parse_spec") {
  auto spec = parse_spec(kReference);
  CHECK(spec.hexagon_count() == 6);
  CHECK(spec.root() == 0);
  CHECK(spec.neighbors(2).size() == 3);
  CHECK(serialize_spec(parse_spec(serialize_spec(spec))) == serialize_spec(spec));
  CHECK(parse_spec("# comment\n\n0 -1 0   # root\n").hexagon_count() == 1);

  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_spec(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 999;
  };
  CHECK(line_of("0 -1 0\n1 0 7") == 2);            // bad direction
  CHECK(line_of("0 -1 0\n0 0 1") == 2);            // duplicate id
  CHECK(line_of("0 -1 0\n1 -1 0") == 2);           // two roots
  CHECK(line_of("0 -1 0\n1 5 0") == 2);            // unknown parent
  CHECK(line_of("0 -1 0\n1 0 0\n2 0 0") != 999);   // same direction twice
  CHECK(line_of("0 -1 0\n1 0 0 x") == 2);          // junk
  CHECK(line_of("0 -1 0\n1 0 0\n2 0 2\n3 0 4\n4 0 5") != 999);  // degree 4
  CHECK_THROWS_AS(parse_spec("1 2 0\n2 1 0"), ParseError);      // no root / cycle
  CHECK_THROWS_AS(parse_spec(""), ParseError);
  // Child placed back onto its parent's parent: direction 3 from 1 is hexagon 0.
  CHECK(line_of("0 -1 0\n1 0 0\n2 1 3") != 999);
}

TEST_CASE("lattice placement and unrealizable specs") {
  auto cells = place_on_lattice(parse_spec(kReference));
  CHECK(cells.at(0) == Cell{0, 0});
  CHECK(cells.at(1) == Cell{1, 0});

  // Six hexagons turning the same way close a ring around the origin.
  auto helicene = parse_spec("0 -1 0\n1 0 0\n2 1 1\n3 2 2\n4 3 3\n5 4 4\n");
  try {
    build_benzenoid(helicene);
    FAIL("expected UnrealizableError");
  } catch (const UnrealizableError& e) {
    CHECK(e.hexagons() == std::vector<int>{0, 5});
  }
  // Collision onto an occupied cell.
  CHECK_THROWS_AS(place_on_lattice(parse_spec("0 -1 0\n1 0 0\n2 1 1\n3 2 2\n4 3 3\n5 4 4\n6 5 5\n")),
                  UnrealizableError);
  CHECK_THROWS_AS(build_phenylene(parse_spec("0 -1 0", SystemKind::phenylene)), std::invalid_argument);
}

TEST_CASE("reference system: profile and values") {
  auto spec = parse_spec(kReference);
  auto benz = build_benzenoid(spec);
  CHECK(benz.graph.order() == 26);
  CHECK(benz.graph.size() == 31);
  HexProfile p = benz.profile;
  CHECK(p.h == 6);
  CHECK(p.t == 3);
  CHECK(p.b == 1);
  CHECK(p.a == 1);
  CHECK(p.l == 1);
  CHECK(p.s == 4);
  CHECK(wiener_polarity_oracle(benz.graph) == 52);
  CHECK(closed_form_report(p, SystemKind::benzenoid).wp == 52);

  spec.kind = SystemKind::phenylene;
  auto phen = build_phenylene(spec);
  CHECK(phen.graph.order() == 36);
  CHECK(phen.graph.size() == 46);
  CHECK(wiener_polarity_oracle(phen.graph) == 72);
  CHECK(wiener_polarity_formula(phen.graph) == 72);
  CHECK(closed_form_report(phen.profile, SystemKind::phenylene).wp == 72);
}

TEST_CASE("linear chains and closed forms") {
  for (int h = 1; h <= 8; ++h) {
    auto b = linear_chain(h, SystemKind::benzenoid);
    check_structure(b);
    CHECK(b.profile.s == 1);  // benzene counts as one segment
    if (h >= 2) {
      CHECK(wiener_polarity_oracle(b.graph) == 9 * h - 6);
      auto p = linear_chain(h, SystemKind::phenylene);
      check_structure(p);
      CHECK(wiener_polarity_oracle(p.graph) == 13 * h - 10);
    }
  }
  // Benzene: M1 = 24, M2 = 24, Wp = 3.
  auto benzene = linear_chain(1, SystemKind::benzenoid);
  CHECK(benzene.profile.per_hexagon.at(0) == HexClass::single);
  auto cf = closed_form_report(benzene.profile, SystemKind::benzenoid);
  CHECK(cf.m1 == 24);
  CHECK(cf.wp == 3);
  CHECK_THROWS_AS(closed_form_report(benzene.profile, SystemKind::phenylene), std::invalid_argument);
  CHECK_THROWS_AS(linear_chain(1, SystemKind::phenylene), std::invalid_argument);
}

TEST_CASE("every enumerated system: structure, classes, closed forms, squeeze") {
  for (int h = 2; h <= 6; ++h) {
    for (SystemKind kind : {SystemKind::benzenoid, SystemKind::phenylene}) {
      for (const BuiltSystem& sys : enumerate_catafused(h, kind)) {
        INFO(to_string(kind) << " " << spec_one_line(sys.spec));
        check_structure(sys);
        const HexProfile& p = sys.profile;
        CHECK(p == classify_hexagons(sys));
        CHECK(p.t + p.b + p.a + p.l == h);
        CHECK(2 * p.b + p.a == p.s - 1);
        CHECK(p.b + 2 == p.t);
        CHECK(p.s <= h - 1);
        CHECK(count_segments(sys.spec, p.per_hexagon) == p.s);

        auto cf = closed_form_report(p, kind);
        CHECK(cf.m1 == first_zagreb(sys.graph));
        CHECK(cf.m2 == second_zagreb(sys.graph));
        CHECK(cf.wp == oracle::wiener_polarity(sys.graph));

        if (kind == SystemKind::benzenoid) {
          for (const auto& [id, cls] : p.per_hexagon) CHECK(class_from_graph(sys, id) == cls);
        } else {
          auto squeezed = hexagonal_squeeze(sys);
          auto spec = sys.spec;
          spec.kind = SystemKind::benzenoid;
          CHECK(isomorphic(squeezed, build_benzenoid(spec).graph));
          for (const auto& q : sys.quadrilateral_faces) {
            CHECK(sys.graph.adjacent(q[0], q[1]));
            CHECK(sys.graph.adjacent(q[1], q[2]));
            CHECK(sys.graph.adjacent(q[2], q[3]));
            CHECK(sys.graph.adjacent(q[3], q[0]));
          }
        }
      }
    }
  }
}

TEST_CASE("squeeze rejects benzenoids") {
  CHECK_THROWS_AS(hexagonal_squeeze(linear_chain(3, SystemKind::benzenoid)), std::invalid_argument);
}

TEST_CASE("export_system round-trips through the edge-list parser") {
  auto sys = build_system(parse_spec(kReference, SystemKind::phenylene));
  const std::string text = export_system(sys);
  CHECK(text.find("# kind = phenylene") != std::string::npos);
  CHECK(text.find("# quadrilateral.0") != std::string::npos);
  CHECK(parse_edge_list(text) == sys.graph);
}

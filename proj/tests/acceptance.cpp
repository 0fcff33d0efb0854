// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wpi/chem.hpp"
#include "wpi/cycles.hpp"
#include "wpi/error.hpp"
#include "wpi/extremal.hpp"
#include "wpi/indices.hpp"

using namespace wpi;

namespace {

const char* kReferenceSpec = "0 -1 0\n1 0 0\n2 1 1\n3 2 0\n4 2 2\n5 4 2\n";

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// Random connected graphs on at most 14 vertices. Sparse chord counts keep
// a good share triangle-free and precondition-passing.
struct Corpus {
  std::vector<Graph> all;
  std::vector<Graph> passing;
  std::vector<Graph> failing;
};

Corpus make_corpus() {
  Corpus c;
  std::mt19937 rng(20240601);
  c.all.push_back(oracle::cycle_graph(6));
  c.all.push_back(oracle::complete_bipartite(2, 3));
  c.all.push_back(oracle::complete_bipartite(3, 3));
  c.all.push_back(oracle::complete_graph(5));
  while (c.passing.size() < 600 || c.failing.size() < 200) {
    const int n = 4 + static_cast<int>(rng() % 11);
    Graph g = oracle::random_connected(rng, n, 1 + static_cast<int>(rng() % 6));
    c.all.push_back(g);
    if (check_preconditions(g).passes) {
      c.passing.push_back(g);
    } else {
      c.failing.push_back(g);
    }
  }
  return c;
}

Outcome ac1() {
  Outcome o;
  struct Case {
    SystemKind kind;
    std::int64_t want;
  };
  for (Case c : {Case{SystemKind::benzenoid, 52}, Case{SystemKind::phenylene, 72}}) {
    auto sys = build_system(parse_spec(kReferenceSpec, c.kind));
    const HexProfile& p = sys.profile;
    if (p.h != 6 || p.t != 3 || p.b != 1 || p.a != 1 || p.l != 1 || p.s != 4) o.fail("reference profile mismatch");
    auto v = wiener_polarity_three_ways(sys);
    if (v.wp_closed != c.want || v.wp_formula != c.want || v.wp_oracle != c.want) {
      std::ostringstream s;
      s << to_string(c.kind) << ": closed " << v.wp_closed << ", formula " << v.wp_formula << ", oracle "
        << v.wp_oracle << ", expected " << c.want;
      o.fail(s.str());
    }
  }
  return o;
}

Outcome ac2() {
  Outcome o;
  int n = 0;
  for (SystemKind kind : {SystemKind::benzenoid, SystemKind::phenylene}) {
    for (int h = kind == SystemKind::benzenoid ? 1 : 2; h <= 6; ++h) {
      for (const auto& sys : enumerate_catafused(h, kind)) {
        ++n;
        const auto& p = sys.profile;
        const std::int64_t closed =
            kind == SystemKind::benzenoid ? 9 * h + p.s + p.b - 7 : 13 * h + p.s + p.b - 11;
        const std::int64_t want = closed;
        const auto formula = wiener_polarity_formula(sys.graph);
        const auto bfs = wiener_polarity_oracle(sys.graph);
        if (formula != want || bfs != want || closed_form_report(p, kind).wp != want)
          o.fail(std::string(to_string(kind)) + " " + spec_one_line(sys.spec));
      }
    }
  }
  o.detail = o.ok ? std::to_string(n) + " systems" : o.detail;
  return o;
}

Outcome ac3(const Corpus& c) {
  Outcome o;
  std::size_t with_small_cycles = 0;
  for (const Graph& g : c.passing) {
    auto inv = cycle_inventory(g);
    with_small_cycles += inv.count(4) + inv.count(5) + inv.count(6) > 0;
    if (wiener_polarity_formula(g) != wiener_polarity_oracle(g) ||
        wiener_polarity_oracle(g) != oracle::wiener_polarity(g))
      o.fail("formula differs from oracle on\n" + serialize_edge_list(g));
  }
  for (const Graph& g : c.failing) {
    try {
      wiener_polarity_formula(g);
      o.fail("formula accepted a failing graph");
    } catch (const PreconditionError&) {
    }
  }
  auto k23 = oracle::complete_bipartite(2, 3);
  bool refused = false;
  try {
    wiener_polarity_formula(k23);
  } catch (const PreconditionError&) {
    refused = true;
  }
  if (!refused) o.fail("K2,3 not refused");
  if (wiener_polarity_formula_unchecked(k23, cycle_inventory(k23)) != -6 || wiener_polarity_oracle(k23) != 0)
    o.fail("K2,3 unchecked value is not -6 against oracle 0");
  if (c.passing.size() < 500) o.fail("fewer than 500 passing graphs");
  if (o.ok)
    o.detail = std::to_string(c.passing.size()) + " passing (" + std::to_string(with_small_cycles) +
               " with 4-6 cycles), " + std::to_string(c.failing.size()) + " refused";
  return o;
}

Outcome ac4(const Corpus& c) {
  Outcome o;
  int decomposed = 0;
  for (const Graph& g : c.all) {
    std::int64_t lhs = 0, rhs = 0;
    for (Vertex v = 0; v < g.order(); ++v) lhs += std::int64_t{g.degree(v)} * g.degree(v);
    for (const Edge& e : g.edges()) rhs += g.degree(e.u) + g.degree(e.v);
    if (lhs != rhs || first_zagreb(g) != lhs) o.fail("degree-sum identity");
    if (path3_count(g) != second_zagreb(g) - first_zagreb(g) + g.size()) o.fail("p3 identity");
    auto inv = cycle_inventory(g);
    if (!check_preconditions(g, inv).passes) continue;
    ++decomposed;
    const std::int64_t wp =
        path3_count(g) - *inv.f_value - 3 * inv.count(6) - 4 * inv.count(4) - 5 * inv.count(5);
    if (wp != oracle::wiener_polarity(g)) o.fail("decomposition on\n" + serialize_edge_list(g));
  }
  if (o.ok) o.detail = std::to_string(c.all.size()) + " graphs, " + std::to_string(decomposed) + " decomposed";
  return o;
}

Outcome ac5() {
  Outcome o;
  int n = 0;
  for (SystemKind kind : {SystemKind::benzenoid, SystemKind::phenylene}) {
    for (int h = kind == SystemKind::benzenoid ? 1 : 2; h <= 7; ++h) {
      for (const auto& sys : enumerate_catafused(h, kind)) {
        ++n;
        const Graph& g = sys.graph;
        const std::int64_t s = sys.profile.s, b = sys.profile.b;
        const bool benz = kind == SystemKind::benzenoid;
        const bool counts = benz ? g.order() == 4 * h + 2 && g.size() == 5 * h + 1 &&
                                       count_degree(g, 3) == 2 * h - 2 && count_degree(g, 2) == 2 * h + 4
                                 : g.order() == 6 * h && g.size() == 8 * h - 2 &&
                                       count_degree(g, 3) == 4 * h - 4 && count_degree(g, 2) == 2 * h + 4;
        const bool zagreb = benz ? first_zagreb(g) == 26 * h - 2 && second_zagreb(g) == 33 * h + s + b - 10
                                 : first_zagreb(g) == 44 * h - 20 && second_zagreb(g) == 60 * h + s + b - 37;
        if (!counts || !zagreb) o.fail(std::string(to_string(kind)) + " " + spec_one_line(sys.spec));
      }
    }
  }
  if (o.ok) o.detail = std::to_string(n) + " systems";
  return o;
}

Outcome ac6() {
  Outcome o;
  for (SystemKind kind : {SystemKind::benzenoid, SystemKind::phenylene}) {
    for (int h = 2; h <= 7; ++h) {
      for (const auto& sys : enumerate_catafused(h, kind)) {
        const auto& p = sys.profile;
        if (2 * p.b + p.a != p.s - 1 || p.b + 2 != p.t || p.s > h - 1)
          o.fail("hexagon-type identities on " + spec_one_line(sys.spec));
      }
      const Family fam = kind == SystemKind::benzenoid ? Family::B : Family::P;
      auto members = generate_family(FamilyTag{fam, h}, kind);
      if (members.empty()) o.fail("empty family at h = " + std::to_string(h));
      for (const auto& m : members)
        if (m.profile.s != h - 1) o.fail("family member with s < h - 1: " + spec_one_line(m.spec));
    }
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  for (SystemKind kind : {SystemKind::benzenoid, SystemKind::phenylene}) {
    for (int h = 2; h <= 7; ++h) {
      auto rep = verify_extremal(h, kind);
      if (!rep.passed()) {
        std::string why = std::string(to_string(kind)) + " h=" + std::to_string(h);
        if (!rep.counterexamples.empty()) why += ": " + rep.counterexamples.front();
        o.fail(why);
      }
    }
  }
  return o;
}

Outcome ac8(const Corpus& c) {
  Outcome o;
  int n = 0;
  for (const Graph& g : c.all) {
    if (g.order() > 12) continue;
    ++n;
    for (int k = 3; k <= 6; ++k)
      if (static_cast<std::int64_t>(enumerate_cycles(g, k).size()) != oracle::count_cycles_by_subsets(g, k))
        o.fail("k = " + std::to_string(k) + " on\n" + serialize_edge_list(g));
  }
  if (o.ok) o.detail = std::to_string(n) + " graphs";
  return o;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const Corpus corpus = make_corpus();

  struct Criterion {
    int number;
    const char* name;
    double limit_seconds;  // 0 = untimed
    std::function<Outcome()> body;
  };
  const std::vector<Criterion> criteria{
      {1, "reference system W_p 52 / 72 three ways", 1.0, ac1},
      {2, "formula = oracle = closed form for h <= 6", 60.0, ac2},
      {3, "generic-graph formula vs oracle, refusal, K2,3", 0, [&] { return ac3(corpus); }},
      {4, "degree, p3 and decomposition identities", 0, [&] { return ac4(corpus); }},
      {5, "structural counts and Zagreb closed forms", 0, ac5},
      {6, "hexagon-type identities and family segments", 0, ac6},
      {7, "extremal characterisation for 2 <= h <= 7", 300.0, ac7},
      {8, "cycle counts vs subset brute force", 0, [&] { return ac8(corpus); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    failures += !o.ok;
    std::printf("AC%d %s  %-52s %8.3fs  %s\n", c.number, o.ok ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

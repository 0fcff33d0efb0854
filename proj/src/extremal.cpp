#include "wpi/extremal.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <stdexcept>

#include "wpi/error.hpp"
#include "wpi/indices.hpp"

namespace wpi {

std::string_view to_string(ExtensionKind k) {
  switch (k) {
    case ExtensionKind::ext1: return "ext1";
    case ExtensionKind::ext2: return "ext2";
    case ExtensionKind::ext3: return "ext3";
  }
  return "?";
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::L: return "L";
    case Family::B: return "B";
    case Family::B_prime: return "B_prime";
    case Family::P: return "P";
    case Family::P_prime: return "P_prime";
    case Family::other: return "other";
  }
  return "?";
}

std::string spec_one_line(const PolycyclicSpec& spec) {
  std::string text = serialize_spec(spec), out;
  for (char c : text) {
    if (c == '\n') {
      out += "; ";
    } else {
      out += c;
    }
  }
  if (out.size() >= 2) out.resize(out.size() - 2);
  return out;
}

// ---------------------------------------------------------------------------
// Extensions
// ---------------------------------------------------------------------------

namespace {

// Direction from a terminal hexagon to its only neighbour.
std::optional<int> terminal_direction(const PolycyclicSpec& spec, int id) {
  auto nb = spec.neighbors(id);
  if (nb.size() != 1) return std::nullopt;
  return nb.front().second;
}

std::vector<std::vector<int>> placements_for(ExtensionKind kind, int towards_neighbour) {
  const int p = towards_neighbour;
  switch (kind) {
    case ExtensionKind::ext1: return {{wrap_direction(p + 2), wrap_direction(p + 4)}};
    case ExtensionKind::ext2: return {{wrap_direction(p + 2)}, {wrap_direction(p + 4)}};
    case ExtensionKind::ext3: return {{wrap_direction(p + 3)}};
  }
  return {};
}

}  // namespace

std::vector<ExtensionStep> possible_extensions(const PolycyclicSpec& spec, ExtensionKind kind) {
  std::vector<int> ids;
  for (const auto& n : spec.nodes) ids.push_back(n.id);
  std::sort(ids.begin(), ids.end());
  std::vector<ExtensionStep> out;
  for (int id : ids) {
    auto p = terminal_direction(spec, id);
    if (!p) continue;
    for (auto& placement : placements_for(kind, *p)) out.push_back({kind, id, placement});
  }
  return out;
}

PolycyclicSpec apply_extension(const PolycyclicSpec& spec, const ExtensionStep& step) {
  bool known = std::any_of(spec.nodes.begin(), spec.nodes.end(), [&](const HexNode& n) { return n.id == step.target; });
  if (!known) throw std::invalid_argument("no hexagon with id " + std::to_string(step.target));
  auto p = terminal_direction(spec, step.target);
  if (!p) throw std::invalid_argument("hexagon " + std::to_string(step.target) + " is not terminal");

  auto wanted = step.placement;
  for (int& d : wanted) d = wrap_direction(d);
  std::sort(wanted.begin(), wanted.end());
  bool ok = false;
  for (auto allowed : placements_for(step.kind, *p)) {
    std::sort(allowed.begin(), allowed.end());
    ok = ok || allowed == wanted;
  }
  if (!ok) {
    throw std::invalid_argument("placement does not make hexagon " + std::to_string(step.target) + " " +
                                (step.kind == ExtensionKind::ext1   ? "branched"
                                 : step.kind == ExtensionKind::ext2 ? "angular"
                                                                    : "linear"));
  }

  PolycyclicSpec out = spec;
  int next = spec.max_id() + 1;
  for (int d : wanted) out.nodes.push_back(HexNode{next++, step.target, d});
  place_on_lattice(out);
  return out;
}

// ---------------------------------------------------------------------------
// Lattice shapes
// ---------------------------------------------------------------------------

namespace {

Cell rotate60(Cell c) { return {-c.r, c.q + c.r}; }
Cell reflect(Cell c) { return {c.r, c.q}; }

std::vector<Cell> normalise(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  const Cell origin = cells.front();
  for (Cell& c : cells) c = {c.q - origin.q, c.r - origin.r};
  return cells;
}

std::vector<Cell> shape_key_of(const std::vector<Cell>& cells) {
  std::vector<Cell> best;
  std::vector<Cell> cur = cells;
  for (int mirror = 0; mirror < 2; ++mirror) {
    for (int rot = 0; rot < 6; ++rot) {
      auto n = normalise(cur);
      if (best.empty() || n < best) best = std::move(n);
      for (Cell& c : cur) c = rotate60(c);
    }
    for (Cell& c : cur) c = reflect(c);
  }
  return best;
}

// Dualist tree of a tree-shaped polyhex, rooted at its smallest cell, ids in
// breadth-first order.
PolycyclicSpec spec_from_shape(const std::vector<Cell>& shape, SystemKind kind) {
  std::map<Cell, int> id_of;
  PolycyclicSpec spec;
  spec.kind = kind;
  std::vector<Cell> queue{shape.front()};
  id_of[shape.front()] = 0;
  spec.nodes.push_back(HexNode{0, std::nullopt, 0});
  std::set<Cell> present(shape.begin(), shape.end());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Cell c = queue[head];
    for (int d = 0; d < 6; ++d) {
      const Cell n = neighbor(c, d);
      if (!present.count(n) || id_of.count(n)) continue;
      const int id = static_cast<int>(id_of.size());
      id_of[n] = id;
      spec.nodes.push_back(HexNode{id, id_of[c], d});
      queue.push_back(n);
    }
  }
  return spec;
}

// Tree-shaped polyhexes with h cells, up to lattice symmetry, sorted.
std::vector<std::vector<Cell>> tree_polyhexes(int h) {
  std::set<std::vector<Cell>> level{{Cell{0, 0}}};
  for (int size = 1; size < h; ++size) {
    std::set<std::vector<Cell>> next;
    for (const auto& shape : level) {
      std::set<Cell> present(shape.begin(), shape.end());
      for (const Cell& c : shape) {
        for (int d = 0; d < 6; ++d) {
          const Cell cand = neighbor(c, d);
          if (present.count(cand)) continue;
          int touching = 0;
          for (int e = 0; e < 6; ++e) touching += present.count(neighbor(cand, e)) ? 1 : 0;
          if (touching != 1) continue;
          auto grown = shape;
          grown.push_back(cand);
          next.insert(shape_key_of(grown));
        }
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

struct Candidate {
  BuiltSystem sys;
  CanonicalForm canon;
};

// Builds and canonicalises each spec; independent items run in parallel and
// land in input order.
std::vector<Candidate> build_all(const std::vector<PolycyclicSpec>& specs) {
  std::vector<Candidate> out(specs.size());
  std::vector<std::exception_ptr> failures(specs.size());
  const long count = static_cast<long>(specs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      out[i].sys = build_system(specs[i]);
      out[i].canon = canonical_form(out[i].sys.graph);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);
  return out;
}

std::vector<BuiltSystem> dedup_by_isomorphism(std::vector<Candidate> items) {
  std::set<CanonicalForm> seen;
  std::vector<BuiltSystem> out;
  for (auto& c : items)
    if (seen.insert(c.canon).second) out.push_back(std::move(c.sys));
  return out;
}

}  // namespace

std::vector<Cell> shape_key(const std::map<int, Cell>& cells) {
  std::vector<Cell> v;
  for (const auto& [id, c] : cells) v.push_back(c);
  return shape_key_of(v);
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

PolycyclicSpec linear_chain_spec(int h, SystemKind kind) {
  if (h < 1 || (kind == SystemKind::phenylene && h < 2))
    throw std::invalid_argument("linear chain needs h >= " + std::string(kind == SystemKind::phenylene ? "2" : "1"));
  PolycyclicSpec spec;
  spec.kind = kind;
  spec.nodes.push_back(HexNode{0, std::nullopt, 0});
  for (int i = 1; i < h; ++i) spec.nodes.push_back(HexNode{i, i - 1, 0});
  return spec;
}

BuiltSystem linear_chain(int h, SystemKind kind) { return build_system(linear_chain_spec(h, kind)); }

std::vector<BuiltSystem> generate_family(const FamilyTag& tag) {
  const bool phenylene = tag.family == Family::P || tag.family == Family::P_prime;
  return generate_family(tag, phenylene ? SystemKind::phenylene : SystemKind::benzenoid);
}

std::vector<BuiltSystem> generate_family(const FamilyTag& tag, SystemKind kind) {
  const int h = tag.h;
  const Family f = tag.family;
  if (f == Family::other) throw std::invalid_argument("family 'other' cannot be generated");
  if (f == Family::L) return {linear_chain(h, kind)};

  const bool wants_phenylene = f == Family::P || f == Family::P_prime;
  if (wants_phenylene != (kind == SystemKind::phenylene))
    throw std::invalid_argument(std::string(to_string(f)) + " does not match kind " + std::string(to_string(kind)));
  const bool prime = f == Family::B_prime || f == Family::P_prime;
  if (h < 2) throw std::invalid_argument("families B_h and P_h need h >= 2");
  if (prime && (h % 2 == 0 || h < 3))
    throw std::invalid_argument(std::string(to_string(f)) + " is defined for odd h >= 3 only");

  int ext1_steps = h % 2 == 0 ? h / 2 - 1 : (h - 1) / 2 - 1;
  int single_steps = h % 2 == 0 ? 0 : 1;
  const ExtensionKind single = prime ? ExtensionKind::ext3 : ExtensionKind::ext2;

  // Breadth-first over partial step sequences; states that coincide up to
  // lattice symmetry with the same remaining steps are explored once.
  struct State {
    PolycyclicSpec spec;
    int ext1_left;
    int single_left;
  };
  std::vector<State> frontier{{linear_chain_spec(2, kind), ext1_steps, single_steps}};
  while (frontier.front().ext1_left + frontier.front().single_left > 0) {
    std::map<std::tuple<std::vector<Cell>, int, int>, State> next;
    for (const State& s : frontier) {
      auto expand = [&](ExtensionKind kind_of_step, int d1, int d2) {
        for (const auto& step : possible_extensions(s.spec, kind_of_step)) {
          try {
            State grown{apply_extension(s.spec, step), s.ext1_left - d1, s.single_left - d2};
            auto key = std::tuple{shape_key(place_on_lattice(grown.spec)), grown.ext1_left, grown.single_left};
            next.emplace(std::move(key), std::move(grown));
          } catch (const UnrealizableError&) {
          }
        }
      };
      if (s.ext1_left > 0) expand(ExtensionKind::ext1, 1, 0);
      if (s.single_left > 0) expand(single, 0, 1);
    }
    frontier.clear();
    for (auto& [key, st] : next) frontier.push_back(std::move(st));
    if (frontier.empty()) return {};
  }

  std::vector<PolycyclicSpec> specs;
  for (auto& s : frontier) specs.push_back(std::move(s.spec));
  return dedup_by_isomorphism(build_all(specs));
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

std::vector<BuiltSystem> enumerate_catafused(int h, SystemKind kind, int limit) {
  if (h > limit) {
    throw GuardError("h = " + std::to_string(h) + " exceeds the exhaustive enumeration limit " +
                     std::to_string(limit) + "; raise the limit explicitly or sample instead");
  }
  if (h < 1 || (kind == SystemKind::phenylene && h < 2))
    throw std::invalid_argument("enumeration needs h >= " + std::string(kind == SystemKind::phenylene ? "2" : "1"));

  std::vector<PolycyclicSpec> specs;
  for (const auto& shape : tree_polyhexes(h)) specs.push_back(spec_from_shape(shape, kind));
  return dedup_by_isomorphism(build_all(specs));
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

SystemValues wiener_polarity_three_ways(const BuiltSystem& sys) {
  SystemValues v;
  v.wp_closed = closed_form_report(sys.profile, sys.kind).wp;
  v.wp_formula = wiener_polarity_formula(sys.graph);
  v.wp_oracle = wiener_polarity_oracle(sys.graph);
  return v;
}

ExtremalReport verify_extremal(int h, SystemKind kind, int limit) {
  ExtremalReport rep;
  rep.h = h;
  rep.kind = kind;
  if (h < 2) throw std::invalid_argument("extremal verification needs h >= 2");
  auto systems = enumerate_catafused(h, kind, limit);
  rep.system_count = static_cast<int>(systems.size());

  const long count = static_cast<long>(systems.size());
  std::vector<SystemValues> values(systems.size());
  std::vector<CanonicalForm> canon(systems.size());
  std::vector<std::string> errors(systems.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      values[i] = wiener_polarity_three_ways(systems[i]);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
    try {
      canon[i] = canonical_form(systems[i].graph);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }

  rep.three_way_agreement = true;
  rep.type_identities = true;
  int max_b = 0;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    const auto& p = systems[i].profile;
    const std::string id = spec_one_line(systems[i].spec);
    if (!errors[i].empty()) {
      rep.three_way_agreement = false;
      rep.counterexamples.push_back(id + ": " + errors[i]);
      continue;
    }
    if (!values[i].agree()) {
      rep.three_way_agreement = false;
      rep.counterexamples.push_back(id + ": closed form " + std::to_string(values[i].wp_closed) + ", formula " +
                                    std::to_string(values[i].wp_formula) + ", oracle " +
                                    std::to_string(values[i].wp_oracle));
    }
    if (2 * p.b + p.a != p.s - 1 || p.b + 2 != p.t || p.s > h - 1) {
      rep.type_identities = false;
      rep.counterexamples.push_back(id + ": hexagon-type identities violated");
    }
    max_b = std::max(max_b, p.b);
  }

  std::set<CanonicalForm> min_set, max_set;
  rep.min_value = values.front().wp_oracle;
  rep.max_value = values.front().wp_oracle;
  for (const auto& v : values) {
    rep.min_value = std::min(rep.min_value, v.wp_oracle);
    rep.max_value = std::max(rep.max_value, v.wp_oracle);
  }
  for (std::size_t i = 0; i < systems.size(); ++i) {
    if (values[i].wp_oracle == rep.min_value) {
      min_set.insert(canon[i]);
      rep.min_witnesses.push_back(spec_one_line(systems[i].spec));
    }
    if (values[i].wp_oracle == rep.max_value) {
      max_set.insert(canon[i]);
      rep.max_witnesses.push_back(spec_one_line(systems[i].spec));
    }
  }

  const CanonicalForm linear = canonical_form(linear_chain(h, kind).graph);
  rep.min_unique_is_linear = min_set.size() == 1 && *min_set.begin() == linear;
  if (!rep.min_unique_is_linear) rep.counterexamples.push_back("minimum not attained uniquely by the linear chain");

  const bool phen = kind == SystemKind::phenylene;
  auto family = generate_family(FamilyTag{phen ? Family::P : Family::B, h}, kind);
  rep.family_size = static_cast<int>(family.size());
  std::set<CanonicalForm> family_set;
  for (const auto& m : family) family_set.insert(canonical_form(m.graph));
  rep.max_set_equals_family = family_set == max_set;
  if (!rep.max_set_equals_family)
    rep.counterexamples.push_back("maximisers differ from the generated " + std::string(phen ? "P" : "B") + " family");

  if (h % 2 == 1) {
    auto primes = generate_family(FamilyTag{phen ? Family::P_prime : Family::B_prime, h}, kind);
    rep.prime_family_size = static_cast<int>(primes.size());
    for (const auto& m : primes) {
      const auto v = wiener_polarity_oracle(m.graph);
      if (m.profile.b != max_b || m.profile.s >= h - 1 || v >= rep.max_value) {
        rep.prime_falls_short = false;
        rep.counterexamples.push_back(spec_one_line(m.spec) + ": primed family member does not fall short");
      }
    }
  }
  return rep;
}

}  // namespace wpi

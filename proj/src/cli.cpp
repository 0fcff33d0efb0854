#include "wpi/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <set>
#include <sstream>

#include "wpi/canon.hpp"
#include "wpi/chem.hpp"
#include "wpi/error.hpp"
#include "wpi/extremal.hpp"
#include "wpi/indices.hpp"

namespace wpi::cli {

Record& Record::add(std::string key, std::string value) {
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

Record& Record::add(std::string key, long long value) { return add(std::move(key), std::to_string(value)); }

void Record::render(std::ostream& out, Format format) const {
  if (format == Format::structured) {
    for (const auto& [k, v] : fields_) out << k << " = " << v << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : fields_) width = std::max(width, k.size());
  for (const auto& [k, v] : fields_) out << k << ':' << std::string(width - k.size() + 1, ' ') << v << '\n';
}

int enumeration_limit() {
  if (const char* env = std::getenv(kEnumerationLimitEnv); env && *env) {
    try {
      std::size_t used = 0;
      int v = std::stoi(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultEnumerationLimit;
}

namespace {

std::string optional_value(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "absent"; }

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

Record profile_record(const BuiltSystem& sys) {
  const auto& p = sys.profile;
  Record r;
  r.add("kind", std::string(to_string(sys.kind)))
      .add("h", p.h)
      .add("vertices", sys.graph.order())
      .add("edges", sys.graph.size())
      .add("n2", count_degree(sys.graph, 2))
      .add("n3", count_degree(sys.graph, 3))
      .add("n_i", p.n_i)
      .add("t", p.t)
      .add("b", p.b)
      .add("a", p.a)
      .add("l", p.l)
      .add("s", p.s);
  return r;
}

// ---------------------------------------------------------------------------

struct ComputeArgs {
  std::string input;
  std::string method = "both";
};

int cmd_compute(const ComputeArgs& args, Format format, std::ostream& out, std::ostream& err) {
  Graph g = read_edge_list_file(args.input);
  validate_connected(g);
  const Method method = args.method == "formula" ? Method::formula
                        : args.method == "oracle"  ? Method::oracle
                                                   : Method::both;
  IndexReport rep = full_report(g, method);

  Record r;
  r.add("input", args.input)
      .add("method", args.method)
      .add("vertices", rep.vertex_count)
      .add("edges", rep.edge_count)
      .add("m1", rep.m1)
      .add("m2", rep.m2)
      .add("p3", rep.p3)
      .add("c3", rep.c3)
      .add("c4", rep.c4)
      .add("c5", rep.c5)
      .add("c6", rep.c6)
      .add("f", optional_value(rep.f))
      .add("preconditions", rep.preconditions_pass ? "pass" : "fail");
  if (!rep.preconditions_pass) r.add("preconditions_reason", rep.preconditions.reason(g));
  if (method != Method::oracle) {
    r.add("wp_formula", optional_value(rep.wp_formula));
    if (!rep.wp_formula) r.add("wp_formula_reason", rep.wp_formula_diagnostic);
  }
  if (method != Method::formula) r.add("wp_oracle", optional_value(rep.wp_oracle));
  r.render(out, format);

  if (method == Method::formula && !rep.preconditions_pass) {
    err << "error: Wiener polarity formula refused: " << rep.preconditions.reason(g) << '\n';
    return kPreconditionRefusal;
  }
  if (method == Method::both && rep.wp_formula && rep.wp_oracle && *rep.wp_formula != *rep.wp_oracle) {
    err << "error: formula and oracle disagree\n";
    return kVerificationFailure;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct BuildArgs {
  std::string spec;
  std::string kind = "benzenoid";
};

int cmd_build(const BuildArgs& args, Format format, std::ostream& out, std::ostream& err) {
  const SystemKind kind = parse_kind(args.kind);
  PolycyclicSpec spec = read_spec_file(args.spec, kind);
  if (kind == SystemKind::phenylene && spec.hexagon_count() < 2)
    throw UnrealizableError("a phenylene needs at least two hexagons", {spec.root()});
  BuiltSystem sys = build_system(spec);

  const ClosedForm cf = closed_form_report(sys.profile, kind);
  const std::int64_t m1 = first_zagreb(sys.graph), m2 = second_zagreb(sys.graph);
  std::optional<std::int64_t> formula;
  std::string refusal;
  try {
    formula = wiener_polarity_formula(sys.graph);
  } catch (const PreconditionError& e) {
    refusal = e.what();
  }
  const std::int64_t oracle = wiener_polarity_oracle(sys.graph);

  Record r = profile_record(sys);
  r.add("m1", m1)
      .add("m1_closed_form", cf.m1)
      .add("m2", m2)
      .add("m2_closed_form", cf.m2)
      .add("wp_closed_form", cf.wp)
      .add("wp_formula", optional_value(formula))
      .add("wp_oracle", oracle);
  const bool agree = formula && *formula == cf.wp && oracle == cf.wp && m1 == cf.m1 && m2 == cf.m2;
  r.add("agreement", agree ? "yes" : "no");
  r.render(out, format);
  out << '\n' << export_system(sys);

  if (!agree) {
    err << "error: closed form, formula and oracle disagree" << (refusal.empty() ? "" : ": " + refusal) << '\n';
    return kVerificationFailure;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct SizeArgs {
  std::string kind = "benzenoid";
  int h = 0;
};

std::set<CanonicalForm> family_forms(int h, Family family, SystemKind kind) {
  std::set<CanonicalForm> out;
  for (const auto& m : generate_family(FamilyTag{family, h}, kind)) out.insert(canonical_form(m.graph));
  return out;
}

int cmd_enumerate(const SizeArgs& args, Format format, std::ostream& out, std::ostream&) {
  const SystemKind kind = parse_kind(args.kind);
  const bool phen = kind == SystemKind::phenylene;
  auto systems = enumerate_catafused(args.h, kind, enumeration_limit());

  const CanonicalForm linear = canonical_form(linear_chain(args.h, kind).graph);
  std::set<CanonicalForm> fam, prime;
  if (args.h >= 2) fam = family_forms(args.h, phen ? Family::P : Family::B, kind);
  if (args.h >= 3 && args.h % 2 == 1) prime = family_forms(args.h, phen ? Family::P_prime : Family::B_prime, kind);

  for (std::size_t i = 0; i < systems.size(); ++i) {
    const auto& sys = systems[i];
    const CanonicalForm cf = canonical_form(sys.graph);
    std::string tags;
    auto tag = [&](Family f) { tags += (tags.empty() ? "" : ",") + std::string(to_string(f)); };
    if (cf == linear) tag(Family::L);
    if (fam.count(cf)) tag(phen ? Family::P : Family::B);
    if (prime.count(cf)) tag(phen ? Family::P_prime : Family::B_prime);
    if (tags.empty()) tag(Family::other);

    const SystemValues v = wiener_polarity_three_ways(sys);
    Record r;
    r.add("system", static_cast<long long>(i));
    for (const auto& n : sys.spec.nodes)
      r.add("spec." + std::to_string(n.id), std::to_string(n.parent ? *n.parent : -1) + " " +
                                                 std::to_string(n.parent ? n.direction : 0));
    Record p = profile_record(sys);
    for (const auto& [k, val] : p.fields()) r.add(k, val);
    r.add("wp_closed_form", v.wp_closed).add("wp_formula", v.wp_formula).add("wp_oracle", v.wp_oracle);
    r.add("families", tags);
    if (i) out << '\n';
    r.render(out, format);
  }
  return kOk;
}

int cmd_verify(const SizeArgs& args, Format format, std::ostream& out, std::ostream& err) {
  const SystemKind kind = parse_kind(args.kind);
  const int limit = enumeration_limit();
  if (args.h > limit) {
    throw GuardError("h = " + std::to_string(args.h) + " exceeds the exhaustive enumeration limit " +
                     std::to_string(limit) + " (override with " + kEnumerationLimitEnv + ")");
  }
  if (args.h < 2) throw std::invalid_argument("verify needs --h >= 2");
  const std::string fam = kind == SystemKind::phenylene ? "P" : "B";
  bool all_pass = true;
  for (int h = 2; h <= args.h; ++h) {
    ExtremalReport rep = verify_extremal(h, kind, limit);
    all_pass = all_pass && rep.passed();
    if (format == Format::structured) {
      Record r;
      r.add("h", h)
          .add("kind", std::string(to_string(kind)))
          .add("systems", rep.system_count)
          .add("min", rep.min_value)
          .add("min_witnesses", static_cast<long long>(rep.min_witnesses.size()))
          .add("min_unique_is_linear", rep.min_unique_is_linear ? "yes" : "no")
          .add("max", rep.max_value)
          .add("max_witnesses", static_cast<long long>(rep.max_witnesses.size()))
          .add("family_size", rep.family_size)
          .add("max_set_equals_family", rep.max_set_equals_family ? "yes" : "no");
      if (h % 2 == 1)
        r.add("prime_family_size", rep.prime_family_size).add("prime_falls_short", rep.prime_falls_short ? "yes" : "no");
      r.add("three_way_agreement", rep.three_way_agreement ? "yes" : "no")
          .add("type_identities", rep.type_identities ? "yes" : "no")
          .add("status", rep.passed() ? "pass" : "fail");
      for (std::size_t i = 0; i < rep.counterexamples.size(); ++i)
        r.add("counterexample." + std::to_string(i), rep.counterexamples[i]);
      if (h > 2) out << '\n';
      r.render(out, format);
    } else {
      out << "h=" << h << ' ' << to_string(kind) << ": " << (rep.passed() ? "pass" : "FAIL")
          << "  systems=" << rep.system_count << "  min=" << rep.min_value << " (L_" << h << ")"
          << "  max=" << rep.max_value << " (" << rep.max_witnesses.size() << " system(s), " << fam << '_' << h
          << " has " << rep.family_size << ")";
      if (h % 2 == 1) out << "  " << fam << "'_" << h << " short on s: " << (rep.prime_falls_short ? "yes" : "no");
      out << '\n';
      for (const auto& c : rep.counterexamples) out << "  counterexample: " << c << '\n';
    }
  }
  if (!all_pass) {
    err << "error: extremal verification failed\n";
    return kVerificationFailure;
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wiener polarity index of graphs, benzenoids and phenylenes", "wpi"};
  app.require_subcommand(1);
  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Indices and Wiener polarity of an edge-list graph");
  c->add_option("--input", compute.input, "Edge-list file")->required();
  c->add_option("--method", compute.method, "Route for W_p")
      ->check(CLI::IsMember({"formula", "oracle", "both"}))
      ->capture_default_str();

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build a benzenoid or phenylene from a dualist-tree spec");
  b->add_option("--spec", build.spec, "Spec file (lines 'id parent direction')")->required();
  b->add_option("--kind", build.kind)->check(CLI::IsMember({"benzenoid", "phenylene"}))->capture_default_str();

  SizeArgs enumerate;
  auto* e = app.add_subcommand("enumerate", "List every catacondensed system with h hexagons");
  e->set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
  e->add_option("--kind", enumerate.kind)->check(CLI::IsMember({"benzenoid", "phenylene"}))->capture_default_str();
  e->add_option("--h", enumerate.h, "Number of hexagons")->required()->check(CLI::PositiveNumber);

  SizeArgs verify;
  auto* v = app.add_subcommand("verify", "Check the extremal characterisation for 2..h hexagons");
  v->set_help_flag("--help", "Print this help message and exit");
  v->add_option("--kind", verify.kind)->check(CLI::IsMember({"benzenoid", "phenylene"}))->capture_default_str();
  v->add_option("--h", verify.h, "Largest number of hexagons")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  const Format format = format_name == "structured" ? Format::structured : Format::text;
  try {
    if (*c) return cmd_compute(compute, format, out, err);
    if (*b) return cmd_build(build, format, out, err);
    if (*e) return cmd_enumerate(enumerate, format, out, err);
    return cmd_verify(verify, format, out, err);
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kParse;
  } catch (const DisconnectedError& ex) {
    err << "error: " << ex.what() << '\n';
    return kDisconnected;
  } catch (const UnrealizableError& ex) {
    err << "error: " << ex.what() << " [hexagons: " << join_ints(ex.hexagons()) << "]\n";
    return kUnrealizable;
  } catch (const PreconditionError& ex) {
    err << "error: " << ex.what() << '\n';
    return kPreconditionRefusal;
  } catch (const GuardError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }
}

}  // namespace wpi::cli

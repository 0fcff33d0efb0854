#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "wpi/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "wpi");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = wpi::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(WPI_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("cli compute") {
  auto r = run({"--format", "structured", "compute", "--input", data("c6.edges")});
  CHECK(r.code == wpi::cli::kOk);
  CHECK(r.out.find("wp_formula = 3") != std::string::npos);
  CHECK(r.out.find("wp_oracle = 3") != std::string::npos);
  CHECK(r.out.find("c6 = 1") != std::string::npos);

  auto text = run({"compute", "--input", data("c6.edges")});
  CHECK(text.code == 0);
  CHECK(text.out.find("wp_oracle") != std::string::npos);

  auto k23 = run({"compute", "--input", data("k23.edges"), "--method", "formula"});
  CHECK(k23.code == wpi::cli::kPreconditionRefusal);
  CHECK_FALSE(k23.err.empty());

  auto k23_both = run({"--format", "structured", "compute", "--input", data("k23.edges")});
  CHECK(k23_both.code == wpi::cli::kOk);
  CHECK(k23_both.out.find("preconditions = fail") != std::string::npos);
  CHECK(k23_both.out.find("wp_oracle = 0") != std::string::npos);

  CHECK(run({"compute", "--input", data("disconnected.edges")}).code == wpi::cli::kDisconnected);
  auto bad = run({"compute", "--input", data("malformed.edges")});
  CHECK(bad.code == wpi::cli::kParse);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run({"compute", "--input", data("no-such-file.edges")}).code == wpi::cli::kParse);
}

TEST_CASE("cli build") {
  auto b = run({"--format", "structured", "build", "--spec", data("reference_h6.spec"), "--kind", "benzenoid"});
  CHECK(b.code == 0);
  CHECK(b.out.find("wp_oracle = 52") != std::string::npos);
  CHECK(b.out.find("wp_closed_form = 52") != std::string::npos);
  CHECK(b.out.find("agreement = yes") != std::string::npos);
  CHECK(b.out.find("# hexagon.0") != std::string::npos);

  auto p = run({"--format", "structured", "build", "--spec", data("reference_h6.spec"), "--kind", "phenylene"});
  CHECK(p.code == 0);
  CHECK(p.out.find("wp_oracle = 72") != std::string::npos);

  auto helicene = run({"build", "--spec", data("helicene6.spec")});
  CHECK(helicene.code == wpi::cli::kUnrealizable);
  CHECK(helicene.err.find("0") != std::string::npos);
  CHECK(helicene.err.find("5") != std::string::npos);

  CHECK(run({"build", "--spec", data("l1.spec"), "--kind", "phenylene"}).code == wpi::cli::kUnrealizable);
  CHECK(run({"build", "--spec", data("l1.spec")}).code == wpi::cli::kOk);
  CHECK(run({"build", "--spec", data("c6.edges")}).code == wpi::cli::kParse);
  CHECK(run({"build", "--spec", data("l1.spec"), "--kind", "coronoid"}).code == wpi::cli::kUsage);
}

TEST_CASE("cli enumerate and verify") {
  auto e = run({"--format", "structured", "enumerate", "--kind", "benzenoid", "--h", "4"});
  CHECK(e.code == 0);
  std::size_t systems = 0;
  for (std::size_t pos = 0; (pos = e.out.find("system = ", pos)) != std::string::npos; ++pos) ++systems;
  CHECK(systems == 5);
  CHECK(e.out.find("families = L") != std::string::npos);

  auto v = run({"verify", "--kind", "phenylene", "--h", "4"});
  CHECK(v.code == 0);

  auto vs = run({"--format", "structured", "verify", "--kind", "benzenoid", "--h", "5"});
  CHECK(vs.code == 0);
  CHECK(vs.out.find("status = fail") == std::string::npos);
  CHECK(vs.out.find("max = 43") != std::string::npos);
}

TEST_CASE("cli enumeration guard") {
  CHECK(run({"enumerate", "--h", "9"}).code == wpi::cli::kUsage);
  CHECK(run({"verify", "--h", "9"}).code == wpi::cli::kUsage);
  ::setenv(wpi::cli::kEnumerationLimitEnv, "3", 1);
  CHECK(wpi::cli::enumeration_limit() == 3);
  auto guarded = run({"enumerate", "--h", "4"});
  CHECK(guarded.code == wpi::cli::kUsage);
  CHECK(guarded.err.find("limit") != std::string::npos);
  CHECK(run({"enumerate", "--h", "3"}).code == 0);
  ::unsetenv(wpi::cli::kEnumerationLimitEnv);
  CHECK(wpi::cli::enumeration_limit() == 8);
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).code == wpi::cli::kUsage);
  CHECK(run({"frobnicate"}).code == wpi::cli::kUsage);
  CHECK(run({"compute"}).code == wpi::cli::kUsage);
  CHECK(run({"--help"}).code == wpi::cli::kOk);
  CHECK(run({"--format", "xml", "compute", "--input", data("c6.edges")}).code == wpi::cli::kUsage);
}

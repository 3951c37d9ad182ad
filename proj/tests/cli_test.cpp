#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "kahler/derivation.hpp"
#include "kahler/parse.hpp"

using namespace kahler;
using nlohmann::json;

namespace {

// KAHLER_CLI_PATH and KAHLER_TEST_DIR come from the build system.

struct RunResult {
  int exit_code = -1;
  std::string out;
};

/// Run the CLI with the given arguments, capturing stdout.  stderr is
/// dropped so expected failures don't pollute the test log.
RunResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(KAHLER_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(KAHLER_TEST_DIR) + "/fixtures/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing file ", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string golden(const std::string& name) {
  return read_file(std::string(KAHLER_TEST_DIR) + "/golden/" + name);
}

}  // namespace

TEST_CASE("diff prints the gradient") {
  auto r = run_cli("diff --vars x,y \"x^2*y + 3*x\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "(2*x*y + 3, x^2)\n");

  // constants die; --vars defaults to a single variable
  r = run_cli("diff \"5\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "(0)\n");

  // Frobenius kernel: d/dx x^5 = 0 over F_5
  r = run_cli("--field fp:5 diff --vars x \"x^5\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "(0)\n");

  r = run_cli("--json diff --vars x \"x^3\"");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["input"] == "x^3");
  CHECK(j["gradient"][0]["partial"] == "3*x^2");
}

TEST_CASE("omega output matches the golden files") {
  for (const char* name :
       {"free2", "dual", "circle", "cusp", "hyperbola"}) {
    CAPTURE(name);
    auto r = run_cli("omega " + fixture(std::string(name) + ".alg"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == golden("omega_" + std::string(name) + ".txt"));
  }

  auto r = run_cli("--json omega " + fixture("circle.alg"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("omega_circle.json"));

  // inline declarations work the same as files
  r = run_cli("omega \"algebra Circle { vars: x, y; "
              "relations: x^2 + y^2 - 1; }\"");
  CHECK(r.out == golden("omega_circle.txt"));

  // the zero algebra has only the zero module
  r = run_cli("omega \"algebra Z { vars: x, y; relations: 1; }\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("rank: 0") != std::string::npos);
}

TEST_CASE("axioms runs are deterministic and byte-identical in serial") {
  const std::string args = "--samples 12 --seed 9 axioms --vars x,y";
  auto first = run_cli(args);
  auto second = run_cli(args);
  auto serial = run_cli("--serial " + args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out == serial.out);

  auto j = json::parse(first.out);
  CHECK(j["schema"] == 1);
  CHECK(j["field"] == "q");
  CHECK(j["seed"] == 9);
  CHECK(j["pass"] == true);
  // every suite is present exactly once
  std::vector<std::string> got;
  for (const auto& s : j["suites"]) got.push_back(s["axiom"]);
  const std::vector<std::string> want = {
      "d1", "d2", "d3", "d4",
      "monad-unit-left", "monad-unit-right", "monad-assoc",
      "naturality(endo)", "naturality(to-plane)",
      "alt-square", "alt-generators", "alt-leibniz", "alt-constants",
      "alt-linear"};
  CHECK(got == want);

  // a different seed samples different instances but still passes
  auto other = run_cli("--samples 12 --seed 10 axioms --vars x,y");
  CHECK(other.exit_code == 0);
  CHECK(other.out != first.out);
}

TEST_CASE("axioms suites can be selected and run over F_p") {
  auto r = run_cli("--field fp:5 --samples 10 axioms --vars x,y,z "
                   "--suite monad");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["field"] == "fp:5");
  CHECK(j["suites"].size() == 3);
}

TEST_CASE("check-derivation accepts the rotation field on the circle") {
  auto r = run_cli("--samples 10 check-derivation --algebra " +
                   fixture("circle.alg") +
                   " --module \"module M over Circle { rank: 1; }\""
                   " --images \"(y)\" --images \"(-x)\"");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["pass"] == true);
  REQUIRE(j["suites"].size() == 4);
  CHECK(j["suites"][0]["axiom"] == "derivation-relations");
  CHECK(j["suites"][3]["axiom"] == "beck-T-derivation");
}

TEST_CASE("relation violations carry a witness that re-evaluates") {
  auto r = run_cli("check-derivation --algebra " + fixture("dual.alg") +
                   " --module \"module M over Dual { rank: 1; }\""
                   " --images \"(1)\"");
  CHECK(r.exit_code == 1);
  auto j = json::parse(r.out);
  CHECK(j["pass"] == false);
  const auto& failure = j["suites"][0]["failures"][0];

  // rebuild the same objects and push the printed witness back through
  const ParsedAlgebra pa = parse_algebra_decl(
      read_file(fixture("dual.alg")), MonomialOrder::degrevlex,
      Field::rationals());
  auto dual = AlgebraPresentation::make(pa.name, pa.ctx, pa.relations);
  auto m = ModulePresentation::free_module(dual, 1);
  std::vector<ModuleElement> images = {
      m->element(parse_poly_tuple("(1)", dual->context()))};

  Poly witness =
      parse_poly(failure["input"].get<std::string>(), dual->context());
  ModuleElement lhs = m->element(
      parse_poly_tuple(failure["lhs"].get<std::string>(), dual->context()));
  ModuleElement rhs = m->element(
      parse_poly_tuple(failure["rhs"].get<std::string>(), dual->context()));
  CHECK(chain_rule_apply(dual, m, images, witness) == lhs);
  CHECK(rhs == m->zero_element());
  CHECK_FALSE(lhs == rhs);
}

TEST_CASE("wext eval is forward-mode differentiation") {
  auto r = run_cli("wext eval --algebra " + fixture("dual.alg") +
                   " --module \"module M over Dual { rank: 1; }\""
                   " --pair \"x | (1)\" \"s1^2 + 3*s1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3*x | (2*x + 3)\n");

  r = run_cli("--json wext eval --algebra \"algebra Free { vars: u; }\""
              " --module \"module N over Free { rank: 2; }\""
              " --pair \"u | (1, u)\" --pair \"u^2 | (0, 1)\""
              " \"s1*s2 + s2\"");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["base"] == "u^3 + u^2");
  CHECK(j["tangent"] == "(u^2, u^3 + u + 1)");
}

TEST_CASE("exit codes follow the contract") {
  // 2: syntax or usage errors
  CHECK(run_cli("diff --vars x \"x +* 1\"").exit_code == 2);
  CHECK(run_cli("diff --vars x \"x + z\"").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("--samples 0 axioms --vars x").exit_code == 2);
  // one --images tuple per generator
  CHECK(run_cli("check-derivation --algebra " + fixture("circle.alg") +
                " --module \"module M over Circle { rank: 1; }\""
                " --images \"(y)\"")
            .exit_code == 2);

  // 3: semantic validation
  CHECK(run_cli("--field fp:6 diff --vars x \"x\"").exit_code == 3);
  CHECK(run_cli("omega /no/such/file.alg").exit_code == 3);
  CHECK(run_cli("check-derivation --algebra " + fixture("dual.alg") +
                " --module \"module M over Wrong { rank: 1; }\""
                " --images \"(1)\"")
            .exit_code == 3);

  // 0: help
  CHECK(run_cli("--help").exit_code == 0);
}

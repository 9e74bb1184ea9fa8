#include <sstream>

#include "bindecomp/cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = bindecomp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("primary decomposition on the command line") {
  auto r = run_cli({"primary-decomposition", "--ring", "x, y", "--ideal", "x^2-x*y, x*y-y^2"});
  CHECK(r.code == 0);
  CHECK(r.out == "-- split on x, exponent 1\n{ideal(x - y), ideal(x, y^2)}\n");
  auto c = run_cli({"primary-decomposition", "--ring", "x", "--ideal", "x^3-1"});
  CHECK(c.code == 0);
  CHECK(c.out == "-- cyclotomic order 3 (ww3)\n{ideal(x - 1), ideal(x - ww3), ideal(x - ww3^2)}\n");
  auto rad = run_cli({"radical", "--ring", "x, y", "--ideal", "x - y"});
  CHECK(rad.code == 0);
  CHECK(rad.out == "ideal(x - y)\n");
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"radical", "--ring", "x, y, z", "--ideal", "x^2*y - z + 1"}).code == 2);
  CHECK(run_cli({"radical", "--ring", "x, y", "--ideal", "2*x - y"}).code == 3);
  CHECK(run_cli({"hull", "--ring", "x, y", "--ideal", "x^2-x*y, x*y-y^2"}).code == 3);
  CHECK(run_cli({"radical", "--ring", "x", "--ideal", "x - 1, x"}).code == 3);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"radical", "--format", "yaml", "--ring", "x", "--ideal", "x"}).code == 2);
  CHECK(run_cli({"radical", "--ring", "x", "--ideal", "x^9223372036854775807*x"}).code == 4);
  CHECK(run_cli({"radical", "/nonexistent/file"}).code == 2);
}

TEST_CASE("every command runs and verifies") {
  for (const auto& cmd : bindecomp::cli::commands()) {
    if (cmd == "witness-bench") continue;
    for (const std::string gens : {"x^2, x*b - x", "x*b^2 - x, x^3"}) {
      auto r = run_cli({cmd, "--ring", "x, b", "--ideal", gens, "--verify"});
      INFO(cmd << " " << gens << ": " << r.err);
      CHECK(r.code == 0);
      CHECK(r.out.find("verified: true") != std::string::npos);
    }
  }
}

TEST_CASE("json output round-trips") {
  auto r = run_cli({"primary-decomposition", "--ring", "x, y, z", "--ideal", "x^2*y - z^2, x*z - y, y^3 - x*z^2",
                    "--format", "json", "--verify"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["verified"] == true);
  CHECK(doc["stats"].contains("colon_computations"));
  REQUIRE(doc["components"].size() > 0);
  for (const auto& c : doc["components"]) {
    CHECK(c.contains("cyclotomic_order"));
    CHECK(c["embedded"].is_boolean());
    std::string joined;
    for (const auto& g : c["generators"]) joined += (joined.empty() ? "" : ", ") + g.get<std::string>();
    auto I = parse_generators(ring_of("x, y, z"), joined).ideal();
    CHECK(canonical_generators(I) == c["generators"].get<std::vector<std::string>>());
  }
}

TEST_CASE("lex printing") {
  auto r = run_cli({"radical", "--ring", "x, y", "--ideal", "x - y^2", "--order", "lex"});
  CHECK(r.out == "ideal(x - y^2)\n");
  auto d = run_cli({"radical", "--ring", "x, y", "--ideal", "x - y^2"});
  CHECK(d.out == "ideal(y^2 - x)\n");
}

TEST_CASE("witness benchmark") {
  auto r = run_cli({"witness-bench", "--size", "64", "--seeds", "5", "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["exhaustive"] == 63);
  CHECK(doc["seeds"].size() == 5);
  CHECK(doc["median"].get<int>() < 20);
  CHECK(run_cli({"witness-bench", "--family", "tree"}).code == 3);
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args = {"associated-primes", "--ring", "x, y, z", "--ideal",
                                   "x*y - z^2, x^2 - y*z, x^3*z - x*y^2", "--format", "json"};
  auto a = run_cli(args), b = run_cli(args);
  CHECK(a.out == b.out);
  args.push_back("--seed");
  args.push_back("7");
  auto c = run_cli(args);
  CHECK(nlohmann::json::parse(c.out)["components"] == nlohmann::json::parse(a.out)["components"]);
}

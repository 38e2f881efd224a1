#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "pencilkit/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pk::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("invariance subcommand prints g") {
  const Run r = run({"invariance", "--map", "[x^2:y^2:z^2+x*y]", "--A", "x*y", "--B", "z^2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "g = [u^2 : u^2 + 2*u*v + v^2]"));
  CHECK(contains(r.out, "seed: 0x5eed2026"));
}

TEST_CASE("classify subcommand") {
  const Run r = run({"classify", "--map", "[x^2:y^2:z^2+x*y]", "--A", "x*y", "--B", "z^2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Binomial h=1 k=2"));
}

TEST_CASE("exit codes") {
  CHECK(run({"invariance", "--map", "[x^2:y^2:z^2]", "--A", "x+z", "--B", "y"}).code == 1);
  CHECK(run({"endo-info", "--map", "[x^2:x*y:x*z]"}).code == 1);
  CHECK(run({"endo-info", "--map", "[x^2:y^2:z^2]"}).code == 0);
  CHECK(run({"pencil-info", "--A", "x + y^2", "--B", "z^2"}).code == 2);
  CHECK(run({"pencil-info", "--A", "2xy", "--B", "z^2"}).code == 2);
  CHECK(run({"pencil-info", "--A", "x^2", "--B", "x*y"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"--degree-bound", "3", "pencil-info", "--A", "x", "--B", "y"}).code == 2);
  CHECK(run({"semiconj", "--phi", "[u^2:v^2]", "--gprime", "[u^2+u*v:v^2]"}).code == 1);
  CHECK(run({"generate", "--d", "3", "--k", "3", "--h", "1", "--l", "1", "--c", "1", "--swap"}).code == 2);
  CHECK(run({"lemma3", "--map", "[x^2:y^2:z^2+x*y]", "--A", "x*y", "--B", "z^2"}).code == 0);
  CHECK(run({"line-audit", "--A", "x*y", "--B", "z^2", "--line", "u,u+v,v"}).code == 0);
  CHECK(run({"classify", "--map", "[x^2:y^2:z^2]", "--A", "x^2", "--B", "y^2"}).code == 0);
}

TEST_CASE("diophantine subcommand") {
  const Run r = run({"--json", "diophantine", "--kind", "section2", "--kmax", "10000", "--mmax", "1000"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["solutions"].size() == 2);
  CHECK(j["solutions"][1]["k"] == 90);
  CHECK(run({"diophantine", "--kind", "fourline"}).code == 2);
}

TEST_CASE("generate self-verifies") {
  const Run r = run({"generate", "--d", "3", "--k", "2", "--h", "1", "--l", "1", "--c", "2", "--swap"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "[y^3 : x^3 : 2*x*y*z + z^3]"));
  CHECK(run({"generate", "--grid"}).code == 0);
}

TEST_CASE("JSON output is deterministic and carries the seed") {
  const std::vector<std::string> args{"--json", "pencil-info", "--A", "x^2*y", "--B", "z^3"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["seed"] == "0x5eed2026");
  CHECK(j["e"] == 3);
  const Run s = run({"--json", "--seed", "42", "pencil-info", "--A", "x", "--B", "y"});
  CHECK(nlohmann::json::parse(s.out)["seed"] == "0x2a");
}

TEST_CASE("errors in JSON mode") {
  const Run r = run({"--json", "pencil-info", "--A", "x + * y", "--B", "z"});
  CHECK(r.code == 2);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["error"]["kind"] == "SyntaxError");
  CHECK(j["error"]["offset"] == 4);
}

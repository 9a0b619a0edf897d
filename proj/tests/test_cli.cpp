#include "z22/catalog.hpp"
#include "z22/cli.hpp"

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <sstream>

using namespace z22;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, {in, out, err});
  return {code, out.str(), err.str()};
}

Result shell(const std::string& command) {
  const std::string full = "(" + command + ") 2>/dev/null";
  FILE* p = popen(full.c_str(), "r");
  REQUIRE(p);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int status = pclose(p);
  return {WEXITSTATUS(status), out, ""};
}

const std::string kCli = Z22_CLI_PATH;

}  // namespace

TEST_CASE("check on the builtin algebra") {
  const auto algebra = run({"builtin", "u11-z22"});
  REQUIRE(algebra.code == 0);
  const auto r = run({"check"}, algebra.out);
  CHECK(r.code == 0);
  const auto j = io::parse_text(r.out);
  CHECK(j["checked"] == 364);
  CHECK(j["failures"].empty());
  CHECK(r.err.find("364 triples") != std::string::npos);
}

TEST_CASE("check on a mutated algebra lists the failing triple") {
  auto j = io::parse_text(run({"builtin", "u11-z22"}).out);
  j["brackets"][0]["terms"][0]["coeff"] = "5";
  const auto r = run({"check"}, io::dump(j));
  CHECK(r.code == 1);
  const auto report = io::parse_text(r.out);
  REQUIRE_FALSE(report["failures"].empty());
  CHECK(report["failures"][0]["triple"].size() == 3);
}

TEST_CASE("constraints and assemble") {
  const auto ref = run({"builtin", "paper-solution"}).out;
  CHECK(run({"constraints"}, ref).code == 0);
  const auto A = run({"assemble", "--name", "u11-z22"}, ref);
  CHECK(A.code == 0);
  CHECK(A.out == run({"builtin", "u11-z22"}).out);
  auto bad = io::parse_text(ref);
  bad["l"][0][0][0] = "1";
  CHECK(run({"constraints"}, io::dump(bad)).code == 1);
  const auto refused = run({"assemble"}, io::dump(bad));
  CHECK(refused.code == 1);
  CHECK_FALSE(io::parse_text(refused.out)["failures"].empty());
  CHECK(run({"assemble", "--no-verify"}, io::dump(bad)).code == 0);
}

TEST_CASE("decompose inverts the builtin") {
  const auto d = run({"decompose"}, run({"builtin", "u11-z22"}).out);
  CHECK(d.code == 0);
  CHECK(d.out == run({"builtin", "paper-solution"}).out);
}

TEST_CASE("classify") {
  const auto one = run({"classify", "1,0", "1,0", "1,0"});
  CHECK(one.code == 0);
  CHECK(io::parse_text(one.out)["shape"] == "comm-anti");
  const auto all = io::parse_text(run({"classify"}).out);
  CHECK(all["classes"] == 20);
  CHECK(all["shape_counts"]["anti-anti"] == 3);
  CHECK(run({"classify", "1,0", "2,0", "1,0"}).code == 2);
  CHECK(run({"classify", "1,0"}).code == 2);
}

TEST_CASE("solve") {
  const auto r = run({"solve", "--entry-pool=-1,0,1,2"});
  CHECK(r.code == 0);
  const auto j = io::parse_text(r.out);
  REQUIRE(j["solutions"].size() == 1);
  CHECK(io::coefficients_from_json(j["solutions"][0]) == catalog::paper_solution());
  CHECK(run({"solve", "--cap", "2"}).code == 2);
  CHECK(run({"solve", "--entry-pool", "a,b"}).code == 2);
  const auto canon = io::parse_text(run({"solve", "--canonicalize"}).out);
  CHECK(canon["solutions"].size() == 1);
}

TEST_CASE("rep-verify") {
  const auto r = run({"rep-verify", "--p", "1"});
  CHECK(r.code == 0);
  const auto j = io::parse_text(r.out);
  CHECK(j["entries"].size() == 78);
  CHECK(j["convention"].get<std::string>().find("b_k") != std::string::npos);
  CHECK(run({"rep-verify", "--p", "1", "--margin", "2"}).code == 2);
  CHECK(run({"rep-verify", "--p", "3"}).code == 2);
  CHECK(run({"rep-verify", "--p", "1", "--tol", "1e-30"}).code == 1);
}

TEST_CASE("input and usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"builtin", "nothing"}).code == 2);
  CHECK(run({"check"}, "{ broken").code == 2);
  const auto missing = run({"check", "/nonexistent/file.json"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("/nonexistent/file.json") != std::string::npos);
  auto j = io::parse_text(run({"builtin", "u11-z22"}).out);
  j["brackets"][2]["terms"][0]["gen"] = "W9";
  const auto unknown = run({"check"}, io::dump(j));
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("$.brackets[2].terms[0].gen") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("shell pipelines through the binary") {
  CHECK(shell(kCli + " builtin paper-solution | " + kCli + " assemble | " + kCli + " check >/dev/null").code == 0);
  const auto decomposed = shell(kCli + " builtin u11-z22 | " + kCli + " decompose");
  CHECK(decomposed.code == 0);
  CHECK(decomposed.out == shell(kCli + " builtin paper-solution").out);
  CHECK(shell(kCli + " check /nonexistent.json").code == 2);
}

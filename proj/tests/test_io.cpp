#include "z22/catalog.hpp"
#include "z22/io.hpp"

#include <catch_amalgamated.hpp>

using namespace z22;
using Catch::Matchers::ContainsSubstring;

namespace {

io::Json algebra_text() {
  return io::parse_text(R"({
    "name": "tiny",
    "generators": [{"name": "E", "degree": [0, 0]}, {"name": "F", "degree": [0, 1]}],
    "brackets": [{"a": "E", "b": "F", "terms": [{"gen": "F", "coeff": "1/2"}]},
                 {"a": "F", "b": "F", "terms": [{"gen": "E", "coeff": "2"}]}]
  })");
}

}  // namespace

TEST_CASE("algebra files round-trip exactly") {
  const auto A = catalog::u11_z22_algebra();
  const auto j = io::to_json(A);
  CHECK(io::algebra_from_json(j) == A);
  CHECK(io::dump(j) == io::dump(io::to_json(io::algebra_from_json(io::parse_text(io::dump(j))))));
  const auto tiny = io::algebra_from_json(algebra_text());
  CHECK(tiny.entry(1, 0) == LinearCombination{{1, Rational(-1, 2)}});
  CHECK(io::algebra_from_json(io::to_json(tiny)) == tiny);
}

TEST_CASE("one-sided entries survive serialization") {
  const auto A = catalog::u11_z22_algebra();
  AlgebraBuilder b(A.name());
  for (const auto& g : A.generators()) b.add_generator(g.name, g.degree);
  for (const auto& [key, value] : A.table()) b.set_ordered(key.first, key.second, value);
  b.set_ordered(A.index("Y1"), A.index("Q1"), {{A.index("Z2"), Rational(7, 3)}});
  const auto M = std::move(b).build();
  const auto back = io::algebra_from_json(io::to_json(M));
  CHECK(back == M);
  CHECK_FALSE(check_antisymmetry(back).passed());
}

TEST_CASE("zero products are omitted") {
  const auto j = io::to_json(catalog::u11_z22_algebra());
  for (const auto& br : j["brackets"]) CHECK_FALSE(br["terms"].empty());
}

TEST_CASE("algebra parse errors name the path") {
  auto j = algebra_text();
  j["brackets"][0]["terms"][0]["coeff"] = "1/0";
  CHECK_THROWS_WITH(io::algebra_from_json(j), ContainsSubstring("$.brackets[0].terms[0].coeff"));
  j = algebra_text();
  j["brackets"][1]["b"] = "G";
  CHECK_THROWS_WITH(io::algebra_from_json(j), ContainsSubstring("$.brackets[1].b") && ContainsSubstring("'G'"));
  j = algebra_text();
  j["generators"][1]["degree"] = {0, 3};
  CHECK_THROWS_WITH(io::algebra_from_json(j), ContainsSubstring("$.generators[1].degree"));
  j = algebra_text();
  j.erase("name");
  CHECK_THROWS_WITH(io::algebra_from_json(j), ContainsSubstring("$.name"));
  j = algebra_text();
  j["brackets"].push_back(j["brackets"][0]);
  CHECK_THROWS_WITH(io::algebra_from_json(j), ContainsSubstring("duplicate"));
  j = algebra_text();
  j["generators"].push_back(j["generators"][0]);
  CHECK_THROWS_WITH(io::algebra_from_json(j), ContainsSubstring("$.generators[2].name"));
  CHECK_THROWS_WITH(io::parse_text("{ nope"), ContainsSubstring("malformed JSON"));
}

TEST_CASE("coefficient sets round-trip exactly") {
  for (const auto& cs : {catalog::paper_solution(), catalog::trivial_solution()}) {
    const auto j = io::to_json(cs);
    CHECK(io::coefficients_from_json(j) == cs);
    CHECK(io::coefficients_from_json(io::parse_text(io::dump(j))) == cs);
  }
  const auto j = io::to_json(catalog::paper_solution());
  CHECK(j["dimL01"] == 4);
  CHECK(j["C"][0] == io::Json::parse(R"([1, 2, 2, "1"])"));
  CHECK(j["K"][0][0][0] == "-1/2");
}

TEST_CASE("coefficient-set parse errors name the path") {
  auto j = io::to_json(catalog::paper_solution());
  j["H"][1][0][1] = "3";
  CHECK_THROWS_WITH(io::coefficients_from_json(j), ContainsSubstring("$.H[1]") && ContainsSubstring("symmetric"));
  j = io::to_json(catalog::paper_solution());
  j["l"][2][1] = {"1"};
  CHECK_THROWS_WITH(io::coefficients_from_json(j), ContainsSubstring("$.l[2][1]"));
  j = io::to_json(catalog::paper_solution());
  j["C"][0][0] = 5;
  CHECK_THROWS_WITH(io::coefficients_from_json(j), ContainsSubstring("$.C[0][0]"));
  j = io::to_json(catalog::paper_solution());
  j["m"].erase(0);
  CHECK_THROWS_WITH(io::coefficients_from_json(j), ContainsSubstring("$.m"));
  j = io::to_json(catalog::paper_solution());
  j["n"][0][0][0] = "x";
  CHECK_THROWS_WITH(io::coefficients_from_json(j), ContainsSubstring("$.n[0][0][0]"));
}

TEST_CASE("solver config round-trips") {
  SolverConfig c;
  c.entry_pool = {Rational(-1), Rational(1, 3)};
  c.sparsity_budget = 3;
  c.canonicalize = true;
  c.partial = catalog::paper_solution();
  const auto back = io::solver_config_from_json(io::to_json(c));
  CHECK(back.entry_pool == c.entry_pool);
  CHECK(back.sparsity_budget == 3);
  CHECK(back.canonicalize);
  CHECK(*back.partial == *c.partial);
  const auto defaults = io::solver_config_from_json(io::Json::object());
  CHECK(defaults.entry_pool.size() == 7);
  CHECK_THROWS_WITH(io::solver_config_from_json(io::parse_text(R"({"canonicalize": 1})")),
                    ContainsSubstring("$.canonicalize"));
}

TEST_CASE("report formats") {
  const auto A = catalog::u11_z22_algebra();
  const auto j = io::to_json(check_all_jacobi(A), A);
  CHECK(j["algebra"] == "u11-z22");
  CHECK(j["checked"] == 364);
  CHECK(j["failures"].empty());
  auto cs = catalog::paper_solution();
  cs.u[0](0, 0) += 1;
  const auto r = io::to_json(check_constraints(cs));
  REQUIRE_FALSE(r["failures"].empty());
  CHECK(r["failures"][0]["family"] == "u-representation");
  CHECK(r["failures"][0]["class"] == "XXY");
  CHECK(io::format_double(0.1) == "0.10000000000000001");
}

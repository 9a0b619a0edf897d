#include "z22/catalog.hpp"
#include "z22/jacobi.hpp"

#include <catch_amalgamated.hpp>

using namespace z22;

TEST_CASE("u(1,1) structure constants") {
  const auto C = catalog::u11_structure_constants();
  CHECK(C(0, 1, 1) == 1);
  CHECK(C(1, 0, 1) == -1);
  CHECK(C(0, 2, 2) == -1);
  CHECK(C(1, 2, 0) == -2);
  int nonzero = 0;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 4; ++c) {
        nonzero += C(a, b, c) != 0;
        CHECK(C(a, b, c) == -C(b, a, c));
        if (a == 3 || b == 3 || c == 3) CHECK(C(a, b, c) == 0);
      }
  CHECK(nonzero == 6);
}

TEST_CASE("golden algebra frozen entries") {
  const auto A = catalog::u11_z22_algebra();
  REQUIRE(A.size() == 12);
  CHECK(A.name() == "u11-z22");
  const auto lc = [&](std::initializer_list<std::pair<const char*, int>> t) {
    std::vector<std::pair<std::string, Rational>> v;
    for (const auto& [n, c] : t) v.emplace_back(n, Rational(c));
    return A.combination(v);
  };
  CHECK(product(A, "X1", "X2") == lc({{"X2", 1}}));
  CHECK(product(A, "Q1", "Q2") == lc({{"X1", 2}, {"X4", -2}}));
  CHECK(product(A, "Y1", "Y2") == lc({{"X1", 4}}));
  CHECK(product(A, "Z1", "Z2") == lc({{"X4", 4}}));
  CHECK(product(A, "Y2", "Z2") == lc({{"Q1", 2}}));
  CHECK(product(A, "Q1", "Y1") == lc({{"Z2", 1}}));
  CHECK(product(A, "X4", "Z1") == A.combination({{"Z1", Rational(1, 2)}}));
  CHECK(product(A, "X4", "Y1").empty());
  CHECK(product(A, "Y1", "Z1").empty() == false);
  std::size_t per_degree[4] = {};
  for (const auto& g : A.generators()) ++per_degree[g.degree.index()];
  CHECK(per_degree[0] == 4);
  CHECK(per_degree[1] == 4);
  CHECK(per_degree[2] == 2);
  CHECK(per_degree[3] == 2);
}

TEST_CASE("Z2 sub-algebra is closed and consistent") {
  const auto A = catalog::u11_z2_subalgebra();
  CHECK(A.size() == 8);
  CHECK(check_closure(A).passed());
  CHECK(check_antisymmetry(A).passed());
  CHECK(check_all_jacobi(A).passed());
}

TEST_CASE("ref solution shapes") {
  const auto cs = catalog::paper_solution();
  CHECK_NOTHROW(validate_shape(cs));
  CHECK(cs.dim01 == 4);
  CHECK(cs.dim10 == 2);
  CHECK(cs.n[0] == RationalMatrix{{0, 0}, {0, 2}});
  CHECK(cs.s[1] == RationalMatrix{{4, 0}, {0, 0}});
  const auto trivial = catalog::trivial_solution(3, 1);
  CHECK(trivial.dim01 == 3);
  CHECK(trivial.l.size() == 3);
  CHECK(trivial.K[0].is_zero());
}

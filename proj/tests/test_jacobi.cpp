#include "z22/catalog.hpp"
#include "z22/jacobi.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace z22;

namespace {

bool same_failures(const JacobiReport& x, const JacobiReport& y) {
  if (x.checked != y.checked || x.failures.size() != y.failures.size()) return false;
  for (std::size_t k = 0; k < x.failures.size(); ++k)
    if (x.failures[k].triple != y.failures[k].triple || x.failures[k].residual != y.failures[k].residual) return false;
  return true;
}

/// Adds `delta` to one coefficient of an existing entry, keeping graded antisymmetry.
GradedAlgebra mutate(const GradedAlgebra& A, std::size_t which, const Rational& delta) {
  std::vector<std::pair<std::size_t, std::size_t>> keys;
  for (const auto& [key, _] : A.table())
    if (key.first <= key.second) keys.push_back(key);
  const auto [a, b] = keys[which % keys.size()];
  AlgebraBuilder builder(A.name());
  for (const auto& g : A.generators()) builder.add_generator(g.name, g.degree);
  for (const auto& [key, value] : A.table()) builder.set_ordered(key.first, key.second, value);
  auto lc = A.entry(a, b);
  accumulate(lc, lc.begin()->first, delta);
  builder.set_bracket(a, b, lc);
  return std::move(builder).build();
}

}  // namespace

TEST_CASE("triple enumeration counts multisets") {
  CHECK(generator_triples(12).size() == 364);
  CHECK(generator_triples(1).size() == 1);
  const auto t = generator_triples(3);
  CHECK(t.front() == std::array<std::size_t, 3>{0, 0, 0});
  CHECK(t.back() == std::array<std::size_t, 3>{2, 2, 2});
  CHECK(std::is_sorted(t.begin(), t.end()));
}

TEST_CASE("golden algebra satisfies every generalized Jacobi identity") {
  const auto r = check_all_jacobi(catalog::u11_z22_algebra());
  CHECK(r.checked == 364);
  CHECK(r.passed());
  const auto z2 = check_all_jacobi(catalog::u11_z2_subalgebra());
  CHECK(z2.checked == 120);
  CHECK(z2.passed());
}

TEST_CASE("shape classification") {
  CHECK(classify_shapes({0, 0}, {0, 0}, {0, 0}).shape == JacobiShape::CommComm);
  CHECK(classify_shapes({0, 1}, {0, 1}, {0, 1}).shape == JacobiShape::CommAnti);
  CHECK(classify_shapes({1, 0}, {1, 0}, {1, 0}).shape == JacobiShape::CommAnti);
  CHECK(classify_shapes({0, 0}, {0, 1}, {0, 1}).shape == JacobiShape::Mixed);
  CHECK(classify_shapes({0, 1}, {1, 0}, {1, 1}).shape == JacobiShape::AntiAnti);
  const auto m = classify_shapes({0, 0}, {0, 1}, {0, 1});
  CHECK(m.terms[0] == TermKinds{BracketKind::Commutator, BracketKind::Anticommutator});
  CHECK(m.terms[1] == TermKinds{BracketKind::Anticommutator, BracketKind::Commutator});
  CHECK(std::string(to_string(JacobiShape::Mixed)) == "mixed-anti-in-comm");
  for (auto a : kAllDegrees)
    for (auto b : kAllDegrees)
      for (auto c : kAllDegrees) {
        const auto s = classify_shapes(a, b, c).shape;
        CHECK(classify_shapes(b, c, a).shape == s);
        CHECK(classify_shapes(b, a, c).shape == s);
      }
}

TEST_CASE("identity census") {
  const auto all = identity_classes();
  REQUIRE(all.size() == 20);
  int counts[4] = {};
  for (const auto& c : all) ++counts[static_cast<int>(classify_shapes(c.degrees[0], c.degrees[1], c.degrees[2]).shape)];
  CHECK(counts[0] == 7);
  CHECK(counts[1] == 4);
  CHECK(counts[2] == 6);
  CHECK(counts[3] == 3);
  const auto z2 = identity_classes({{0, 0}, {0, 1}});
  REQUIRE(z2.size() == 4);
  for (const auto& c : z2)
    CHECK(classify_shapes(c.degrees[0], c.degrees[1], c.degrees[2]).shape != JacobiShape::AntiAnti);
}

TEST_CASE("single-entry mutations break some Jacobi identity") {
  const auto A = catalog::u11_z22_algebra();
  std::mt19937 rng(7);
  for (int k = 0; k < 40; ++k) {
    static const int kDeltas[] = {-2, -1, 1, 2};
    const Rational delta(kDeltas[rng() % 4]);
    const auto M = mutate(A, rng(), delta);
    CHECK(check_antisymmetry(M).passed());
    CHECK_FALSE(check_all_jacobi(M).passed());
  }
}

TEST_CASE("one-sided corruption is caught by antisymmetry") {
  const auto A = catalog::u11_z22_algebra();
  AlgebraBuilder b(A.name());
  for (const auto& g : A.generators()) b.add_generator(g.name, g.degree);
  for (const auto& [key, value] : A.table()) b.set_ordered(key.first, key.second, value);
  b.set_ordered(A.index("Q2"), A.index("Q1"), {});
  const auto M = std::move(b).build();
  CHECK_FALSE(check_antisymmetry(M).passed());
}

TEST_CASE("cyclic variants of a jacobiator agree up to sign") {
  const auto M = mutate(catalog::u11_z22_algebra(), 11, Rational(1));
  for (const auto& t : generator_triples(M.size())) {
    const auto j0 = jacobiator(M, t[0], t[1], t[2]);
    const auto j1 = jacobiator(M, t[1], t[2], t[0]);
    CHECK((j1 == j0 || j1 == scaled(j0, Rational(-1))));
  }
}

TEST_CASE("reports do not depend on the worker count") {
  const auto M = mutate(catalog::u11_z22_algebra(), 3, Rational(2));
  const auto r1 = check_all_jacobi(M, 1);
  REQUIRE_FALSE(r1.passed());
  CHECK(same_failures(r1, check_all_jacobi(M, 3)));
  CHECK(same_failures(r1, check_all_jacobi(M, 8)));
  for (std::size_t k = 1; k < r1.failures.size(); ++k) CHECK(r1.failures[k - 1].triple < r1.failures[k].triple);
}

TEST_CASE("name-based jacobiator") {
  const auto A = catalog::u11_z22_algebra();
  CHECK(jacobiator(A, "Y1", "Z2", "Q3").empty());
  CHECK_THROWS_AS(jacobiator(A, "Y1", "nope", "Q3"), InputError);
}

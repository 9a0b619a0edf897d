#include "z22/catalog.hpp"
#include "z22/oscillator.hpp"
#include "z22/structure.hpp"

#include <catch_amalgamated.hpp>

using namespace z22;

namespace {

constexpr double kTol = 1e-10;

const GreenSystem& green(int p) {
  static const GreenSystem g1 = green_combined(1, 8);
  static const GreenSystem g2 = green_combined(2, 8);
  return p == 1 ? g1 : g2;
}

double worst(const std::vector<NamedResidual>& rs) {
  double w = 0;
  for (const auto& r : rs) w = std::max(w, r.residual);
  return w;
}

/// <0| x^k y^k |0> on the first basis state.
std::complex<double> moment(const ComplexMatrix& x, const ComplexMatrix& y, int k) {
  ComplexMatrix m = ComplexMatrix::Identity(x.rows(), x.cols());
  for (int i = 0; i < k; ++i) m = m * x;
  for (int i = 0; i < k; ++i) m = m * y;
  return m(0, 0);
}

}  // namespace

TEST_CASE("single-mode paraboson ladder") {
  CHECK_THROWS_AS(parabose_single(2, 5), InputError);
  CHECK_THROWS_AS(parabose_single(0, 8), InputError);
  const auto m = parabose_single(3, 10);
  CHECK(m.lower(0, 1) == std::complex<double>(std::sqrt(3.0)));
  CHECK(m.lower(1, 2) == std::complex<double>(std::sqrt(2.0)));
  CHECK(m.lower(2, 3) == std::complex<double>(std::sqrt(5.0)));
  CHECK(max_abs(m.raise - m.lower.adjoint()) == 0);
  for (int p = 1; p <= 4; ++p) {
    const auto s = parabose_single(p, p + 8);
    const auto safe = safe_subspace(s.space, 4);
    CHECK(worst(parabose_relations(s.lower, s.raise, safe)) < kTol);
    // {a, a^dag}|0> = p|0>
    CHECK(std::abs(anti(s.lower, s.raise)(0, 0) - double(p)) < kTol);
  }
  const auto b = parabose_single(1, 8);
  const auto safe = safe_subspace(b.space, 4);
  CHECK(safe_residual(comm(b.lower, b.raise) - ComplexMatrix::Identity(9, 9), safe) < kTol);
}

TEST_CASE("single-mode parafermion") {
  for (int p = 1; p <= 4; ++p) {
    const auto f = parafermi_single(p);
    CHECK(f.lower.rows() == p + 1);
    const auto safe = safe_subspace(f.space, 4);
    CHECK(safe.states.size() == static_cast<std::size_t>(p + 1));
    const auto rel = parafermi_relations(f.lower, f.raise, p, safe);
    CHECK(worst(rel) < 1e-12);
    // The opposite sign in the lowering relation does not hold.
    CHECK(max_abs(comm(comm(f.raise, f.lower), f.lower) - 2.0 * f.lower) > 1);
    ComplexMatrix power = f.lower;
    for (int k = 1; k < p; ++k) power = power * f.lower;
    CHECK(max_abs(power) > 0.5);
  }
}

TEST_CASE("Green components obey the pairwise contract") {
  for (int p : {1, 2}) {
    const auto& g = green(p);
    CHECK(g.b.size() == static_cast<std::size_t>(p));
    CHECK(worst(green_component_relations(g, safe_subspace(g.space, 4))) < 1e-12);
  }
  const auto g3 = green_combined(3, 3);
  CHECK(g3.a.rows() == 512);
  CHECK(worst(green_component_relations(g3, safe_subspace(g3.space, 3))) < 1e-12);
}

TEST_CASE("Green sums match single-mode moments") {
  for (int p : {1, 2}) {
    const auto& g = green(p);
    const auto b = parabose_single(p, 12);
    const auto f = parafermi_single(p);
    for (int k = 1; k <= 3; ++k) CHECK(std::abs(moment(g.a, g.a_dag, k) - moment(b.lower, b.raise, k)) < 1e-8);
    for (int k = 1; k <= p + 1; ++k) CHECK(std::abs(moment(g.f, g.f_dag, k) - moment(f.lower, f.raise, k)) < 1e-8);
  }
}

TEST_CASE("combined system satisfies the para-relations") {
  for (int p : {1, 2}) {
    const auto& g = green(p);
    const auto safe = safe_subspace(g.space, 4);
    CHECK(worst(parabose_relations(g.a, g.a_dag, safe)) < kTol);
    CHECK(worst(parafermi_relations(g.f, g.f_dag, p, safe)) < kTol);
    CHECK(worst(relative_relations(g.a, g.a_dag, g.f, g.f_dag, safe)) < kTol);
  }
}

TEST_CASE("relations fail at the truncation edge") {
  const auto& g = green(1);
  SafeSubspace everything{0, {}};
  for (Eigen::Index k = 0; k < g.space.dim(); ++k) everything.states.push_back(k);
  CHECK(worst(parabose_relations(g.a, g.a_dag, everything)) > 1);
  CHECK_THROWS_AS(safe_subspace(g.space, 2), InputError);
  CHECK_THROWS_AS(safe_subspace(g.space, 9), InputError);
}

TEST_CASE("dimension cap") {
  CHECK_THROWS_WITH(green_combined(3, 8), Catch::Matchers::ContainsSubstring("5832"));
  CHECK_THROWS_WITH(green_combined(2, 8, 300), Catch::Matchers::ContainsSubstring("324"));
}

TEST_CASE("realization satisfies every bracket of the algebra") {
  const auto A = catalog::u11_z22_algebra();
  for (int p : {1, 2}) {
    const auto map = realize(green(p));
    const auto r = verify_realization(map, A, kTol);
    CHECK(r.entries.size() == 78);
    CHECK(r.passed());
    CHECK(r.max_residual() < kTol);
    CHECK(worst(hermiticity_relations(map)) < 1e-12);
  }
}

TEST_CASE("negating f breaks the realization unless (l, m, n) flips sign") {
  const auto p = 1;
  auto map = realize(green(p));
  map.ops["Z1"] *= -1.0;
  map.ops["Z2"] *= -1.0;
  const auto r = verify_realization(map, catalog::u11_z22_algebra(), kTol);
  CHECK_FALSE(r.passed());
  CHECK(r.failures() > 0);
  auto flipped = catalog::paper_solution();
  for (auto* fam : {&flipped.l, &flipped.m, &flipped.n})
    for (auto& M : *fam) M *= Rational(-1);
  CHECK(verify_realization(map, assemble(flipped, catalog::u11_names()), kTol).passed());
}

TEST_CASE("verification input checks and worker invariance") {
  auto map = realize(green(1));
  const auto A = catalog::u11_z22_algebra();
  const auto one = verify_realization(map, A, kTol, 4, 1);
  const auto many = verify_realization(map, A, kTol, 4, 4);
  REQUIRE(one.entries.size() == many.entries.size());
  for (std::size_t k = 0; k < one.entries.size(); ++k) CHECK(one.entries[k].residual == many.entries[k].residual);
  map.ops.erase("Q3");
  CHECK_THROWS_AS(verify_realization(map, A, kTol), InputError);
  CHECK(std::string(kGreenConvention).find("b_k") != std::string::npos);
}

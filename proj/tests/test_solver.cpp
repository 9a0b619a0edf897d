#include "z22/catalog.hpp"
#include "z22/solver.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace z22;

namespace {

SolverConfig config_with_pool(std::vector<int> pool) {
  SolverConfig c;
  c.entry_pool.clear();
  for (int x : pool) c.entry_pool.emplace_back(x);
  return c;
}

CoefficientSet negated_lmn(CoefficientSet cs) {
  for (auto* fam : {&cs.l, &cs.m, &cs.n})
    for (auto& M : *fam) M *= Rational(-1);
  return cs;
}

bool contains(const std::vector<CoefficientSet>& v, const CoefficientSet& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

TEST_CASE("representation stage") {
  const auto cs = catalog::paper_solution();
  CHECK(is_representation(cs.C, cs.K, 4));
  CHECK(is_representation(cs.C, cs.u, 2));
  CHECK(is_representation(cs.C, cs.v, 2));
  CHECK_FALSE(is_representation(cs.C, cs.K, 2));
  auto twice = cs.K;
  for (auto& x : twice) x *= Rational(2);
  CHECK_FALSE(is_representation(cs.C, twice, 4));
  for (std::size_t dim : {2u, 4u}) {
    const auto all = builtin_representation_candidates(dim);
    const auto kept = solve_representation_stage(cs.C, dim, all);
    CHECK(kept.size() < all.size());
    CHECK_FALSE(kept.empty());
    for (const auto& r : kept) CHECK(is_representation(cs.C, r, dim));
  }
}

TEST_CASE("linear stage spaces contain the reference forms") {
  const auto cs = catalog::paper_solution();
  const auto lin = solve_linear_stage(cs.C, cs.K, cs.u, cs.v);
  CHECK(lin.H.unknowns == 40);
  CHECK(lin.s.unknowns == 12);
  CHECK(lin.t.unknowns == 4);
  for (const auto* space : {&lin.H, &lin.s, &lin.t}) CHECK(space->dimension() == 1);
  CHECK(coordinates_in(lin.H, cs.H).has_value());
  CHECK(coordinates_in(lin.s, cs.s).has_value());
  CHECK(coordinates_in(lin.t, cs.t).has_value());
  auto bad = cs.H;
  bad[0](0, 1) += 1;
  bad[0](1, 0) += 1;
  CHECK_FALSE(coordinates_in(lin.H, bad).has_value());
  // Every element of the space satisfies the relations it was built from.
  auto scaled = cs;
  scaled.H = lin.H.basis.front();
  for (auto& x : scaled.H) x *= Rational(3);
  CHECK(check_family(scaled, ConstraintFamily::HCovariance).passed());
  CHECK(check_family(scaled, ConstraintFamily::HKCyclic).passed());
}

TEST_CASE("full search recovers the reference l, m, n") {
  const auto out = solve(config_with_pool({-1, 0, 1, 2}));
  CHECK(contains(out.solutions, catalog::paper_solution()));
  for (const auto& s : out.solutions) CHECK(check_constraints(s).passed());
  CHECK(out.stage("representation").get("K_accepted") == 1);
  CHECK(out.stage("linear").get("H_member") == 1);
  CHECK(out.stage("bilinear").get("solutions") == static_cast<std::int64_t>(out.solutions.size()));
}

TEST_CASE("solutions are closed under the sign of (l, m, n)") {
  const auto out = solve(SolverConfig{});
  REQUIRE(out.solutions.size() == 2);
  for (const auto& s : out.solutions) CHECK(contains(out.solutions, negated_lmn(s)));
  SolverConfig c;
  c.canonicalize = true;
  const auto canon = solve(c);
  CHECK(canon.solutions.size() == 1);
  CHECK(canon.stage("canonicalize").get("distinct") == 1);
}

TEST_CASE("search is deterministic across runs and worker counts") {
  auto c = config_with_pool({-1, 0, 1, 2});
  const auto a = solve(c);
  c.workers = 3;
  const auto b = solve(c);
  CHECK(a.solutions == b.solutions);
  REQUIRE(a.stage_log.size() == b.stage_log.size());
  for (std::size_t k = 0; k < a.stage_log.size(); ++k) CHECK(a.stage_log[k].counts == b.stage_log[k].counts);
}

TEST_CASE("search refuses oversized or inconsistent requests") {
  SolverConfig c;
  c.cap = 3;
  CHECK_THROWS_AS(solve(c), SearchOverflow);
  SolverConfig wrong;
  wrong.dim10 = 3;
  CHECK_THROWS_AS(solve(wrong), InputError);
  SolverConfig empty;
  empty.entry_pool.clear();
  CHECK_THROWS_AS(solve(empty), InputError);
}

TEST_CASE("a broken partial set stops at the failing stage") {
  SolverConfig c;
  auto p = catalog::paper_solution();
  std::swap(p.K[1], p.K[2]);
  c.partial = p;
  const auto out = solve(c);
  CHECK(out.solutions.empty());
  CHECK(out.stage("representation").get("K_accepted") == 0);
  CHECK_THROWS_AS(out.stage("linear"), std::out_of_range);

  p = catalog::paper_solution();
  p.s[0] *= Rational(-1);
  c.partial = p;
  const auto lin = solve(c);
  CHECK(lin.solutions.empty());
  CHECK(lin.stage("linear").get("s_member") == 0);
}

TEST_CASE("stages can be run selectively") {
  SolverConfig c;
  c.run_bilinear = false;
  const auto out = solve(c);
  CHECK(out.solutions.empty());
  CHECK(out.stage_log.size() == 2);
  SolverConfig only3;
  only3.run_representation = only3.run_linear = false;
  only3.entry_pool = {Rational(-1), Rational(0), Rational(1), Rational(2)};
  CHECK(solve_bilinear_stage(catalog::paper_solution(), only3).solutions.size() == 1);
}

#pragma once

// Golden data for the (Z2)^2 grading of u(1,1). The bracket table and the
// coefficient matrices are transcribed separately so that
// assemble(paper_solution()) == u11_z22_algebra() is a real cross-check.

#include "z22/algebra.hpp"
#include "z22/structure.hpp"

namespace z22::catalog {

/// Nonzero: C_122 = -C_212 = 1, C_133 = -C_313 = -1, C_231 = -C_321 = -2.
inline StructureConstants u11_structure_constants() {
  StructureConstants C(4);
  const auto set = [&](int a, int b, int c, int value) {
    C(a - 1, b - 1, c - 1) = value;
    C(b - 1, a - 1, c - 1) = -value;
  };
  set(1, 2, 2, 1);
  set(1, 3, 3, -1);
  set(2, 3, 1, -2);
  return C;
}

inline CoefficientSet paper_solution() {
  const Rational h(1, 2);
  CoefficientSet cs;
  cs.dim00 = 4;
  cs.dim01 = 4;
  cs.dim10 = 2;
  cs.C = u11_structure_constants();
  cs.K = {h * RationalMatrix{{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}},
          RationalMatrix{{0, 0, -1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, -1, 0, 0}},
          RationalMatrix{{0, 0, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 0, 0}},
          h * RationalMatrix{{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}}};
  cs.H = {Rational(2) * RationalMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}},
          Rational(2) * RationalMatrix{{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}},
          Rational(2) * RationalMatrix{{0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}},
          Rational(2) * RationalMatrix{{0, -1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}};
  cs.s = {Rational(4) * RationalMatrix{{0, 1}, {1, 0}}, Rational(4) * RationalMatrix{{1, 0}, {0, 0}},
          Rational(4) * RationalMatrix{{0, 0}, {0, 1}}, RationalMatrix{{0, 0}, {0, 0}}};
  cs.t = {RationalMatrix{{0, 0}, {0, 0}}, RationalMatrix{{0, 0}, {0, 0}}, RationalMatrix{{0, 0}, {0, 0}},
          Rational(4) * RationalMatrix{{0, 1}, {-1, 0}}};
  cs.u = {h * RationalMatrix{{1, 0}, {0, -1}}, RationalMatrix{{0, 0}, {-1, 0}},
          RationalMatrix{{0, 1}, {0, 0}}, RationalMatrix{{0, 0}, {0, 0}}};
  cs.v = {RationalMatrix{{0, 0}, {0, 0}}, RationalMatrix{{0, 0}, {0, 0}}, RationalMatrix{{0, 0}, {0, 0}},
          h * RationalMatrix{{1, 0}, {0, -1}}};
  cs.l = {RationalMatrix{{0, 1}, {0, 0}}, RationalMatrix{{0, 0}, {-1, 0}},
          RationalMatrix{{0, 0}, {0, -1}}, RationalMatrix{{1, 0}, {0, 0}}};
  cs.m = {RationalMatrix{{0, 1}, {0, 0}}, RationalMatrix{{0, 0}, {1, 0}},
          RationalMatrix{{1, 0}, {0, 0}}, RationalMatrix{{0, 0}, {0, 1}}};
  cs.n = {Rational(2) * RationalMatrix{{0, 0}, {0, 1}}, Rational(2) * RationalMatrix{{1, 0}, {0, 0}},
          Rational(2) * RationalMatrix{{0, 1}, {0, 0}}, Rational(2) * RationalMatrix{{0, 0}, {1, 0}}};
  return cs;
}

/// The trivial grading: u(1,1) on the (0,0) block, every other product zero.
inline CoefficientSet trivial_solution(std::size_t dim01 = 4, std::size_t dim10 = 2) {
  CoefficientSet cs = CoefficientSet::zero(4, dim01, dim10);
  cs.C = u11_structure_constants();
  return cs;
}

/// The 12-generator algebra X1..X4, Q1..Q4, Y1, Y2, Z1, Z2, entered relation
/// by relation.
inline GradedAlgebra u11_z22_algebra() {
  AlgebraBuilder b("u11-z22");
  for (int k = 1; k <= 4; ++k) b.add_generator("X" + std::to_string(k), {0, 0});
  for (int k = 1; k <= 4; ++k) b.add_generator("Q" + std::to_string(k), {0, 1});
  for (int k = 1; k <= 2; ++k) b.add_generator("Y" + std::to_string(k), {1, 0});
  for (int k = 1; k <= 2; ++k) b.add_generator("Z" + std::to_string(k), {1, 1});
  const Rational h(1, 2);

  // L00 x L00
  b.set_bracket("X1", "X2", {{"X2", 1}});
  b.set_bracket("X1", "X3", {{"X3", -1}});
  b.set_bracket("X2", "X3", {{"X1", -2}});
  // L01 x L01
  b.set_bracket("Q1", "Q2", {{"X1", 2}, {"X4", -2}});
  b.set_bracket("Q1", "Q4", {{"X3", 2}});
  b.set_bracket("Q3", "Q4", {{"X1", 2}, {"X4", 2}});
  b.set_bracket("Q2", "Q3", {{"X2", 2}});
  // L10 x L10, L11 x L11
  b.set_bracket("Y1", "Y1", {{"X2", 4}});
  b.set_bracket("Y1", "Y2", {{"X1", 4}});
  b.set_bracket("Y2", "Y2", {{"X3", 4}});
  b.set_bracket("Z1", "Z2", {{"X4", 4}});
  // L00 x L01
  b.set_bracket("X1", "Q1", {{"Q1", -h}});
  b.set_bracket("X1", "Q2", {{"Q2", h}});
  b.set_bracket("X1", "Q3", {{"Q3", h}});
  b.set_bracket("X1", "Q4", {{"Q4", -h}});
  b.set_bracket("X2", "Q1", {{"Q3", -1}});
  b.set_bracket("X2", "Q4", {{"Q2", -1}});
  b.set_bracket("X3", "Q2", {{"Q4", 1}});
  b.set_bracket("X3", "Q3", {{"Q1", 1}});
  b.set_bracket("X4", "Q1", {{"Q1", -h}});
  b.set_bracket("X4", "Q2", {{"Q2", h}});
  b.set_bracket("X4", "Q3", {{"Q3", -h}});
  b.set_bracket("X4", "Q4", {{"Q4", h}});
  // L00 x L10, L00 x L11
  b.set_bracket("X1", "Y1", {{"Y1", h}});
  b.set_bracket("X1", "Y2", {{"Y2", -h}});
  b.set_bracket("X2", "Y2", {{"Y1", -1}});
  b.set_bracket("X3", "Y1", {{"Y2", 1}});
  b.set_bracket("X4", "Z1", {{"Z1", h}});
  b.set_bracket("X4", "Z2", {{"Z2", -h}});
  // L01 x L10
  b.set_bracket("Q1", "Y1", {{"Z2", 1}});
  b.set_bracket("Q2", "Y2", {{"Z1", -1}});
  b.set_bracket("Q3", "Y2", {{"Z2", -1}});
  b.set_bracket("Q4", "Y1", {{"Z1", 1}});
  // L01 x L11
  b.set_bracket("Q1", "Z1", {{"Y2", 1}});
  b.set_bracket("Q2", "Z2", {{"Y1", 1}});
  b.set_bracket("Q3", "Z1", {{"Y1", 1}});
  b.set_bracket("Q4", "Z2", {{"Y2", 1}});
  // L10 x L11
  b.set_bracket("Y1", "Z1", {{"Q2", 2}});
  b.set_bracket("Y1", "Z2", {{"Q3", 2}});
  b.set_bracket("Y2", "Z1", {{"Q4", 2}});
  b.set_bracket("Y2", "Z2", {{"Q1", 2}});
  return std::move(b).build();
}

/// The X, Q part: an ordinary Z2-graded Lie algebra.
inline GradedAlgebra u11_z2_subalgebra() {
  return restrict_to_degrees(u11_z22_algebra(), {Degree{0, 0}, Degree{0, 1}}, "u11-z2");
}

inline NamingScheme u11_names() {
  NamingScheme n;
  n.algebra = "u11-z22";
  return n;
}

}  // namespace z22::catalog

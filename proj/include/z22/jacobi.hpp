#pragma once

#include "z22/algebra.hpp"
#include "z22/parallel.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace z22 {

/// (-1)^{g(u).g(w)} u o (v o w) + (-1)^{g(v).g(u)} v o (w o u)
///   + (-1)^{g(w).g(v)} w o (u o v)
inline LinearCombination jacobiator(const GradedAlgebra& A, std::size_t u, std::size_t v,
                                    std::size_t w) {
  const auto term = [&](std::size_t x, std::size_t y, std::size_t z) {
    // x o (y o z), expanded through the table
    LinearCombination out;
    for (const auto& [g, c] : A.entry(y, z)) add_scaled(out, A.entry(x, g), c);
    return out;
  };
  const Degree gu = A.degree(u), gv = A.degree(v), gw = A.degree(w);
  LinearCombination r;
  add_scaled(r, term(u, v, w), Rational(sign(gu, gw)));
  add_scaled(r, term(v, w, u), Rational(sign(gv, gu)));
  add_scaled(r, term(w, u, v), Rational(sign(gw, gv)));
  return r;
}

inline LinearCombination jacobiator(const GradedAlgebra& A, std::string_view u,
                                    std::string_view v, std::string_view w) {
  return jacobiator(A, A.index(u), A.index(v), A.index(w));
}

struct JacobiFailure {
  std::array<std::size_t, 3> triple{};
  LinearCombination residual;
};

using JacobiReport = VerificationReport<JacobiFailure>;

/// Unordered triples with repetition, i <= j <= k, in lexicographic order.
inline std::vector<std::array<std::size_t, 3>> generator_triples(std::size_t n) {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) out.push_back({i, j, k});
  return out;
}

/// Exhaustive sweep; report order is lexicographic regardless of `workers`.
inline JacobiReport check_all_jacobi(const GradedAlgebra& A, unsigned workers = 1) {
  const auto triples = generator_triples(A.size());
  std::vector<LinearCombination> residuals(triples.size());
  parallel_for(triples.size(), workers, [&](std::size_t t) {
    const auto& [u, v, w] = triples[t];
    residuals[t] = jacobiator(A, u, v, w);
  });
  JacobiReport report{A.name(), triples.size(), {}};
  for (std::size_t t = 0; t < triples.size(); ++t)
    if (!residuals[t].empty()) report.failures.push_back({triples[t], std::move(residuals[t])});
  return report;
}

/// The four commutator/anticommutator patterns a Jacobi-like identity can take:
///   CommComm:  [u,[v,w]] + [v,[w,u]] + [w,[u,v]]
///   CommAnti:  [u,{v,w}] + [v,{w,u}] + [w,{u,v}]
///   Mixed:     [u,{v,w}] + {v,[w,u]} - {w,[u,v]}
///   AntiAnti:  [u,[v,w]] + {v,{w,u}} - {w,{u,v}}
enum class JacobiShape { CommComm, CommAnti, Mixed, AntiAnti };

inline const char* to_string(JacobiShape s) {
  switch (s) {
    case JacobiShape::CommComm: return "comm-comm";
    case JacobiShape::CommAnti: return "comm-anti";
    case JacobiShape::Mixed: return "mixed-anti-in-comm";
    case JacobiShape::AntiAnti: return "anti-anti";
  }
  return "?";
}

/// Outer and inner bracket kinds of one cyclic term x o (y o z).
struct TermKinds {
  BracketKind outer;
  BracketKind inner;
  friend bool operator==(const TermKinds&, const TermKinds&) = default;
};

struct ShapeClassification {
  JacobiShape shape;
  std::array<TermKinds, 3> terms;
};

/// Classifies the identity built from degrees (a,b,c) by the bracket kinds
/// of its three cyclic terms.
inline ShapeClassification classify_shapes(Degree a, Degree b, Degree c) {
  const auto kinds = [](Degree x, Degree y, Degree z) {
    return TermKinds{bracket_kind(x, y + z), bracket_kind(y, z)};
  };
  ShapeClassification out{JacobiShape::CommComm, {kinds(a, b, c), kinds(b, c, a), kinds(c, a, b)}};
  int anti_inner = 0;
  for (const auto& t : out.terms) anti_inner += t.inner == BracketKind::Anticommutator;
  // Inner kinds are the three pairwise dots; the outer kind of each term is
  // the sum of the other two, so the odd-dot count alone fixes the pattern.
  switch (anti_inner) {
    case 0: out.shape = JacobiShape::CommComm; break;
    case 1: out.shape = JacobiShape::Mixed; break;
    case 2: out.shape = JacobiShape::AntiAnti; break;
    default: out.shape = JacobiShape::CommAnti; break;
  }
  return out;
}

/// Multiset of three degrees, stored sorted.
struct IdentityClass {
  std::array<Degree, 3> degrees;
  friend bool operator==(const IdentityClass&, const IdentityClass&) = default;
};

/// All multisets of three degrees out of `pool`, lexicographic.
inline std::vector<IdentityClass> identity_classes(const std::vector<Degree>& pool) {
  std::vector<IdentityClass> out;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j)
      for (std::size_t k = j; k < pool.size(); ++k) out.push_back({{pool[i], pool[j], pool[k]}});
  return out;
}

inline std::vector<IdentityClass> identity_classes() {
  return identity_classes({kAllDegrees.begin(), kAllDegrees.end()});
}

}  // namespace z22

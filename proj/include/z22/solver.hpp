#pragma once

#include "z22/catalog.hpp"
#include "z22/matrix.hpp"
#include "z22/parallel.hpp"
#include "z22/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace z22 {

/// dim00 matrices forming a candidate action of the (0,0) block.
using Representation = std::vector<RationalMatrix>;

struct SolverConfig {
  std::size_t dim01 = 4;
  std::size_t dim10 = 2;
  std::vector<Rational> entry_pool{Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                                   Rational(1, 2), Rational(1), Rational(2)};
  /// Max nonzero entries in each l, m, n matrix.
  std::size_t sparsity_budget = 2;
  /// Refuse searches whose estimated candidate count exceeds this.
  std::uint64_t cap = 1'000'000;
  bool run_representation = true;
  bool run_linear = true;
  bool run_bilinear = true;
  bool canonicalize = false;
  unsigned workers = 1;
  /// Fixed K, H, s, t, u, v (l, m, n ignored). Defaults to the reference ones.
  std::optional<CoefficientSet> partial;
};

class SearchOverflow : public InputError {
 public:
  using InputError::InputError;
};

struct StageEntry {
  std::string stage;
  std::vector<std::pair<std::string, std::int64_t>> counts;

  void add(std::string key, std::int64_t value) { counts.emplace_back(std::move(key), value); }
  std::int64_t get(const std::string& key) const {
    for (const auto& [k, v] : counts)
      if (k == key) return v;
    throw std::out_of_range("stage log has no '" + key + "'");
  }
};

struct SolverOutput {
  std::vector<CoefficientSet> solutions;
  std::vector<StageEntry> stage_log;

  const StageEntry& stage(const std::string& name) const {
    for (const auto& s : stage_log)
      if (s.stage == name) return s;
    throw std::out_of_range("no stage '" + name + "'");
  }
};

inline void validate(const SolverConfig& config) {
  if (config.dim01 == 0 || config.dim10 == 0) throw InputError("solver dimensions must be positive");
  if (config.entry_pool.empty()) throw InputError("entry pool must be nonempty");
}

// ---------------------------------------------------------------------------
// Stage 1: representations of the negated structure constants.

inline bool is_representation(const StructureConstants& C, const Representation& M, std::size_t dim) {
  if (M.size() != C.dim()) return false;
  for (const auto& x : M)
    if (x.rows() != dim || x.cols() != dim) return false;
  for (std::size_t a = 0; a < C.dim(); ++a)
    for (std::size_t b = a + 1; b < C.dim(); ++b) {
      RationalMatrix r = commutator(M[a], M[b]);
      for (std::size_t c = 0; c < C.dim(); ++c) r.add_scaled(M[c], C(a, b, c));
      if (!r.is_zero()) return false;
    }
  // Diagonal pairs are trivially zero only when C is antisymmetric.
  for (std::size_t a = 0; a < C.dim(); ++a) {
    RationalMatrix r(dim, dim);
    for (std::size_t c = 0; c < C.dim(); ++c) r.add_scaled(M[c], C(a, a, c));
    if (!r.is_zero()) return false;
    for (std::size_t b = 0; b < a; ++b) {
      RationalMatrix q = commutator(M[a], M[b]);
      for (std::size_t c = 0; c < C.dim(); ++c) q.add_scaled(M[c], C(a, b, c));
      if (!q.is_zero()) return false;
    }
  }
  return true;
}

/// Keeps the candidates with [M_a, M_b] = -C_{abc} M_c, in input order.
inline std::vector<Representation> solve_representation_stage(
    const StructureConstants& C, std::size_t dim, const std::vector<Representation>& candidates) {
  std::vector<Representation> out;
  for (const auto& M : candidates)
    if (is_representation(C, M, dim)) out.push_back(M);
  return out;
}

namespace detail {

inline Representation negated_transpose(const Representation& M) {
  Representation out;
  for (const auto& x : M) out.push_back(-x.transpose());
  return out;
}

inline Representation direct_sum(const Representation& a, const Representation& b) {
  Representation out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const std::size_t n = a[k].rows(), m = b[k].rows();
    RationalMatrix s(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s(i, j) = a[k](i, j);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) s(n + i, n + j) = b[k](i, j);
    out.push_back(std::move(s));
  }
  return out;
}

inline Representation scalar_rep(const Rational& x4) {
  Representation r(4, RationalMatrix(1, 1));
  r[3](0, 0) = x4;
  return r;
}

}  // namespace detail

/// Low-dimensional u(1,1) candidates for a given size: the reference
/// K / u / v, their duals, direct sums of small pieces, and a few
/// deliberate non-representations (rescaled or with two components swapped).
inline std::vector<Representation> builtin_representation_candidates(std::size_t dim) {
  const auto ref = catalog::paper_solution();
  std::vector<Representation> atoms;  // irreducible-ish building blocks
  atoms.push_back(detail::scalar_rep(Rational(0)));
  atoms.push_back(detail::scalar_rep(Rational(1, 2)));
  atoms.push_back(detail::scalar_rep(Rational(-1, 2)));
  atoms.push_back(ref.u);
  atoms.push_back(ref.v);
  atoms.push_back(detail::negated_transpose(ref.u));
  atoms.push_back(detail::negated_transpose(ref.v));

  std::vector<Representation> out;
  out.push_back(Representation(4, RationalMatrix(dim, dim)));
  if (dim == 4) out.push_back(ref.K);
  // Direct sums of atoms filling `dim`, in atom order.
  std::vector<std::vector<std::size_t>> partial{{}};
  while (!partial.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& seq : partial) {
      std::size_t size = 0;
      for (auto k : seq) size += atoms[k].front().rows();
      if (size == dim) {
        Representation r = atoms[seq.front()];
        for (std::size_t i = 1; i < seq.size(); ++i) r = detail::direct_sum(r, atoms[seq[i]]);
        out.push_back(std::move(r));
        continue;
      }
      const std::size_t start = seq.empty() ? 0 : seq.back();
      for (std::size_t k = start; k < atoms.size(); ++k)
        if (size + atoms[k].front().rows() <= dim) {
          auto s = seq;
          s.push_back(k);
          next.push_back(std::move(s));
        }
    }
    partial = std::move(next);
    if (out.size() > 64) break;
  }
  // Near misses.
  const std::size_t base = out.size();
  for (std::size_t k = 1; k < std::min<std::size_t>(base, 4); ++k) {
    Representation twice = out[k];
    for (auto& x : twice) x *= Rational(2);
    out.push_back(std::move(twice));
    Representation swapped = out[k];
    std::swap(swapped[1], swapped[2]);
    out.push_back(std::move(swapped));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Linearization helper: relations that are affine in a vector of unknowns.

namespace detail {

using ResidualKey = std::tuple<int, std::vector<std::size_t>, std::size_t>;
using ResidualMap = std::map<ResidualKey, Rational>;

inline void collect(const CoefficientSet& cs, const std::vector<ConstraintFamily>& families,
                    ResidualMap& out) {
  for (auto f : families) {
    auto r = evaluate(cs, f);
    for (auto& fail : r.failures)
      for (std::size_t k = 0; k < fail.residual.data().size(); ++k)
        if (fail.residual.data()[k] != 0)
          out[{static_cast<int>(f), fail.indices, k}] = fail.residual.data()[k];
  }
}

/// For relations affine in x (x -> set(cs, x)), returns (A, b) such that the
/// relations hold iff A x = b.
template <class Apply>
std::pair<RationalMatrix, RationalVector> linearize(const CoefficientSet& base,
                                                    const std::vector<ConstraintFamily>& families,
                                                    std::size_t unknowns, Apply apply) {
  const RationalVector zero(unknowns, Rational(0));
  ResidualMap constant;
  {
    CoefficientSet cs = base;
    apply(cs, zero);
    collect(cs, families, constant);
  }
  std::vector<ResidualMap> columns(unknowns);
  std::map<ResidualKey, std::size_t> rows;
  for (const auto& [k, v] : constant) rows.emplace(k, 0);
  for (std::size_t u = 0; u < unknowns; ++u) {
    RationalVector e = zero;
    e[u] = 1;
    CoefficientSet cs = base;
    apply(cs, e);
    collect(cs, families, columns[u]);
    for (const auto& [k, v] : constant) {
      auto it = columns[u].find(k);
      if (it == columns[u].end())
        columns[u][k] = -v;
      else
        it->second -= v;
    }
    for (const auto& [k, v] : columns[u]) rows.emplace(k, 0);
  }
  std::size_t r = 0;
  for (auto& [k, idx] : rows) idx = r++;
  RationalMatrix A(rows.size(), unknowns);
  RationalVector b(rows.size(), Rational(0));
  for (std::size_t u = 0; u < unknowns; ++u)
    for (const auto& [k, v] : columns[u])
      if (v != 0) A(rows.at(k), u) = v;
  for (const auto& [k, v] : constant) b[rows.at(k)] = -v;
  return {std::move(A), std::move(b)};
}

/// Coordinates of a symmetric / antisymmetric / general n x n matrix family.
enum class MatrixShape { General, Symmetric, Antisymmetric };

inline std::vector<std::pair<std::size_t, std::size_t>> coordinates(std::size_t n, MatrixShape shape) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (shape == MatrixShape::Symmetric && j < i) continue;
      if (shape == MatrixShape::Antisymmetric && j <= i) continue;
      out.emplace_back(i, j);
    }
  return out;
}

/// Writes x into `family` (count matrices of size n x n) with the given shape.
inline void unpack(std::vector<RationalMatrix>& family, std::size_t n, MatrixShape shape,
                   const RationalVector& x, std::size_t offset = 0) {
  const auto coords = coordinates(n, shape);
  for (std::size_t k = 0; k < family.size(); ++k)
    for (std::size_t c = 0; c < coords.size(); ++c) {
      const auto [i, j] = coords[c];
      const Rational& value = x[offset + k * coords.size() + c];
      family[k](i, j) = value;
      if (shape == MatrixShape::Symmetric) family[k](j, i) = value;
      if (shape == MatrixShape::Antisymmetric) family[k](j, i) = -value;
    }
}

inline RationalVector pack(const std::vector<RationalMatrix>& family, MatrixShape shape) {
  RationalVector x;
  if (family.empty()) return x;
  const auto coords = coordinates(family.front().rows(), shape);
  for (const auto& M : family)
    for (const auto& [i, j] : coords) x.push_back(M(i, j));
  return x;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Stage 2: H, s, t are linear unknowns once K, u, v are fixed.

struct FamilySpace {
  std::string family;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
  /// Basis of the solution space, each element a list of dim00 matrices.
  std::vector<std::vector<RationalMatrix>> basis;
  std::size_t dimension() const { return basis.size(); }
};

struct LinearStageResult {
  FamilySpace H, s, t;
};

namespace detail {

inline FamilySpace solve_form_space(const CoefficientSet& base, std::vector<RationalMatrix> CoefficientSet::*target,
                                    std::size_t n, MatrixShape shape,
                                    const std::vector<ConstraintFamily>& families, std::string name) {
  const std::size_t per = coordinates(n, shape).size();
  const std::size_t unknowns = per * base.dim00;
  auto [A, b] = linearize(base, families, unknowns, [&](CoefficientSet& cs, const RationalVector& x) {
    unpack(cs.*target, n, shape, x);
  });
  FamilySpace out;
  out.family = std::move(name);
  out.unknowns = unknowns;
  const auto ns = nullspace(A);
  out.rank = unknowns - ns.size();
  for (const auto& vec : ns) {
    std::vector<RationalMatrix> fam(base.dim00, RationalMatrix(n, n));
    unpack(fam, n, shape, vec);
    out.basis.push_back(std::move(fam));
  }
  return out;
}

}  // namespace detail

/// Exact nullspaces of every relation that is linear in H (resp. s, t) once
/// K (u, v) are fixed: the covariance relation and the cyclic relation.
/// H, s are parametrized as symmetric and t as antisymmetric matrices.
inline LinearStageResult solve_linear_stage(const StructureConstants& C, const Representation& K,
                                            const Representation& u, const Representation& v) {
  if (K.empty() || u.empty() || v.size() != u.size() || K.size() != C.dim() || u.size() != C.dim())
    throw InputError("linear stage: K, u, v must each hold one matrix per (0,0) generator");
  CoefficientSet base = CoefficientSet::zero(C.dim(), K.front().rows(), u.front().rows());
  base.C = C;
  base.K = K;
  base.u = u;
  base.v = v;
  validate_shape(base);
  using F = ConstraintFamily;
  using detail::MatrixShape;
  LinearStageResult r;
  r.H = detail::solve_form_space(base, &CoefficientSet::H, base.dim01, MatrixShape::Symmetric,
                                 {F::HCovariance, F::HKCyclic}, "H");
  r.s = detail::solve_form_space(base, &CoefficientSet::s, base.dim10, MatrixShape::Symmetric,
                                 {F::SCovariance, F::SUCyclic}, "s");
  r.t = detail::solve_form_space(base, &CoefficientSet::t, base.dim10, MatrixShape::Antisymmetric,
                                 {F::TCovariance, F::TVCyclic}, "t");
  return r;
}

/// Exact coordinates of `family` in the space, if it belongs to it.
inline std::optional<RationalVector> coordinates_in(const FamilySpace& space,
                                                    const std::vector<RationalMatrix>& family) {
  std::vector<RationalVector> basis;
  for (const auto& b : space.basis) basis.push_back(detail::pack(b, detail::MatrixShape::General));
  return span_coordinates(basis, detail::pack(family, detail::MatrixShape::General));
}

// ---------------------------------------------------------------------------
// Stage 3: l, m, n.

namespace detail {

inline bool entries_allowed(const std::vector<RationalMatrix>& family, const std::vector<Rational>& pool,
                            std::size_t budget) {
  for (const auto& M : family) {
    if (M.nonzeros() > budget) return false;
    for (const auto& x : M.data())
      if (std::find(pool.begin(), pool.end(), x) == pool.end()) return false;
  }
  return true;
}

inline std::uint64_t checked_power(std::size_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) {
    if (r > cap / std::max<std::size_t>(base, 1)) return cap + 1;
    r *= base;
  }
  return r;
}

/// Calls fn(values) for every assignment of pool values to `slots` positions,
/// most significant slot first, in pool order.
template <class Fn>
void for_each_assignment(std::size_t slots, const std::vector<Rational>& pool, Fn&& fn) {
  std::vector<std::size_t> digit(slots, 0);
  RationalVector values(slots, pool.front());
  while (true) {
    fn(values);
    std::size_t k = slots;
    while (k > 0) {
      --k;
      if (++digit[k] < pool.size()) {
        values[k] = pool[digit[k]];
        break;
      }
      digit[k] = 0;
      values[k] = pool.front();
      if (k == 0) return;
    }
    if (slots == 0) return;
  }
}

struct BilinearCounters {
  std::int64_t mn_consistent = 0;
  std::int64_t mn_enumerated = 0;
  std::int64_t mn_in_pool = 0;
  std::int64_t verified = 0;
};

}  // namespace detail

/// Enumerates l, m, n with entries from the pool, each matrix within the
/// sparsity budget. l ranges over the solutions of its intertwiner relation
/// (pinned by its pivot coordinates); for each l every remaining relation
/// except m-n-K-t and n-m-t-u is linear in (m, n) and is solved exactly,
/// then free directions are enumerated over the pool. Every emitted set is
/// re-verified with check_constraints.
inline SolverOutput solve_bilinear_stage(const CoefficientSet& partial, const SolverConfig& config) {
  validate(config);
  using F = ConstraintFamily;
  using detail::MatrixShape;
  CoefficientSet base = partial;
  const std::size_t d = base.dim10;
  base.l.assign(base.dim01, RationalMatrix(d, d));
  base.m = base.n = base.l;
  validate_shape(base);

  const std::size_t per = d * d;
  const std::size_t L = per * base.dim01;
  SolverOutput out;
  StageEntry log{"bilinear", {}};

  // l: homogeneous intertwiner relation.
  auto [Al, bl] = detail::linearize(base, {F::LIntertwiner}, L, [&](CoefficientSet& cs, const RationalVector& x) {
    detail::unpack(cs.l, d, MatrixShape::General, x);
  });
  const auto l_basis = nullspace(Al);
  log.add("l_unknowns", static_cast<std::int64_t>(L));
  log.add("l_nullity", static_cast<std::int64_t>(l_basis.size()));
  for (auto [fam, name] : {std::pair{F::MIntertwiner, "m_nullity"}, std::pair{F::NIntertwiner, "n_nullity"}}) {
    auto [A, b] = detail::linearize(base, {fam}, L, [&, fam = fam](CoefficientSet& cs, const RationalVector& x) {
      detail::unpack(fam == F::MIntertwiner ? cs.m : cs.n, d, MatrixShape::General, x);
    });
    log.add(name, static_cast<std::int64_t>(nullspace(A).size()));
  }

  const std::uint64_t l_count = detail::checked_power(config.entry_pool.size(), l_basis.size(), config.cap);
  if (l_count > config.cap)
    throw SearchOverflow("bilinear stage: " + std::to_string(config.entry_pool.size()) + "^" +
                         std::to_string(l_basis.size()) + " l candidates exceed cap " + std::to_string(config.cap));

  // Pin l by its values at the pivot columns of the RREF'd basis.
  RationalMatrix basis_rows(l_basis.size(), L);
  for (std::size_t r = 0; r < l_basis.size(); ++r)
    for (std::size_t c = 0; c < L; ++c) basis_rows(r, c) = l_basis[r][c];
  const RowEchelon pinned = rref(basis_rows);

  std::vector<RationalVector> l_candidates;
  std::int64_t l_enumerated = 0;
  detail::for_each_assignment(pinned.rank(), config.entry_pool, [&](const RationalVector& values) {
    ++l_enumerated;
    RationalVector x(L, Rational(0));
    for (std::size_t r = 0; r < pinned.rank(); ++r)
      if (values[r] != 0)
        for (std::size_t c = 0; c < L; ++c)
          if (pinned.matrix(r, c) != 0) x[c] += values[r] * pinned.matrix(r, c);
    std::vector<RationalMatrix> l(base.dim01, RationalMatrix(d, d));
    detail::unpack(l, d, MatrixShape::General, x);
    if (detail::entries_allowed(l, config.entry_pool, config.sparsity_budget)) l_candidates.push_back(std::move(x));
  });
  log.add("l_enumerated", l_enumerated);
  log.add("l_in_pool", static_cast<std::int64_t>(l_candidates.size()));

  const std::vector<F> mn_linear{F::MIntertwiner, F::NIntertwiner, F::LMCoupling, F::MLCoupling,
                                 F::LNCoupling,   F::NLScalar,     F::HNCoupling};
  std::vector<std::vector<CoefficientSet>> found(l_candidates.size());
  std::vector<detail::BilinearCounters> counters(l_candidates.size());
  std::vector<std::string> overflow(l_candidates.size());

  parallel_for(l_candidates.size(), config.workers, [&](std::size_t idx) {
    CoefficientSet with_l = base;
    detail::unpack(with_l.l, d, MatrixShape::General, l_candidates[idx]);
    auto [A, b] = detail::linearize(with_l, mn_linear, 2 * L, [&](CoefficientSet& cs, const RationalVector& x) {
      detail::unpack(cs.m, d, MatrixShape::General, x, 0);
      detail::unpack(cs.n, d, MatrixShape::General, x, L);
    });
    const auto sol = solve_affine(A, b);
    if (!sol) return;
    auto& cnt = counters[idx];
    ++cnt.mn_consistent;
    const std::uint64_t count = detail::checked_power(config.entry_pool.size(), sol->dimension(), config.cap);
    if (count > config.cap) {
      overflow[idx] = "bilinear stage: " + std::to_string(config.entry_pool.size()) + "^" +
                      std::to_string(sol->dimension()) + " (m,n) candidates exceed cap " + std::to_string(config.cap);
      return;
    }
    detail::for_each_assignment(sol->dimension(), config.entry_pool, [&](const RationalVector& free) {
      ++cnt.mn_enumerated;
      const RationalVector x = sol->point(free);
      CoefficientSet cs = with_l;
      detail::unpack(cs.m, d, MatrixShape::General, x, 0);
      detail::unpack(cs.n, d, MatrixShape::General, x, L);
      if (!detail::entries_allowed(cs.m, config.entry_pool, config.sparsity_budget) ||
          !detail::entries_allowed(cs.n, config.entry_pool, config.sparsity_budget))
        return;
      ++cnt.mn_in_pool;
      if (!check_constraints(cs).passed()) return;
      ++cnt.verified;
      found[idx].push_back(std::move(cs));
    });
  });

  for (const auto& o : overflow)
    if (!o.empty()) throw SearchOverflow(o);
  detail::BilinearCounters total;
  for (std::size_t k = 0; k < found.size(); ++k) {
    total.mn_consistent += counters[k].mn_consistent;
    total.mn_enumerated += counters[k].mn_enumerated;
    total.mn_in_pool += counters[k].mn_in_pool;
    total.verified += counters[k].verified;
    for (auto& cs : found[k]) out.solutions.push_back(std::move(cs));
  }
  log.add("mn_consistent", total.mn_consistent);
  log.add("mn_enumerated", total.mn_enumerated);
  log.add("mn_in_pool", total.mn_in_pool);
  log.add("solutions", total.verified);
  out.stage_log.push_back(std::move(log));
  return out;
}

// ---------------------------------------------------------------------------
// Canonicalization under signed permutations of the Q, Y, Z bases.

namespace detail {

inline std::vector<RationalMatrix> signed_permutations(std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  std::vector<RationalMatrix> out;
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      RationalMatrix P(n, n);
      for (std::size_t k = 0; k < n; ++k) P(k, perm[k]) = (mask >> k) & 1 ? -1 : 1;
      out.push_back(std::move(P));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline std::vector<RationalMatrix> stabilizer(std::size_t n, const std::vector<const std::vector<RationalMatrix>*>& fixed) {
  std::vector<RationalMatrix> out;
  for (auto& P : signed_permutations(n)) {
    const RationalMatrix Pt = P.transpose();
    bool ok = true;
    for (const auto* fam : fixed) {
      for (const auto& M : *fam)
        if (!(P * M * Pt == M)) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) out.push_back(std::move(P));
  }
  return out;
}

/// (l, m, n) after Q' = P Q, Y' = R Y, Z' = S Z, flattened.
inline RationalVector transformed_lmn(const CoefficientSet& cs, const RationalMatrix& P, const RationalMatrix& R,
                                      const RationalMatrix& S) {
  const RationalMatrix Rt = R.transpose(), St = S.transpose();
  RationalVector key;
  const auto emit = [&](const std::vector<RationalMatrix>& fam, const RationalMatrix& left,
                        const RationalMatrix& right) {
    for (std::size_t a = 0; a < cs.dim01; ++a) {
      RationalMatrix acc(cs.dim10, cs.dim10);
      for (std::size_t b = 0; b < cs.dim01; ++b)
        if (P(a, b) != 0) acc.add_scaled(left * fam[b] * right, P(a, b));
      key.insert(key.end(), acc.data().begin(), acc.data().end());
    }
  };
  emit(cs.l, R, St);
  emit(cs.m, S, Rt);
  emit(cs.n, R, St);
  return key;
}

}  // namespace detail

/// Drops solutions equivalent to an earlier one under a signed permutation of
/// the Q, Y, Z bases that leaves K, H, s, t, u, v unchanged.
inline std::vector<CoefficientSet> canonicalize(const std::vector<CoefficientSet>& solutions) {
  if (solutions.empty()) return {};
  const auto& first = solutions.front();
  if (first.dim01 > 6 || first.dim10 > 6) throw InputError("canonicalization supports block sizes up to 6");
  const auto P = detail::stabilizer(first.dim01, {&first.K, &first.H});
  const auto R = detail::stabilizer(first.dim10, {&first.u, &first.s});
  const auto S = detail::stabilizer(first.dim10, {&first.v, &first.t});
  std::vector<RationalVector> seen;
  std::vector<CoefficientSet> out;
  for (const auto& cs : solutions) {
    std::optional<RationalVector> best;
    for (const auto& p : P)
      for (const auto& r : R)
        for (const auto& s : S) {
          auto key = detail::transformed_lmn(cs, p, r, s);
          if (!best || key < *best) best = std::move(key);
        }
    if (std::find(seen.begin(), seen.end(), *best) != seen.end()) continue;
    seen.push_back(std::move(*best));
    out.push_back(cs);
  }
  return out;
}

// ---------------------------------------------------------------------------

/// Runs the enabled stages on `config.partial` (default: the reference
/// K, H, s, t, u, v). A stage that rejects the partial set ends the search
/// with no solutions.
inline SolverOutput solve(const SolverConfig& config) {
  validate(config);
  CoefficientSet partial = config.partial ? *config.partial : catalog::paper_solution();
  if (partial.dim01 != config.dim01 || partial.dim10 != config.dim10)
    throw InputError("partial coefficient set dimensions (" + std::to_string(partial.dim01) + "," +
                     std::to_string(partial.dim10) + ") differ from the configured (" +
                     std::to_string(config.dim01) + "," + std::to_string(config.dim10) + ")");
  partial.l.assign(partial.dim01, RationalMatrix(partial.dim10, partial.dim10));
  partial.m = partial.n = partial.l;
  validate_shape(partial);

  SolverOutput out;
  if (config.run_representation) {
    StageEntry log{"representation", {}};
    std::int64_t candidates = 0, accepted = 0;
    for (std::size_t dim : {partial.dim01, partial.dim10}) {
      const auto all = builtin_representation_candidates(dim);
      candidates += static_cast<std::int64_t>(all.size());
      accepted += static_cast<std::int64_t>(solve_representation_stage(partial.C, dim, all).size());
    }
    log.add("builtin_candidates", candidates);
    log.add("builtin_accepted", accepted);
    const bool k_ok = is_representation(partial.C, partial.K, partial.dim01);
    const bool u_ok = is_representation(partial.C, partial.u, partial.dim10);
    const bool v_ok = is_representation(partial.C, partial.v, partial.dim10);
    log.add("K_accepted", k_ok);
    log.add("u_accepted", u_ok);
    log.add("v_accepted", v_ok);
    out.stage_log.push_back(std::move(log));
    if (!(k_ok && u_ok && v_ok)) return out;
  }
  if (config.run_linear) {
    const auto lin = solve_linear_stage(partial.C, partial.K, partial.u, partial.v);
    StageEntry log{"linear", {}};
    bool all_members = true;
    for (const auto* space : {&lin.H, &lin.s, &lin.t}) {
      const auto& fam = space->family == "H" ? partial.H : space->family == "s" ? partial.s : partial.t;
      const bool member = coordinates_in(*space, fam).has_value();
      all_members = all_members && member;
      log.add(space->family + "_unknowns", static_cast<std::int64_t>(space->unknowns));
      log.add(space->family + "_rank", static_cast<std::int64_t>(space->rank));
      log.add(space->family + "_nullity", static_cast<std::int64_t>(space->dimension()));
      log.add(space->family + "_member", member);
    }
    out.stage_log.push_back(std::move(log));
    if (!all_members) return out;
  }
  if (config.run_bilinear) {
    auto bil = solve_bilinear_stage(partial, config);
    out.solutions = std::move(bil.solutions);
    for (auto& s : bil.stage_log) out.stage_log.push_back(std::move(s));
    if (config.canonicalize) {
      out.solutions = canonicalize(out.solutions);
      StageEntry log{"canonicalize", {}};
      log.add("distinct", static_cast<std::int64_t>(out.solutions.size()));
      out.stage_log.push_back(std::move(log));
    }
  }
  return out;
}

}  // namespace z22

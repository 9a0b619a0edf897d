#pragma once

// Finite-matrix realizations of one paraboson and one parafermion of order p.

#include "z22/algebra.hpp"
#include "z22/parallel.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace z22 {

using ComplexMatrix = Eigen::MatrixXcd;

/// Basis-state bookkeeping for a truncated Fock space.
struct FockSpace {
  int cutoff = 0;
  std::vector<int> boson_number;  // total boson number per basis state
  std::vector<std::string> labels;

  Eigen::Index dim() const { return static_cast<Eigen::Index>(boson_number.size()); }
};

/// Basis states whose total boson number stays at least `margin` below the
/// cutoff; trilinear expressions on them never touch the truncation edge.
struct SafeSubspace {
  int margin = 4;
  std::vector<Eigen::Index> states;
};

inline SafeSubspace safe_subspace(const FockSpace& space, int margin) {
  if (margin < 3) throw InputError("safe-subspace margin must be at least 3, got " + std::to_string(margin));
  SafeSubspace s{margin, {}};
  for (Eigen::Index k = 0; k < space.dim(); ++k)
    if (space.boson_number[static_cast<std::size_t>(k)] <= space.cutoff - margin) s.states.push_back(k);
  if (s.states.empty())
    throw InputError("safe subspace is empty: cutoff " + std::to_string(space.cutoff) + " with margin " +
                     std::to_string(margin));
  return s;
}

/// max |M_ij| over columns j in the safe subspace (all rows).
inline double safe_residual(const ComplexMatrix& M, const SafeSubspace& safe) {
  double worst = 0;
  for (auto j : safe.states) worst = std::max(worst, M.col(j).cwiseAbs().maxCoeff());
  return worst;
}

inline double max_abs(const ComplexMatrix& M) { return M.size() == 0 ? 0.0 : M.cwiseAbs().maxCoeff(); }

inline ComplexMatrix comm(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }
inline ComplexMatrix anti(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b + b * a; }

inline ComplexMatrix bracket(BracketKind k, const ComplexMatrix& a, const ComplexMatrix& b) {
  return k == BracketKind::Commutator ? comm(a, b) : anti(a, b);
}

struct LadderPair {
  ComplexMatrix lower;  // a or f
  ComplexMatrix raise;  // a^dag or f^dag
  FockSpace space;
};

/// Single-mode paraboson of order p on levels 0..cutoff:
/// a|2k> = sqrt(2k)|2k-1>, a|2k+1> = sqrt(2k+p)|2k>.
inline LadderPair parabose_single(int p, int cutoff) {
  if (p < 1) throw InputError("parastatistics order must be >= 1");
  if (cutoff < p + 4) throw InputError("parabose cutoff must be >= p + 4");
  const Eigen::Index n = cutoff + 1;
  LadderPair out{ComplexMatrix::Zero(n, n), {}, {cutoff, {}, {}}};
  for (int level = 1; level <= cutoff; ++level) {
    const double w = level % 2 == 0 ? level : level - 1 + p;
    out.lower(level - 1, level) = std::sqrt(w);
  }
  out.raise = out.lower.adjoint();
  for (int level = 0; level <= cutoff; ++level) {
    out.space.boson_number.push_back(level);
    out.space.labels.push_back("|" + std::to_string(level) + ">");
  }
  return out;
}

/// Single-mode parafermion of order p: spin-p/2 ladder on p+1 states,
/// f|k> = sqrt(k(p-k+1)) |k-1>.
inline LadderPair parafermi_single(int p) {
  if (p < 1) throw InputError("parastatistics order must be >= 1");
  const Eigen::Index n = p + 1;
  // Boson numbers are all zero, so the whole space is "safe" for any margin
  // that leaves cutoff - margin >= 0.
  LadderPair out{ComplexMatrix::Zero(n, n), {}, {8, {}, {}}};
  for (int k = 1; k <= p; ++k) out.lower(k - 1, k) = std::sqrt(double(k) * (p - k + 1));
  out.raise = out.lower.adjoint();
  for (int k = 0; k <= p; ++k) {
    out.space.boson_number.push_back(0);
    out.space.labels.push_back("|" + std::to_string(k) + ">");
  }
  return out;
}

/// Green-ansatz system: a = sum_k b_k, f = sum_k c_k on
/// (C^{cutoff+1})^{(x)p} (x) (C^2)^{(x)p}.
struct GreenSystem {
  int order = 1;
  ComplexMatrix a, a_dag, f, f_dag;
  std::vector<ComplexMatrix> b, c;  // components
  FockSpace space;
};

inline constexpr const char* kGreenConvention =
    "slots B1..Bp F1..Fp; b_k = beta_k * prod_{j<k} (-1)^{N(beta_j)} (-1)^{N(gamma_j)}, "
    "c_k = gamma_k * prod_{j<k} (-1)^{N(beta_j)}; same-index b,c commute; different-index "
    "b,b anticommute, c,c commute, b,c anticommute";

namespace detail {

inline ComplexMatrix kron_all(const std::vector<ComplexMatrix>& factors) {
  ComplexMatrix r = ComplexMatrix::Identity(1, 1);
  for (const auto& f : factors) {
    ComplexMatrix next(r.rows() * f.rows(), r.cols() * f.cols());
    for (Eigen::Index i = 0; i < r.rows(); ++i)
      for (Eigen::Index j = 0; j < r.cols(); ++j) next.block(i * f.rows(), j * f.cols(), f.rows(), f.cols()) = r(i, j) * f;
    r = std::move(next);
  }
  return r;
}

}  // namespace detail

inline GreenSystem green_combined(int p, int cutoff, std::int64_t dim_cap = 4096) {
  if (p < 1) throw InputError("parastatistics order must be >= 1");
  if (cutoff < 1) throw InputError("cutoff must be >= 1");
  std::int64_t dim = 1;
  for (int k = 0; k < p; ++k) {
    dim *= 2 * (cutoff + 1);
    if (dim > dim_cap) break;
  }
  if (dim > dim_cap) {
    std::int64_t need = 1;
    for (int k = 0; k < p; ++k) need *= 2 * (cutoff + 1);
    throw InputError("Green system dimension " + std::to_string(need) + " exceeds cap " + std::to_string(dim_cap) +
                     "; raise the cap to at least " + std::to_string(need));
  }

  const Eigen::Index nb = cutoff + 1;
  ComplexMatrix boson = ComplexMatrix::Zero(nb, nb);
  for (Eigen::Index k = 1; k < nb; ++k) boson(k - 1, k) = std::sqrt(double(k));
  ComplexMatrix fermion = ComplexMatrix::Zero(2, 2);
  fermion(0, 1) = 1;
  ComplexMatrix boson_parity = ComplexMatrix::Zero(nb, nb);
  for (Eigen::Index k = 0; k < nb; ++k) boson_parity(k, k) = k % 2 ? -1 : 1;
  ComplexMatrix fermion_parity = ComplexMatrix::Zero(2, 2);
  fermion_parity(0, 0) = 1;
  fermion_parity(1, 1) = -1;

  GreenSystem g;
  g.order = p;
  const std::size_t slots = 2 * static_cast<std::size_t>(p);
  for (int k = 0; k < p; ++k) {
    std::vector<ComplexMatrix> fb, fc;
    for (int s = 0; s < p; ++s) {
      fb.push_back(ComplexMatrix::Identity(nb, nb));
      fc.push_back(ComplexMatrix::Identity(nb, nb));
    }
    for (int s = 0; s < p; ++s) {
      fb.push_back(ComplexMatrix::Identity(2, 2));
      fc.push_back(ComplexMatrix::Identity(2, 2));
    }
    fb[k] = boson;
    fc[p + k] = fermion;
    for (int j = 0; j < k; ++j) {
      fb[j] = boson_parity;
      fb[p + j] = fermion_parity;
      fc[j] = boson_parity;
    }
    g.b.push_back(detail::kron_all(fb));
    g.c.push_back(detail::kron_all(fc));
  }
  (void)slots;
  g.a = g.b.front();
  g.f = g.c.front();
  for (int k = 1; k < p; ++k) {
    g.a += g.b[k];
    g.f += g.c[k];
  }
  g.a_dag = g.a.adjoint();
  g.f_dag = g.f.adjoint();

  // Basis labels in Kronecker order (first slot most significant).
  g.space.cutoff = cutoff;
  const Eigen::Index total = g.a.rows();
  for (Eigen::Index idx = 0; idx < total; ++idx) {
    Eigen::Index rest = idx;
    std::vector<int> occ(slots);
    for (std::size_t s = slots; s-- > 0;) {
      const Eigen::Index base = s < static_cast<std::size_t>(p) ? nb : 2;
      occ[s] = static_cast<int>(rest % base);
      rest /= base;
    }
    int bosons = 0;
    std::string label = "|";
    for (std::size_t s = 0; s < slots; ++s) {
      if (s < static_cast<std::size_t>(p)) bosons += occ[s];
      label += (s ? "," : "") + std::to_string(occ[s]);
    }
    g.space.boson_number.push_back(bosons);
    g.space.labels.push_back(label + ">");
  }
  return g;
}

struct NamedResidual {
  std::string relation;
  double residual = 0;
};

/// Pairwise component relations of the Green construction, each residual
/// measured on the safe subspace.
inline std::vector<NamedResidual> green_component_relations(const GreenSystem& g, const SafeSubspace& safe) {
  using Sparse = Eigen::SparseMatrix<std::complex<double>>;
  const auto n = g.a.rows();
  Sparse id(n, n);
  id.setIdentity();
  std::vector<Sparse> b, bd, c, cd;
  for (int k = 0; k < g.order; ++k) {
    b.push_back(g.b[k].sparseView());
    bd.push_back(Sparse(g.b[k].adjoint().sparseView()));
    c.push_back(g.c[k].sparseView());
    cd.push_back(Sparse(g.c[k].adjoint().sparseView()));
  }
  const auto sc = [](const Sparse& x, const Sparse& y) { return Sparse(x * y - y * x); };
  const auto sa = [](const Sparse& x, const Sparse& y) { return Sparse(x * y + y * x); };
  const auto res = [&](const Sparse& m) { return safe_residual(ComplexMatrix(m), safe); };
  const auto name = [](const char* x, int k) { return std::string(x) + std::to_string(k + 1); };

  std::vector<NamedResidual> out;
  for (int k = 0; k < g.order; ++k) {
    out.push_back({"[" + name("b", k) + "," + name("b", k) + "^dag]=1", res(sc(b[k], bd[k]) - id)});
    out.push_back({"{" + name("c", k) + "," + name("c", k) + "^dag}=1", res(sa(c[k], cd[k]) - id)});
    out.push_back({"[" + name("b", k) + "," + name("c", k) + "]=0", res(sc(b[k], c[k]))});
    out.push_back({"[" + name("b", k) + "," + name("c", k) + "^dag]=0", res(sc(b[k], cd[k]))});
    for (int l = 0; l < g.order; ++l) {
      if (l == k) continue;
      out.push_back({"{" + name("b", k) + "," + name("b", l) + "}=0", res(sa(b[k], b[l]))});
      out.push_back({"{" + name("b", k) + "," + name("b", l) + "^dag}=0", res(sa(b[k], bd[l]))});
      out.push_back({"[" + name("c", k) + "," + name("c", l) + "]=0", res(sc(c[k], c[l]))});
      out.push_back({"[" + name("c", k) + "," + name("c", l) + "^dag]=0", res(sc(c[k], cd[l]))});
      out.push_back({"{" + name("b", k) + "," + name("c", l) + "}=0", res(sa(b[k], c[l]))});
      out.push_back({"{" + name("b", k) + "," + name("c", l) + "^dag}=0", res(sa(b[k], cd[l]))});
    }
  }
  return out;
}

/// Trilinear paraboson relations.
inline std::vector<NamedResidual> parabose_relations(const ComplexMatrix& a, const ComplexMatrix& ad,
                                                     const SafeSubspace& safe) {
  const ComplexMatrix n = anti(ad, a);
  return {{"[{a^dag,a},a^dag]=2a^dag", safe_residual(comm(n, ad) - 2.0 * ad, safe)},
          {"[{a^dag,a},a]=-2a", safe_residual(comm(n, a) + 2.0 * a, safe)},
          {"[a^dag^2,a]=-2a^dag", safe_residual(comm(ad * ad, a) + 2.0 * ad, safe)},
          {"[a^2,a^dag]=2a", safe_residual(comm(a * a, ad) - 2.0 * a, safe)}};
}

/// Trilinear parafermion relations plus nilpotency f^{p+1} = 0.
inline std::vector<NamedResidual> parafermi_relations(const ComplexMatrix& f, const ComplexMatrix& fd, int p,
                                                      const SafeSubspace& safe) {
  const ComplexMatrix n = comm(fd, f);
  ComplexMatrix power = f;
  for (int k = 0; k < p; ++k) power = power * f;
  return {{"[[f^dag,f],f^dag]=2f^dag", safe_residual(comm(n, fd) - 2.0 * fd, safe)},
          {"[[f^dag,f],f]=-2f", safe_residual(comm(n, f) + 2.0 * f, safe)},
          {"f^(p+1)=0", max_abs(power)}};
}

/// Mixed paraboson/parafermion relations and their adjoints.
inline std::vector<NamedResidual> relative_relations(const ComplexMatrix& a, const ComplexMatrix& ad,
                                                     const ComplexMatrix& f, const ComplexMatrix& fd,
                                                     const SafeSubspace& safe) {
  return {{"[{a,f},a^dag]=2f", safe_residual(comm(anti(a, f), ad) - 2.0 * f, safe)},
          {"[{a^dag,f},a]=-2f", safe_residual(comm(anti(ad, f), a) + 2.0 * f, safe)},
          {"{{a,f},f^dag}=2a", safe_residual(anti(anti(a, f), fd) - 2.0 * a, safe)},
          {"{{a,f^dag},f}=2a", safe_residual(anti(anti(a, fd), f) - 2.0 * a, safe)},
          {"[{a^dag,f^dag},a]=-2f^dag", safe_residual(comm(anti(ad, fd), a) + 2.0 * fd, safe)},
          {"[{a,f^dag},a^dag]=2f^dag", safe_residual(comm(anti(a, fd), ad) - 2.0 * fd, safe)},
          {"{{a^dag,f^dag},f}=2a^dag", safe_residual(anti(anti(ad, fd), f) - 2.0 * ad, safe)},
          {"{{a^dag,f},f^dag}=2a^dag", safe_residual(anti(anti(ad, f), fd) - 2.0 * ad, safe)}};
}

/// Matrices for X1..X4, Q1..Q4, Y1, Y2, Z1, Z2 built from a Green system:
/// Y1 = a^dag, Y2 = a, Z1 = f^dag, Z2 = f,
/// X1 = {a^dag,a}/4, X2 = a^dag^2/2, X3 = a^2/2, X4 = [f^dag,f]/4,
/// Q1 = {a,f}/2, Q2 = {a^dag,f^dag}/2, Q3 = {a^dag,f}/2, Q4 = {a,f^dag}/2.
struct RealizationMap {
  int order = 1;
  std::map<std::string, ComplexMatrix> ops;
  FockSpace space;
  std::string convention = kGreenConvention;

  const ComplexMatrix& at(const std::string& name) const {
    auto it = ops.find(name);
    if (it == ops.end()) throw InputError("realization has no operator '" + name + "'");
    return it->second;
  }
};

inline RealizationMap realize(const GreenSystem& g) {
  RealizationMap r;
  r.order = g.order;
  r.space = g.space;
  const auto& a = g.a;
  const auto& ad = g.a_dag;
  const auto& f = g.f;
  const auto& fd = g.f_dag;
  r.ops["X1"] = 0.25 * anti(ad, a);
  r.ops["X2"] = 0.5 * (ad * ad);
  r.ops["X3"] = 0.5 * (a * a);
  r.ops["X4"] = 0.25 * comm(fd, f);
  r.ops["Q1"] = 0.5 * anti(a, f);
  r.ops["Q2"] = 0.5 * anti(ad, fd);
  r.ops["Q3"] = 0.5 * anti(ad, f);
  r.ops["Q4"] = 0.5 * anti(a, fd);
  r.ops["Y1"] = ad;
  r.ops["Y2"] = a;
  r.ops["Z1"] = fd;
  r.ops["Z2"] = f;
  return r;
}

inline RealizationMap realize(int p, int cutoff, std::int64_t dim_cap = 4096) {
  return realize(green_combined(p, cutoff, dim_cap));
}

/// X1, X4 self-adjoint; X2^dag = X3; Q1^dag = Q2; Q3^dag = Q4; Y1 = Y2^dag;
/// Z1 = Z2^dag. Exact over the whole truncated space.
inline std::vector<NamedResidual> hermiticity_relations(const RealizationMap& r) {
  const auto diff = [&](const char* x, const char* y) { return max_abs(r.at(x).adjoint() - r.at(y)); };
  return {{"X1^dag=X1", diff("X1", "X1")}, {"X4^dag=X4", diff("X4", "X4")}, {"X2^dag=X3", diff("X2", "X3")},
          {"Q1^dag=Q2", diff("Q1", "Q2")}, {"Q3^dag=Q4", diff("Q3", "Q4")}, {"Y2^dag=Y1", diff("Y2", "Y1")},
          {"Z2^dag=Z1", diff("Z2", "Z1")}};
}

struct RealizationEntry {
  std::size_t a = 0;
  std::size_t b = 0;
  BracketKind kind = BracketKind::Commutator;
  double residual = 0;
};

struct RealizationReport {
  std::string algebra;
  double tolerance = 0;
  int margin = 4;
  std::vector<RealizationEntry> entries;  // every unordered generator pair

  double max_residual() const {
    double m = 0;
    for (const auto& e : entries) m = std::max(m, e.residual);
    return m;
  }
  bool passed() const { return max_residual() <= tolerance; }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.residual > tolerance;
    return n;
  }
};

/// For every unordered generator pair (a,b) compares the matrix
/// (anti)commutator with the table's right-hand side on the safe subspace.
inline RealizationReport verify_realization(const RealizationMap& map, const GradedAlgebra& A, double tol,
                                            int margin = 4, unsigned workers = 1) {
  using Sparse = Eigen::SparseMatrix<std::complex<double>>;
  std::vector<Sparse> mats;
  for (const auto& g : A.generators()) {
    auto it = map.ops.find(g.name);
    if (it == map.ops.end()) throw InputError("realization has no operator for generator '" + g.name + "'");
    mats.push_back(it->second.sparseView());
  }
  const SafeSubspace safe = safe_subspace(map.space, margin);
  RealizationReport report{A.name(), tol, margin, {}};
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = i; j < A.size(); ++j)
      report.entries.push_back({i, j, bracket_kind(A.degree(i), A.degree(j)), 0.0});
  parallel_for(report.entries.size(), workers, [&](std::size_t k) {
    auto& e = report.entries[k];
    const auto& x = mats[e.a];
    const auto& y = mats[e.b];
    Sparse lhs = e.kind == BracketKind::Commutator ? Sparse(x * y - y * x) : Sparse(x * y + y * x);
    for (const auto& [g, c] : A.entry(e.a, e.b)) lhs -= to_double(c) * mats[g];
    e.residual = safe_residual(ComplexMatrix(lhs), safe);
  });
  return report;
}

}  // namespace z22

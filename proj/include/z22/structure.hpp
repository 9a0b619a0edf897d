#pragma once

#include "z22/algebra.hpp"
#include "z22/matrix.hpp"
#include "z22/parallel.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace z22 {

/// Structure constants C_{mu nu lambda} of the degree-(0,0) block:
/// [X_mu, X_nu] = C_{mu nu lambda} X_lambda. Indices are 0-based here.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }

  Rational& operator()(std::size_t a, std::size_t b, std::size_t c) { return c_.at(offset(a, b, c)); }
  const Rational& operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return c_.at(offset(a, b, c));
  }

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t offset(std::size_t a, std::size_t b, std::size_t c) const {
    return (a * dim_ + b) * dim_ + c;
  }
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

/// Coefficient matrices for the products between the four graded blocks
/// X (0,0), Q (0,1), Y (1,0), Z (1,1):
///
///   {Q_a,Q_b} = (H_mu)_ab X_mu    {Y_i,Y_j} = (s_mu)_ij X_mu   [Z_i,Z_j] = (t_mu)_ij X_mu
///   [X_mu,Q_a] = (K_mu)_ab Q_b    [X_mu,Y_i] = (u_mu)_ij Y_j   [X_mu,Z_i] = (v_mu)_ij Z_j
///   [Q_a,Y_i] = (l_a)_ij Z_j      {Q_a,Z_i} = (m_a)_ij Y_j     {Y_i,Z_j} = (n_a)_ij Q_a
///
/// The Y and Z blocks have equal dimension so that l, m, n are square.
struct CoefficientSet {
  std::size_t dim00 = 4;
  std::size_t dim01 = 0;
  std::size_t dim10 = 0;
  StructureConstants C;
  std::vector<RationalMatrix> K, H, s, t, u, v;  // dim00 each
  std::vector<RationalMatrix> l, m, n;           // dim01 each

  std::size_t dim11() const { return dim10; }

  /// All matrices zero; C must be supplied separately.
  static CoefficientSet zero(std::size_t dim00, std::size_t dim01, std::size_t dim10) {
    CoefficientSet cs;
    cs.dim00 = dim00;
    cs.dim01 = dim01;
    cs.dim10 = dim10;
    cs.C = StructureConstants(dim00);
    cs.K.assign(dim00, RationalMatrix(dim01, dim01));
    cs.H = cs.K;
    cs.s.assign(dim00, RationalMatrix(dim10, dim10));
    cs.t = cs.u = cs.v = cs.s;
    cs.l.assign(dim01, RationalMatrix(dim10, dim10));
    cs.m = cs.n = cs.l;
    return cs;
  }

  friend bool operator==(const CoefficientSet&, const CoefficientSet&) = default;
};

/// Throws InputError naming the offending field when sizes or the
/// H/s symmetric, t antisymmetric shape rules are violated.
inline void validate_shape(const CoefficientSet& cs) {
  if (cs.dim00 == 0 || cs.dim01 == 0 || cs.dim10 == 0)
    throw InputError("coefficient set dimensions must be positive");
  if (cs.C.dim() != cs.dim00)
    throw InputError("C: expected dimension " + std::to_string(cs.dim00));
  const auto family = [](const std::vector<RationalMatrix>& f, const char* name, std::size_t count,
                         std::size_t dim) {
    if (f.size() != count)
      throw InputError(std::string(name) + ": expected " + std::to_string(count) + " matrices, got " +
                       std::to_string(f.size()));
    for (std::size_t k = 0; k < f.size(); ++k)
      if (f[k].rows() != dim || f[k].cols() != dim)
        throw InputError(std::string(name) + "[" + std::to_string(k) + "]: expected " +
                         std::to_string(dim) + "x" + std::to_string(dim) + ", got " + f[k].shape());
  };
  family(cs.K, "K", cs.dim00, cs.dim01);
  family(cs.H, "H", cs.dim00, cs.dim01);
  family(cs.s, "s", cs.dim00, cs.dim10);
  family(cs.t, "t", cs.dim00, cs.dim10);
  family(cs.u, "u", cs.dim00, cs.dim10);
  family(cs.v, "v", cs.dim00, cs.dim10);
  family(cs.l, "l", cs.dim01, cs.dim10);
  family(cs.m, "m", cs.dim01, cs.dim10);
  family(cs.n, "n", cs.dim01, cs.dim10);
  for (std::size_t k = 0; k < cs.dim00; ++k) {
    if (!cs.H[k].is_symmetric()) throw InputError("H[" + std::to_string(k) + "]: not symmetric");
    if (!cs.s[k].is_symmetric()) throw InputError("s[" + std::to_string(k) + "]: not symmetric");
    if (!cs.t[k].is_antisymmetric())
      throw InputError("t[" + std::to_string(k) + "]: not antisymmetric");
  }
}

/// One relation family per Jacobi identity class. Together they are
/// equivalent to the full set of generalized Jacobi identities of the
/// assembled algebra.
enum class ConstraintFamily {
  KRepresentation,  // [K_mu,K_nu] = -C_{mu nu la} K_la            (X,X,Q)
  URepresentation,  // [u_mu,u_nu] = -C_{mu nu la} u_la            (X,X,Y)
  VRepresentation,  // [v_mu,v_nu] = -C_{mu nu la} v_la            (X,X,Z)
  HCovariance,      // K_mu H_nu + (K_mu H_nu)^T = C_{mu la nu} H_la (X,Q,Q)
  SCovariance,      // u_mu s_nu + (u_mu s_nu)^T = C_{mu la nu} s_la (X,Y,Y)
  TCovariance,      // v_mu t_nu + t_nu v_mu^T = -C_{mu la nu} t_la^T (X,Z,Z)
  LIntertwiner,     // l_a v_mu - u_mu l_a = (K_mu)_ab l_b          (X,Q,Y)
  NIntertwiner,     // u_mu n_a + n_a v_mu^T = (K_mu)_ba n_b        (X,Y,Z)
  HNCoupling,       // s_mu m_a^T + l_a t_mu = (H_mu)_ab n_b        (Q,Y,Z)
  LNCoupling,       // l_a n_b^T + n_b l_a^T = -(K_mu)_ab s_mu      (Q,Y,Y)
  LMCoupling,       // l_a m_b + l_b m_a = (H_mu)_ab u_mu           (Q,Q,Y)
  NLScalar,         // (n_a)_ji (l_a)_kl + (n_a)_ki (l_a)_jl = -(s_mu)_jk (v_mu)_il   (Y,Y,Z)
  NMScalar,         // (n_a)_ji (m_a)_kl - (n_a)_jk (m_a)_il = (t_mu)_ki (u_mu)_jl    (Y,Z,Z)
  HKCyclic,         // (H_mu)_ab (K_mu)_gd + cyclic(a,b,g) = 0    (Q,Q,Q)
  SUCyclic,         // (s_mu)_ij (u_mu)_kl + cyclic(i,j,k) = 0    (Y,Y,Y)
  TVCyclic,         // (t_mu)_ij (v_mu)_kl + cyclic(i,j,k) = 0    (Z,Z,Z)
  StructureJacobi,  // C antisymmetric and satisfying Jacobi      (X,X,X)
  MIntertwiner,     // m_a u_mu - v_mu m_a = (K_mu)_ab m_b          (X,Q,Z)
  MLCoupling,       // m_b l_a + m_a l_b = (H_mu)_ab v_mu           (Q,Q,Z)
  MNCoupling,       // m_a n_b - (m_a n_b)^T = -(K_mu)_ab t_mu      (Q,Z,Z)
};

inline constexpr std::size_t kConstraintFamilyCount = 20;

inline constexpr std::array<ConstraintFamily, kConstraintFamilyCount> kAllConstraintFamilies{
    ConstraintFamily::KRepresentation, ConstraintFamily::URepresentation,
    ConstraintFamily::VRepresentation, ConstraintFamily::HCovariance,
    ConstraintFamily::SCovariance,     ConstraintFamily::TCovariance,
    ConstraintFamily::LIntertwiner,    ConstraintFamily::NIntertwiner,
    ConstraintFamily::HNCoupling,      ConstraintFamily::LNCoupling,
    ConstraintFamily::LMCoupling,      ConstraintFamily::NLScalar,
    ConstraintFamily::NMScalar,        ConstraintFamily::HKCyclic,
    ConstraintFamily::SUCyclic,        ConstraintFamily::TVCyclic,
    ConstraintFamily::StructureJacobi, ConstraintFamily::MIntertwiner,
    ConstraintFamily::MLCoupling,      ConstraintFamily::MNCoupling};

struct ConstraintFamilyInfo {
  const char* id;
  /// Degrees of the Jacobi class the family comes from, as block letters.
  const char* jacobi_class;
};

inline ConstraintFamilyInfo info(ConstraintFamily f) {
  switch (f) {
    case ConstraintFamily::KRepresentation: return {"K-representation", "XXQ"};
    case ConstraintFamily::URepresentation: return {"u-representation", "XXY"};
    case ConstraintFamily::VRepresentation: return {"v-representation", "XXZ"};
    case ConstraintFamily::HCovariance: return {"H-covariance", "XQQ"};
    case ConstraintFamily::SCovariance: return {"s-covariance", "XYY"};
    case ConstraintFamily::TCovariance: return {"t-covariance", "XZZ"};
    case ConstraintFamily::LIntertwiner: return {"l-intertwiner", "XQY"};
    case ConstraintFamily::NIntertwiner: return {"n-intertwiner", "XYZ"};
    case ConstraintFamily::HNCoupling: return {"s-m-l-t-H-n", "QYZ"};
    case ConstraintFamily::LNCoupling: return {"l-n-K-s", "QYY"};
    case ConstraintFamily::LMCoupling: return {"l-m-H-u", "QQY"};
    case ConstraintFamily::NLScalar: return {"n-l-s-v", "YYZ"};
    case ConstraintFamily::NMScalar: return {"n-m-t-u", "YZZ"};
    case ConstraintFamily::HKCyclic: return {"H-K-cyclic", "QQQ"};
    case ConstraintFamily::SUCyclic: return {"s-u-cyclic", "YYY"};
    case ConstraintFamily::TVCyclic: return {"t-v-cyclic", "ZZZ"};
    case ConstraintFamily::StructureJacobi: return {"structure-constants", "XXX"};
    case ConstraintFamily::MIntertwiner: return {"m-intertwiner", "XQZ"};
    case ConstraintFamily::MLCoupling: return {"m-l-H-v", "QQZ"};
    case ConstraintFamily::MNCoupling: return {"m-n-K-t", "QZZ"};
  }
  return {"?", "?"};
}

inline const char* to_string(ConstraintFamily f) { return info(f).id; }

struct ConstraintResidual {
  ConstraintFamily family;
  /// Free indices, 1-based, in the order they appear in the relation.
  std::vector<std::size_t> indices;
  /// Matrix residual, or 1x1 for scalar relations.
  RationalMatrix residual;
};

using ConstraintReport = VerificationReport<ConstraintResidual>;

namespace detail {

struct FamilyResult {
  std::size_t checked = 0;
  std::vector<ConstraintResidual> failures;

  void record(ConstraintFamily f, std::vector<std::size_t> idx, RationalMatrix r) {
    ++checked;
    if (!r.is_zero()) failures.push_back({f, std::move(idx), std::move(r)});
  }
  void record(ConstraintFamily f, std::vector<std::size_t> idx, const Rational& r) {
    RationalMatrix m(1, 1);
    m(0, 0) = r;
    record(f, std::move(idx), std::move(m));
  }
};

/// sum_la C(a,b,la) * M[la] with an index order chosen by `coef`.
template <class Coef>
RationalMatrix contract(const std::vector<RationalMatrix>& M, std::size_t dim, Coef coef) {
  RationalMatrix out(M.front().rows(), M.front().cols());
  for (std::size_t la = 0; la < dim; ++la) out.add_scaled(M[la], coef(la));
  return out;
}

inline void representation(const CoefficientSet& cs, const std::vector<RationalMatrix>& M,
                           ConstraintFamily f, FamilyResult& out) {
  for (std::size_t a = 0; a < cs.dim00; ++a)
    for (std::size_t b = 0; b < cs.dim00; ++b) {
      RationalMatrix r = commutator(M[a], M[b]);
      r += contract(M, cs.dim00, [&](std::size_t la) { return cs.C(a, b, la); });
      out.record(f, {a + 1, b + 1}, std::move(r));
    }
}

inline FamilyResult evaluate(const CoefficientSet& cs, ConstraintFamily f) {
  FamilyResult out;
  const std::size_t D0 = cs.dim00, D1 = cs.dim01, d = cs.dim10;
  const auto& C = cs.C;
  using F = ConstraintFamily;
  switch (f) {
    case F::KRepresentation: representation(cs, cs.K, f, out); break;
    case F::URepresentation: representation(cs, cs.u, f, out); break;
    case F::VRepresentation: representation(cs, cs.v, f, out); break;
    case F::HCovariance:
    case F::SCovariance:
      for (std::size_t mu = 0; mu < D0; ++mu)
        for (std::size_t nu = 0; nu < D0; ++nu) {
          const auto& act = f == F::HCovariance ? cs.K : cs.u;
          const auto& form = f == F::HCovariance ? cs.H : cs.s;
          const RationalMatrix p = act[mu] * form[nu];
          RationalMatrix r = p + p.transpose();
          r -= contract(form, D0, [&](std::size_t la) { return C(mu, la, nu); });
          out.record(f, {mu + 1, nu + 1}, std::move(r));
        }
      break;
    case F::TCovariance:
      for (std::size_t mu = 0; mu < D0; ++mu)
        for (std::size_t nu = 0; nu < D0; ++nu) {
          RationalMatrix r = cs.v[mu] * cs.t[nu] + cs.t[nu] * cs.v[mu].transpose();
          for (std::size_t la = 0; la < D0; ++la) r.add_scaled(cs.t[la].transpose(), C(mu, la, nu));
          out.record(f, {mu + 1, nu + 1}, std::move(r));
        }
      break;
    case F::LIntertwiner:
    case F::MIntertwiner:
      for (std::size_t a = 0; a < D1; ++a)
        for (std::size_t mu = 0; mu < D0; ++mu) {
          const bool is_l = f == F::LIntertwiner;
          const auto& X = is_l ? cs.l : cs.m;
          const auto& right = is_l ? cs.v : cs.u;
          const auto& left = is_l ? cs.u : cs.v;
          RationalMatrix r = X[a] * right[mu] - left[mu] * X[a];
          for (std::size_t b = 0; b < D1; ++b) r.add_scaled(X[b], -cs.K[mu](a, b));
          out.record(f, {a + 1, mu + 1}, std::move(r));
        }
      break;
    case F::NIntertwiner:
      for (std::size_t a = 0; a < D1; ++a)
        for (std::size_t mu = 0; mu < D0; ++mu) {
          RationalMatrix r = cs.u[mu] * cs.n[a] + cs.n[a] * cs.v[mu].transpose();
          for (std::size_t b = 0; b < D1; ++b) r.add_scaled(cs.n[b], -cs.K[mu](b, a));
          out.record(f, {a + 1, mu + 1}, std::move(r));
        }
      break;
    case F::HNCoupling:
      for (std::size_t mu = 0; mu < D0; ++mu)
        for (std::size_t a = 0; a < D1; ++a) {
          RationalMatrix r = cs.s[mu] * cs.m[a].transpose() + cs.l[a] * cs.t[mu];
          for (std::size_t b = 0; b < D1; ++b) r.add_scaled(cs.n[b], -cs.H[mu](a, b));
          out.record(f, {mu + 1, a + 1}, std::move(r));
        }
      break;
    case F::LNCoupling:
    case F::LMCoupling:
    case F::MLCoupling:
    case F::MNCoupling:
      for (std::size_t a = 0; a < D1; ++a)
        for (std::size_t b = 0; b < D1; ++b) {
          RationalMatrix r;
          if (f == F::LNCoupling) {
            r = cs.l[a] * cs.n[b].transpose() + cs.n[b] * cs.l[a].transpose();
            for (std::size_t mu = 0; mu < D0; ++mu) r.add_scaled(cs.s[mu], cs.K[mu](a, b));
          } else if (f == F::LMCoupling) {
            r = cs.l[a] * cs.m[b] + cs.l[b] * cs.m[a];
            for (std::size_t mu = 0; mu < D0; ++mu) r.add_scaled(cs.u[mu], -cs.H[mu](a, b));
          } else if (f == F::MLCoupling) {
            r = cs.m[b] * cs.l[a] + cs.m[a] * cs.l[b];
            for (std::size_t mu = 0; mu < D0; ++mu) r.add_scaled(cs.v[mu], -cs.H[mu](a, b));
          } else {
            const RationalMatrix p = cs.m[a] * cs.n[b];
            r = p - p.transpose();
            for (std::size_t mu = 0; mu < D0; ++mu) r.add_scaled(cs.t[mu], cs.K[mu](a, b));
          }
          out.record(f, {a + 1, b + 1}, std::move(r));
        }
      break;
    case F::NLScalar:
    case F::NMScalar:
    case F::SUCyclic:
    case F::TVCyclic:
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k)
            for (std::size_t q = 0; q < d; ++q) {
              Rational r = 0;
              if (f == F::NLScalar) {
                for (std::size_t a = 0; a < D1; ++a)
                  r += cs.n[a](j, i) * cs.l[a](k, q) + cs.n[a](k, i) * cs.l[a](j, q);
                for (std::size_t mu = 0; mu < D0; ++mu) r += cs.s[mu](j, k) * cs.v[mu](i, q);
              } else if (f == F::NMScalar) {
                for (std::size_t a = 0; a < D1; ++a)
                  r += cs.n[a](j, i) * cs.m[a](k, q) - cs.n[a](j, k) * cs.m[a](i, q);
                for (std::size_t mu = 0; mu < D0; ++mu) r -= cs.t[mu](k, i) * cs.u[mu](j, q);
              } else {
                const auto& form = f == F::SUCyclic ? cs.s : cs.t;
                const auto& act = f == F::SUCyclic ? cs.u : cs.v;
                for (std::size_t mu = 0; mu < D0; ++mu)
                  r += form[mu](i, j) * act[mu](k, q) + form[mu](j, k) * act[mu](i, q) +
                       form[mu](k, i) * act[mu](j, q);
              }
              out.record(f, {i + 1, j + 1, k + 1, q + 1}, r);
            }
      break;
    case F::HKCyclic:
      for (std::size_t a = 0; a < D1; ++a)
        for (std::size_t b = 0; b < D1; ++b)
          for (std::size_t g = 0; g < D1; ++g)
            for (std::size_t e = 0; e < D1; ++e) {
              Rational r = 0;
              for (std::size_t mu = 0; mu < D0; ++mu)
                r += cs.H[mu](a, b) * cs.K[mu](g, e) + cs.H[mu](b, g) * cs.K[mu](a, e) +
                     cs.H[mu](g, a) * cs.K[mu](b, e);
              out.record(f, {a + 1, b + 1, g + 1, e + 1}, r);
            }
      break;
    case F::StructureJacobi:
      for (std::size_t a = 0; a < D0; ++a)
        for (std::size_t b = 0; b < D0; ++b)
          for (std::size_t la = 0; la < D0; ++la) out.record(f, {a + 1, b + 1, la + 1}, C(a, b, la) + C(b, a, la));
      for (std::size_t a = 0; a < D0; ++a)
        for (std::size_t b = 0; b < D0; ++b)
          for (std::size_t c = 0; c < D0; ++c)
            for (std::size_t e = 0; e < D0; ++e) {
              Rational r = 0;
              for (std::size_t la = 0; la < D0; ++la)
                r += C(b, c, la) * C(a, la, e) + C(c, a, la) * C(b, la, e) + C(a, b, la) * C(c, la, e);
              out.record(f, {a + 1, b + 1, c + 1, e + 1}, r);
            }
      break;
  }
  return out;
}

}  // namespace detail

/// Residuals of a single relation family.
inline ConstraintReport check_family(const CoefficientSet& cs, ConstraintFamily f) {
  validate_shape(cs);
  auto r = detail::evaluate(cs, f);
  return {to_string(f), r.checked, std::move(r.failures)};
}

/// Evaluates every relation family at every index combination with exact
/// arithmetic. Failures are listed family by family in enum order.
inline ConstraintReport check_constraints(const CoefficientSet& cs, unsigned workers = 1) {
  validate_shape(cs);
  std::vector<detail::FamilyResult> results(kConstraintFamilyCount);
  parallel_for(kConstraintFamilyCount, workers, [&](std::size_t k) {
    results[k] = detail::evaluate(cs, kAllConstraintFamilies[k]);
  });
  ConstraintReport report{"coefficient-set", 0, {}};
  for (auto& r : results) {
    report.checked += r.checked;
    for (auto& f : r.failures) report.failures.push_back(std::move(f));
  }
  return report;
}

/// Generator prefixes for the four blocks; names are prefix + 1-based index.
struct NamingScheme {
  std::string algebra = "assembled";
  std::string even = "X";
  std::string fermi = "Q";
  std::string parabose = "Y";
  std::string parafermi = "Z";
};

class ConstraintViolation : public std::runtime_error {
 public:
  explicit ConstraintViolation(ConstraintReport report)
      : std::runtime_error("coefficient set violates " + std::to_string(report.failures.size()) +
                           " constraint instance(s)"),
        report_(std::move(report)) {}
  const ConstraintReport& report() const { return report_; }

 private:
  ConstraintReport report_;
};

enum class AssemblyCheck { Verify, Skip };

/// Builds the graded algebra encoded by `cs`. With AssemblyCheck::Verify (the
/// default) a set that fails check_constraints is refused with
/// ConstraintViolation.
inline GradedAlgebra assemble(const CoefficientSet& cs, const NamingScheme& names = {},
                              AssemblyCheck mode = AssemblyCheck::Verify) {
  validate_shape(cs);
  if (mode == AssemblyCheck::Verify) {
    auto report = check_constraints(cs);
    if (!report.passed()) throw ConstraintViolation(std::move(report));
  }
  AlgebraBuilder b(names.algebra);
  const auto block = [&](const std::string& prefix, std::size_t count, Degree deg) {
    std::vector<std::size_t> ids;
    for (std::size_t k = 0; k < count; ++k) ids.push_back(b.add_generator(prefix + std::to_string(k + 1), deg));
    return ids;
  };
  const auto X = block(names.even, cs.dim00, {0, 0});
  const auto Q = block(names.fermi, cs.dim01, {0, 1});
  const auto Y = block(names.parabose, cs.dim10, {1, 0});
  const auto Z = block(names.parafermi, cs.dim10, {1, 1});

  // Symmetric blocks: both orders come straight from the coefficients.
  for (std::size_t a = 0; a < cs.dim00; ++a)
    for (std::size_t c = 0; c < cs.dim00; ++c) {
      LinearCombination lc;
      for (std::size_t la = 0; la < cs.dim00; ++la) accumulate(lc, X[la], cs.C(a, c, la));
      b.set_ordered(X[a], X[c], std::move(lc));
    }
  const auto quadratic = [&](const std::vector<std::size_t>& G, const std::vector<RationalMatrix>& M) {
    for (std::size_t i = 0; i < G.size(); ++i)
      for (std::size_t j = 0; j < G.size(); ++j) {
        LinearCombination lc;
        for (std::size_t mu = 0; mu < cs.dim00; ++mu) accumulate(lc, X[mu], M[mu](i, j));
        b.set_ordered(G[i], G[j], std::move(lc));
      }
  };
  quadratic(Q, cs.H);
  quadratic(Y, cs.s);
  quadratic(Z, cs.t);

  // Mixed blocks: store one order, derive the other by graded antisymmetry.
  const auto action = [&](const std::vector<std::size_t>& G, const std::vector<RationalMatrix>& M) {
    for (std::size_t mu = 0; mu < cs.dim00; ++mu)
      for (std::size_t i = 0; i < G.size(); ++i) {
        LinearCombination lc;
        for (std::size_t j = 0; j < G.size(); ++j) accumulate(lc, G[j], M[mu](i, j));
        b.set_bracket(X[mu], G[i], lc);
      }
  };
  action(Q, cs.K);
  action(Y, cs.u);
  action(Z, cs.v);

  for (std::size_t a = 0; a < cs.dim01; ++a)
    for (std::size_t i = 0; i < cs.dim10; ++i) {
      LinearCombination lz, my;
      for (std::size_t j = 0; j < cs.dim10; ++j) {
        accumulate(lz, Z[j], cs.l[a](i, j));
        accumulate(my, Y[j], cs.m[a](i, j));
      }
      b.set_bracket(Q[a], Y[i], lz);
      b.set_bracket(Q[a], Z[i], my);
    }
  for (std::size_t i = 0; i < cs.dim10; ++i)
    for (std::size_t j = 0; j < cs.dim10; ++j) {
      LinearCombination lc;
      for (std::size_t a = 0; a < cs.dim01; ++a) accumulate(lc, Q[a], cs.n[a](i, j));
      b.set_bracket(Y[i], Z[j], lc);
    }
  return std::move(b).build();
}

/// Inverse of assemble: reads the coefficient matrices back out of a graded
/// algebra. Generators of each degree are taken in listed order.
inline CoefficientSet decompose(const GradedAlgebra& A) {
  std::array<std::vector<std::size_t>, 4> blocks;
  for (std::size_t g = 0; g < A.size(); ++g) blocks[A.degree(g).index()].push_back(g);
  const auto& X = blocks[0];
  const auto& Q = blocks[1];
  const auto& Y = blocks[2];
  const auto& Z = blocks[3];
  if (X.empty() || Q.empty() || Y.empty())
    throw InputError("decompose: every block of degree (0,0), (0,1), (1,0), (1,1) must be nonempty");
  if (Y.size() != Z.size())
    throw InputError("decompose: blocks (1,0) and (1,1) must have equal dimension");

  const auto closure = check_closure(A);
  if (!closure.passed()) {
    const auto& f = closure.failures.front();
    throw InputError("decompose: product (" + A.name_of(f.a) + "," + A.name_of(f.b) + ") contains " +
                     A.name_of(f.residual.begin()->first) + " outside degree " +
                     (A.degree(f.a) + A.degree(f.b)).str());
  }
  const auto anti = check_antisymmetry(A);
  if (!anti.passed()) {
    const auto& f = anti.failures.front();
    throw InputError("decompose: entries (" + A.name_of(f.a) + "," + A.name_of(f.b) +
                     ") violate graded antisymmetry");
  }

  CoefficientSet cs = CoefficientSet::zero(X.size(), Q.size(), Y.size());
  const auto coeff = [&](std::size_t a, std::size_t b, std::size_t g) -> Rational {
    const auto& e = A.entry(a, b);
    auto it = e.find(g);
    return it == e.end() ? Rational(0) : it->second;
  };
  for (std::size_t a = 0; a < X.size(); ++a)
    for (std::size_t c = 0; c < X.size(); ++c)
      for (std::size_t la = 0; la < X.size(); ++la) cs.C(a, c, la) = coeff(X[a], X[c], X[la]);
  for (std::size_t mu = 0; mu < X.size(); ++mu) {
    for (std::size_t i = 0; i < Q.size(); ++i)
      for (std::size_t j = 0; j < Q.size(); ++j) {
        cs.H[mu](i, j) = coeff(Q[i], Q[j], X[mu]);
        cs.K[mu](i, j) = coeff(X[mu], Q[i], Q[j]);
      }
    for (std::size_t i = 0; i < Y.size(); ++i)
      for (std::size_t j = 0; j < Y.size(); ++j) {
        cs.s[mu](i, j) = coeff(Y[i], Y[j], X[mu]);
        cs.t[mu](i, j) = coeff(Z[i], Z[j], X[mu]);
        cs.u[mu](i, j) = coeff(X[mu], Y[i], Y[j]);
        cs.v[mu](i, j) = coeff(X[mu], Z[i], Z[j]);
      }
  }
  for (std::size_t a = 0; a < Q.size(); ++a)
    for (std::size_t i = 0; i < Y.size(); ++i)
      for (std::size_t j = 0; j < Y.size(); ++j) {
        cs.l[a](i, j) = coeff(Q[a], Y[i], Z[j]);
        cs.m[a](i, j) = coeff(Q[a], Z[i], Y[j]);
        cs.n[a](i, j) = coeff(Y[i], Z[j], Q[a]);
      }
  return cs;
}

}  // namespace z22

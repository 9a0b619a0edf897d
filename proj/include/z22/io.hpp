#pragma once

// JSON interchange formats for algebras, coefficient sets, reports and the
// solver. Parse errors are InputError naming the offending JSON path.

#include "z22/algebra.hpp"
#include "z22/jacobi.hpp"
#include "z22/oscillator.hpp"
#include "z22/solver.hpp"
#include "z22/structure.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace z22::io {

using Json = nlohmann::ordered_json;

/// Canonical text: two-space indent, trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse_text(const std::string& text, const std::string& source = "<input>") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": malformed JSON: " + e.what());
  }
}

inline Json read_stream(std::istream& in, const std::string& source = "<stdin>") {
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), source);
}

// ---------------------------------------------------------------------------
// Path-aware accessors.

namespace detail {

inline const Json& member(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw InputError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(path + "." + key + ": missing");
  return *it;
}

inline const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array");
  return j;
}

inline std::string string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw InputError(path + ": expected a string");
  return j.get<std::string>();
}

inline std::int64_t integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError(path + ": expected an integer");
  return j.get<std::int64_t>();
}

inline std::size_t count(const Json& j, const std::string& path) {
  const auto v = integer(j, path);
  if (v < 0) throw InputError(path + ": expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

inline Rational rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  try {
    return parse_rational(string(j, path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline std::string at(const std::string& path, std::size_t k) { return path + "[" + std::to_string(k) + "]"; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Algebra.

inline Json terms_to_json(const GradedAlgebra& A, const LinearCombination& lc) {
  Json out = Json::array();
  for (const auto& [g, c] : lc) out.push_back({{"gen", A.name_of(g)}, {"coeff", format_rational(c)}});
  return out;
}

/// Emits (a,b) with a <= b in generator order, plus the reverse entry when it
/// differs from the graded-antisymmetric partner. Zero products are omitted.
inline Json to_json(const GradedAlgebra& A) {
  Json gens = Json::array();
  for (const auto& g : A.generators()) gens.push_back({{"name", g.name}, {"degree", {g.degree.i, g.degree.j}}});
  Json brackets = Json::array();
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = a; b < A.size(); ++b) {
      const auto& ab = A.entry(a, b);
      if (!ab.empty()) brackets.push_back({{"a", A.name_of(a)}, {"b", A.name_of(b)}, {"terms", terms_to_json(A, ab)}});
      if (a == b) continue;
      const auto& ba = A.entry(b, a);
      if (ba != scaled(ab, Rational(-sign(A.degree(a), A.degree(b)))))
        brackets.push_back({{"a", A.name_of(b)}, {"b", A.name_of(a)}, {"terms", terms_to_json(A, ba)}});
    }
  return {{"name", A.name()}, {"generators", gens}, {"brackets", brackets}};
}

/// Missing reverse orders are filled by graded antisymmetry; an entry listed
/// in both orders is kept verbatim so inconsistent input stays detectable.
inline GradedAlgebra algebra_from_json(const Json& j, const std::string& root = "$") {
  AlgebraBuilder builder(detail::string(detail::member(j, "name", root), root + ".name"));
  const std::string gpath = root + ".generators";
  const auto& gens = detail::array(detail::member(j, "generators", root), gpath);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto p = detail::at(gpath, k);
    const auto name = detail::string(detail::member(gens[k], "name", p), p + ".name");
    const auto& deg = detail::array(detail::member(gens[k], "degree", p), p + ".degree");
    if (deg.size() != 2) throw InputError(p + ".degree: expected [i,j]");
    const auto i = detail::integer(deg[0], p + ".degree[0]");
    const auto jj = detail::integer(deg[1], p + ".degree[1]");
    if ((i != 0 && i != 1) || (jj != 0 && jj != 1)) throw InputError(p + ".degree: entries must be 0 or 1");
    try {
      builder.add_generator(name, Degree(static_cast<int>(i), static_cast<int>(jj)));
    } catch (const InputError& e) {
      throw InputError(p + ".name: " + e.what());
    }
  }

  const std::string bpath = root + ".brackets";
  const auto& brackets = detail::array(detail::member(j, "brackets", root), bpath);
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, LinearCombination>> listed;
  const auto lookup = [&](const Json& node, const std::string& p) {
    const auto name = detail::string(node, p);
    try {
      return builder.index(name);
    } catch (const InputError& e) {
      throw InputError(p + ": " + e.what());
    }
  };
  for (std::size_t k = 0; k < brackets.size(); ++k) {
    const auto p = detail::at(bpath, k);
    const auto a = lookup(detail::member(brackets[k], "a", p), p + ".a");
    const auto b = lookup(detail::member(brackets[k], "b", p), p + ".b");
    const auto tpath = p + ".terms";
    const auto& terms = detail::array(detail::member(brackets[k], "terms", p), tpath);
    LinearCombination lc;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const auto tp = detail::at(tpath, t);
      const auto g = lookup(detail::member(terms[t], "gen", tp), tp + ".gen");
      accumulate(lc, g, detail::rational(detail::member(terms[t], "coeff", tp), tp + ".coeff"));
    }
    for (const auto& [key, _] : listed)
      if (key == std::pair{a, b}) throw InputError(p + ": duplicate bracket entry");
    listed.push_back({{a, b}, std::move(lc)});
  }
  for (const auto& [key, lc] : listed) builder.set_ordered(key.first, key.second, lc);
  const auto is_listed = [&](std::size_t a, std::size_t b) {
    for (const auto& [key, _] : listed)
      if (key == std::pair{a, b}) return true;
    return false;
  };
  const GradedAlgebra partial = builder.build();
  for (const auto& [key, lc] : listed) {
    const auto [a, b] = key;
    if (a != b && !is_listed(b, a))
      builder.set_ordered(b, a, scaled(lc, Rational(-sign(partial.degree(a), partial.degree(b)))));
  }
  return std::move(builder).build();
}

// ---------------------------------------------------------------------------
// Coefficient sets.

inline Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(format_rational(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

inline RationalMatrix matrix_from_json(const Json& j, const std::string& path) {
  const auto& rows = detail::array(j, path);
  if (rows.empty()) throw InputError(path + ": empty matrix");
  const auto width = detail::array(rows[0], detail::at(path, 0)).size();
  RationalMatrix m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto rp = detail::at(path, i);
    const auto& row = detail::array(rows[i], rp);
    if (row.size() != width) throw InputError(rp + ": ragged row");
    for (std::size_t k = 0; k < width; ++k) m(i, k) = detail::rational(row[k], detail::at(rp, k));
  }
  return m;
}

inline const char* const kFamilyNames[] = {"K", "H", "s", "t", "u", "v", "l", "m", "n"};

inline std::vector<RationalMatrix> CoefficientSet::*family_member(std::size_t k) {
  static std::vector<RationalMatrix> CoefficientSet::*const members[] = {
      &CoefficientSet::K, &CoefficientSet::H, &CoefficientSet::s, &CoefficientSet::t, &CoefficientSet::u,
      &CoefficientSet::v, &CoefficientSet::l, &CoefficientSet::m, &CoefficientSet::n};
  return members[k];
}

/// Nonzero entries as [mu, nu, lambda, "p/q"], indices 1-based.
inline Json to_json(const StructureConstants& C) {
  Json c = Json::array();
  for (std::size_t a = 0; a < C.dim(); ++a)
    for (std::size_t b = 0; b < C.dim(); ++b)
      for (std::size_t l = 0; l < C.dim(); ++l)
        if (C(a, b, l) != 0) c.push_back({a + 1, b + 1, l + 1, format_rational(C(a, b, l))});
  return c;
}

/// C lists nonzero entries as [mu, nu, lambda, "p/q"], indices 1-based.
inline Json to_json(const CoefficientSet& cs) {
  Json j;
  j["dimL00"] = cs.dim00;
  j["dimL01"] = cs.dim01;
  j["dimL10"] = cs.dim10;
  j["C"] = to_json(cs.C);
  for (std::size_t k = 0; k < 9; ++k) {
    Json fam = Json::array();
    for (const auto& m : cs.*family_member(k)) fam.push_back(to_json(m));
    j[kFamilyNames[k]] = fam;
  }
  return j;
}

inline CoefficientSet coefficients_from_json(const Json& j, const std::string& root = "$") {
  CoefficientSet cs;
  cs.dim00 = j.is_object() && j.contains("dimL00") ? detail::count(j["dimL00"], root + ".dimL00") : 4;
  cs.dim01 = detail::count(detail::member(j, "dimL01", root), root + ".dimL01");
  cs.dim10 = detail::count(detail::member(j, "dimL10", root), root + ".dimL10");
  cs.C = StructureConstants(cs.dim00);
  const auto cpath = root + ".C";
  const auto& c = detail::array(detail::member(j, "C", root), cpath);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const auto p = detail::at(cpath, k);
    const auto& e = detail::array(c[k], p);
    if (e.size() != 4) throw InputError(p + ": expected [mu, nu, lambda, coeff]");
    std::size_t idx[3];
    for (std::size_t q = 0; q < 3; ++q) {
      idx[q] = detail::count(e[q], detail::at(p, q));
      if (idx[q] < 1 || idx[q] > cs.dim00)
        throw InputError(detail::at(p, q) + ": index out of range 1.." + std::to_string(cs.dim00));
    }
    cs.C(idx[0] - 1, idx[1] - 1, idx[2] - 1) = detail::rational(e[3], detail::at(p, 3));
  }
  for (std::size_t k = 0; k < 9; ++k) {
    const auto fpath = root + "." + kFamilyNames[k];
    const auto& fam = detail::array(detail::member(j, kFamilyNames[k], root), fpath);
    auto& target = cs.*family_member(k);
    for (std::size_t q = 0; q < fam.size(); ++q) target.push_back(matrix_from_json(fam[q], detail::at(fpath, q)));
  }
  try {
    validate_shape(cs);
  } catch (const InputError& e) {
    throw InputError(root + "." + e.what());
  }
  return cs;
}

// ---------------------------------------------------------------------------
// Reports.

inline Json to_json(const JacobiReport& r, const GradedAlgebra& A) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"triple", {A.name_of(f.triple[0]), A.name_of(f.triple[1]), A.name_of(f.triple[2])}},
                        {"residual", terms_to_json(A, f.residual)}});
  return {{"algebra", r.subject}, {"checked", r.checked}, {"failures", failures}};
}

inline Json to_json(const PairReport& r, const GradedAlgebra& A) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"pair", {A.name_of(f.a), A.name_of(f.b)}}, {"residual", terms_to_json(A, f.residual)}});
  return {{"checked", r.checked}, {"failures", failures}};
}

inline Json to_json(const ConstraintReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"family", to_string(f.family)},
                        {"class", info(f.family).jacobi_class},
                        {"indices", f.indices},
                        {"residual", to_json(f.residual)}});
  return {{"subject", r.subject}, {"checked", r.checked}, {"failures", failures}};
}

/// Fixed 17-significant-digit rendering so reports are byte-stable.
inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline Json to_json(const std::vector<NamedResidual>& rs) {
  Json out = Json::array();
  for (const auto& r : rs) out.push_back({{"relation", r.relation}, {"residual", format_double(r.residual)}});
  return out;
}

inline Json to_json(const RealizationReport& r, const GradedAlgebra& A) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"a", A.name_of(e.a)},
                       {"b", A.name_of(e.b)},
                       {"bracket", e.kind == BracketKind::Commutator ? "commutator" : "anticommutator"},
                       {"residual", format_double(e.residual)},
                       {"passed", e.residual <= r.tolerance}});
  return {{"algebra", r.algebra},
          {"tolerance", format_double(r.tolerance)},
          {"margin", r.margin},
          {"max_residual", format_double(r.max_residual())},
          {"entries", entries}};
}

// ---------------------------------------------------------------------------
// Solver.

inline Json to_json(const SolverConfig& c) {
  Json pool = Json::array();
  for (const auto& x : c.entry_pool) pool.push_back(format_rational(x));
  Json j{{"dimL01", c.dim01},
         {"dimL10", c.dim10},
         {"entry_pool", pool},
         {"sparsity_budget", c.sparsity_budget},
         {"cap", c.cap},
         {"run_representation", c.run_representation},
         {"run_linear", c.run_linear},
         {"run_bilinear", c.run_bilinear},
         {"canonicalize", c.canonicalize}};
  if (c.partial) j["partial"] = to_json(*c.partial);
  return j;
}

/// Every key is optional; absent keys keep SolverConfig defaults.
inline SolverConfig solver_config_from_json(const Json& j, const std::string& root = "$") {
  if (!j.is_object()) throw InputError(root + ": expected an object");
  SolverConfig c;
  const auto flag = [&](const char* key, bool& out) {
    if (!j.contains(key)) return;
    if (!j[key].is_boolean()) throw InputError(root + "." + key + ": expected a boolean");
    out = j[key].get<bool>();
  };
  if (j.contains("dimL01")) c.dim01 = detail::count(j["dimL01"], root + ".dimL01");
  if (j.contains("dimL10")) c.dim10 = detail::count(j["dimL10"], root + ".dimL10");
  if (j.contains("entry_pool")) {
    const auto& pool = detail::array(j["entry_pool"], root + ".entry_pool");
    c.entry_pool.clear();
    for (std::size_t k = 0; k < pool.size(); ++k)
      c.entry_pool.push_back(detail::rational(pool[k], detail::at(root + ".entry_pool", k)));
  }
  if (j.contains("sparsity_budget")) c.sparsity_budget = detail::count(j["sparsity_budget"], root + ".sparsity_budget");
  if (j.contains("cap")) c.cap = detail::count(j["cap"], root + ".cap");
  flag("run_representation", c.run_representation);
  flag("run_linear", c.run_linear);
  flag("run_bilinear", c.run_bilinear);
  flag("canonicalize", c.canonicalize);
  if (j.contains("partial")) c.partial = coefficients_from_json(j["partial"], root + ".partial");
  return c;
}

inline Json to_json(const SolverOutput& out) {
  Json log = Json::array();
  for (const auto& s : out.stage_log) {
    Json counts = Json::object();
    for (const auto& [k, v] : s.counts) counts[k] = v;
    log.push_back({{"stage", s.stage}, {"counts", counts}});
  }
  Json sols = Json::array();
  for (const auto& cs : out.solutions) sols.push_back(to_json(cs));
  return {{"stage_log", log}, {"solutions", sols}};
}

}  // namespace z22::io

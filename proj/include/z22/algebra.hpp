#pragma once

#include "z22/grading.hpp"
#include "z22/rational.hpp"
#include "z22/report.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace z22 {

/// Sparse combination sum c_k * gen_k keyed by generator index. Never holds
/// zero coefficients.
using LinearCombination = std::map<std::size_t, Rational>;

inline void accumulate(LinearCombination& into, std::size_t gen, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(gen, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

inline void add_scaled(LinearCombination& into, const LinearCombination& x, const Rational& s) {
  if (s == 0) return;
  for (const auto& [g, c] : x) accumulate(into, g, s * c);
}

inline LinearCombination scaled(const LinearCombination& x, const Rational& s) {
  LinearCombination out;
  add_scaled(out, x, s);
  return out;
}

struct Generator {
  std::string name;
  Degree degree;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Finite-dimensional (Z2)^2-graded algebra given by a structure-constant
/// table over ordered generator pairs. Immutable once built; use
/// AlgebraBuilder. Absent entries are zero products.
class GradedAlgebra {
 public:
  using Table = std::map<std::pair<std::size_t, std::size_t>, LinearCombination>;

  GradedAlgebra() = default;

  const std::string& name() const { return name_; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  const Table& table() const { return table_; }

  Degree degree(std::size_t g) const { return generators_.at(g).degree; }
  const std::string& name_of(std::size_t g) const { return generators_.at(g).name; }

  std::size_t index(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw InputError("unknown generator '" + std::string(name) + "'");
    return it->second;
  }
  bool contains(std::string_view name) const { return index_.count(std::string(name)) != 0; }

  /// Stored product of two basis generators (empty when zero).
  const LinearCombination& entry(std::size_t a, std::size_t b) const {
    static const LinearCombination kZero;
    auto it = table_.find({a, b});
    return it == table_.end() ? kZero : it->second;
  }

  /// Combination from (name, coefficient) pairs.
  LinearCombination combination(
      const std::vector<std::pair<std::string, Rational>>& terms) const {
    LinearCombination out;
    for (const auto& [n, c] : terms) accumulate(out, index(n), c);
    return out;
  }

  friend bool operator==(const GradedAlgebra& x, const GradedAlgebra& y) {
    return x.name_ == y.name_ && x.generators_ == y.generators_ && x.table_ == y.table_;
  }

 private:
  friend class AlgebraBuilder;

  std::string name_;
  std::vector<Generator> generators_;
  std::unordered_map<std::string, std::size_t> index_;
  Table table_;
};

class AlgebraBuilder {
 public:
  explicit AlgebraBuilder(std::string name) { algebra_.name_ = std::move(name); }

  std::size_t add_generator(std::string name, Degree degree) {
    if (name.empty()) throw InputError("empty generator name");
    const std::size_t id = algebra_.generators_.size();
    if (!algebra_.index_.emplace(name, id).second)
      throw InputError("duplicate generator '" + name + "'");
    algebra_.generators_.push_back({std::move(name), degree});
    return id;
  }

  std::size_t index(std::string_view name) const { return algebra_.index(name); }

  /// Stores exactly the ordered entry (a,b); the reverse order is untouched.
  AlgebraBuilder& set_ordered(std::size_t a, std::size_t b, LinearCombination value) {
    check(a);
    check(b);
    for (const auto& [g, c] : value) check(g);
    if (value.empty())
      algebra_.table_.erase({a, b});
    else
      algebra_.table_[{a, b}] = std::move(value);
    return *this;
  }

  /// Stores (a,b) and the graded-antisymmetric partner
  /// b o a = -(-1)^{g(a).g(b)} a o b.
  AlgebraBuilder& set_bracket(std::size_t a, std::size_t b, const LinearCombination& value) {
    const Degree da = algebra_.degree(a);
    const Degree db = algebra_.degree(b);
    set_ordered(a, b, value);
    if (a != b) set_ordered(b, a, scaled(value, Rational(-sign(da, db))));
    return *this;
  }

  AlgebraBuilder& set_bracket(std::string_view a, std::string_view b,
                              const std::vector<std::pair<std::string, Rational>>& terms) {
    return set_bracket(index(a), index(b), algebra_.combination(terms));
  }

  bool has_entry(std::size_t a, std::size_t b) const {
    return algebra_.table_.count({a, b}) != 0;
  }

  GradedAlgebra build() && { return std::move(algebra_); }
  GradedAlgebra build() const& { return algebra_; }

 private:
  void check(std::size_t g) const {
    if (g >= algebra_.generators_.size())
      throw InputError("generator index " + std::to_string(g) + " out of range");
  }

  GradedAlgebra algebra_;
};

/// Bilinear extension of the table.
inline LinearCombination product(const GradedAlgebra& A, const LinearCombination& x,
                                 const LinearCombination& y) {
  LinearCombination out;
  for (const auto& [a, ca] : x) {
    if (a >= A.size()) throw InputError("generator index out of range");
    for (const auto& [b, cb] : y) {
      if (b >= A.size()) throw InputError("generator index out of range");
      add_scaled(out, A.entry(a, b), ca * cb);
    }
  }
  return out;
}

inline LinearCombination product(const GradedAlgebra& A, std::string_view a, std::string_view b) {
  return A.entry(A.index(a), A.index(b));
}

struct PairFailure {
  std::size_t a = 0;
  std::size_t b = 0;
  /// Closure: the offending terms. Antisymmetry: table(b,a) + (-1)^dot table(a,b).
  LinearCombination residual;
};

using PairReport = VerificationReport<PairFailure>;

/// Every product must land in degree g(a)+g(b).
inline PairReport check_closure(const GradedAlgebra& A) {
  PairReport report{A.name(), 0, {}};
  for (const auto& [key, value] : A.table()) {
    ++report.checked;
    const Degree target = A.degree(key.first) + A.degree(key.second);
    LinearCombination bad;
    for (const auto& [g, c] : value)
      if (A.degree(g) != target) bad.emplace(g, c);
    if (!bad.empty()) report.failures.push_back({key.first, key.second, std::move(bad)});
  }
  return report;
}

/// table(b,a) = -(-1)^{dot} table(a,b) over every pair touched by the table.
inline PairReport check_antisymmetry(const GradedAlgebra& A) {
  PairReport report{A.name(), 0, {}};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [key, value] : A.table()) {
    auto [a, b] = key;
    if (a > b) std::swap(a, b);
    pairs.emplace_back(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (const auto& [a, b] : pairs) {
    ++report.checked;
    LinearCombination residual = A.entry(b, a);
    add_scaled(residual, A.entry(a, b), Rational(sign(A.degree(a), A.degree(b))));
    if (!residual.empty()) report.failures.push_back({a, b, std::move(residual)});
  }
  return report;
}

}  // namespace z22

namespace z22 {

/// Sub-table on the generators whose degree is in `keep`. Throws InputError
/// when a product of kept generators has a component outside them.
inline GradedAlgebra restrict_to_degrees(const GradedAlgebra& A, const std::vector<Degree>& keep,
                                         std::string name) {
  AlgebraBuilder b(std::move(name));
  std::vector<std::size_t> remap(A.size(), A.size());
  for (std::size_t g = 0; g < A.size(); ++g)
    if (std::find(keep.begin(), keep.end(), A.degree(g)) != keep.end())
      remap[g] = b.add_generator(A.name_of(g), A.degree(g));
  for (const auto& [key, value] : A.table()) {
    if (remap[key.first] == A.size() || remap[key.second] == A.size()) continue;
    LinearCombination lc;
    for (const auto& [g, c] : value) {
      if (remap[g] == A.size())
        throw InputError("sub-table not closed: (" + A.name_of(key.first) + "," +
                         A.name_of(key.second) + ") contains " + A.name_of(g));
      lc.emplace(remap[g], c);
    }
    b.set_ordered(remap[key.first], remap[key.second], std::move(lc));
  }
  return std::move(b).build();
}

}  // namespace z22

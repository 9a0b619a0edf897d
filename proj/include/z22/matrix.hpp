#pragma once

#include "z22/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace z22 {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InputError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Rational>& data() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& x : data_) n += x != 0;
    return n;
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const { return square() && *this == transpose(); }
  bool is_antisymmetric() const { return square() && (*this + transpose()).is_zero(); }

  RationalMatrix& operator+=(const RationalMatrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  RationalMatrix& operator-=(const RationalMatrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  RationalMatrix& operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  /// this += s * o
  void add_scaled(const RationalMatrix& o, const Rational& s) {
    require_same_shape(o);
    if (s == 0) return;
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (o.data_[k] != 0) data_[k] += s * o.data_[k];
  }

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator-(RationalMatrix a) { return a *= Rational(-1); }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_)
      throw InputError("matrix product shape mismatch " + a.shape() + " * " + b.shape());
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void require_same_shape(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw InputError("matrix shape mismatch " + shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) {
  return a * b - b * a;
}

using RationalVector = std::vector<Rational>;

/// Reduced row echelon form with the pivot column of each nonzero row.
struct RowEchelon {
  RationalMatrix matrix;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

inline RowEchelon rref(RationalMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(r, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.matrix = std::move(m);
  return out;
}

/// Basis of {x : M x = 0}; one vector per free column, with a 1 there.
inline std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.matrix(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solution set of M x = b, parametrized by its free columns:
/// x = particular + sum_f x_f * direction_f.
struct AffineSolution {
  RationalVector particular;
  std::vector<std::size_t> free_columns;
  std::vector<RationalVector> directions;

  std::size_t dimension() const { return free_columns.size(); }

  /// Point with the given values at the free columns.
  RationalVector point(const RationalVector& free_values) const {
    RationalVector x = particular;
    for (std::size_t f = 0; f < directions.size(); ++f) {
      if (free_values[f] == 0) continue;
      for (std::size_t k = 0; k < x.size(); ++k)
        if (directions[f][k] != 0) x[k] += free_values[f] * directions[f][k];
    }
    return x;
  }
};

inline std::optional<AffineSolution> solve_affine(const RationalMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) throw InputError("right-hand side length mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  AffineSolution s;
  s.particular.assign(m.cols(), Rational(0));
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    is_pivot[e.pivots[r]] = true;
    s.particular[e.pivots[r]] = e.matrix(r, m.cols());
  }
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.matrix(r, f);
    s.free_columns.push_back(f);
    s.directions.push_back(std::move(v));
  }
  return s;
}

/// Coefficients c with sum_k c_k basis_k = v, if v lies in the span.
inline std::optional<RationalVector> span_coordinates(const std::vector<RationalVector>& basis,
                                                      const RationalVector& v) {
  RationalMatrix m(v.size(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].size() != v.size()) throw InputError("basis vector length mismatch");
    for (std::size_t i = 0; i < v.size(); ++i) m(i, k) = basis[k][i];
  }
  auto s = solve_affine(m, v);
  if (!s) return std::nullopt;
  return s->particular;
}

}  // namespace z22

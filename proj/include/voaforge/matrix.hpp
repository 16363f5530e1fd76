#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>

#include "voaforge/common.hpp"

namespace voaforge {

/// Dense matrix over the rationals, row-major. Immutable in spirit: all
/// operations return new values.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw error("ragged matrix initializer");
      for (long x : r) a_.emplace_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<Vec>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw error("ragged row list");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }

  Vec col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator+(const Matrix& o) const {
    require_same_shape(o);
    Matrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    require_same_shape(o);
    Matrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw error("matrix product: shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& x = (*this)(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
      }
    return r;
  }

  Matrix operator*(const Rational& s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
  }

  /// Matrix-vector product, v as a column.
  Vec apply(const Vec& v) const {
    if (v.size() != cols_) throw error("matrix apply: length mismatch");
    Vec out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  Rational trace() const {
    if (rows_ != cols_) throw error("trace of non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw error("matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

/// Reduced row-echelon form (Gauss-Jordan with exact pivots). Row space is
/// preserved; the result is the unique canonical representative.
inline Matrix rref(Matrix m) {
  std::size_t r = 0;
  for (std::size_t lead = 0; lead < m.cols() && r < m.rows(); ++lead) {
    std::size_t i = r;
    while (i < m.rows() && m(i, lead) == 0) ++i;
    if (i == m.rows()) continue;
    if (i != r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(i, j), m(r, j));
    Rational inv = 1 / m(r, lead);
    for (std::size_t j = lead; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t k = 0; k < m.rows(); ++k) {
      if (k == r || m(k, lead) == 0) continue;
      Rational f = m(k, lead);
      for (std::size_t j = lead; j < m.cols(); ++j) m(k, j) -= f * m(r, j);
    }
    ++r;
  }
  return m;
}

inline std::size_t rank(const Matrix& m) {
  Matrix e = rref(m);
  std::size_t r = 0;
  for (std::size_t i = 0; i < e.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < e.cols(); ++j)
      if (e(i, j) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) ++r;
  }
  return r;
}

/// Basis of {v : m v = 0} (columns as unknowns), returned as rows, themselves
/// in reduced echelon form.
inline Matrix kernel_basis(const Matrix& m) {
  Matrix e = rref(m);
  std::size_t n = m.cols();
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < e.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (e(i, j) != 0) {
        pivot_col.push_back(j);
        is_pivot[j] = true;
        break;
      }
  std::vector<Vec> out;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec v(n, Rational(0));
    v[j] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = -e(i, j);
    out.push_back(std::move(v));
  }
  return rref(Matrix::from_rows(out));
}

/// Echelon-canonical particular solution of A x = b (free variables zero),
/// or nullopt when the system is inconsistent.
inline std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw error("solve: rhs length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Matrix e = rref(aug);
  Vec x(a.cols(), Rational(0));
  for (std::size_t i = 0; i < e.rows(); ++i) {
    std::size_t j = 0;
    while (j < e.cols() && e(i, j) == 0) ++j;
    if (j == e.cols()) continue;
    if (j == a.cols()) return std::nullopt;  // 0 = nonzero
    x[j] = e(i, a.cols());
  }
  return x;
}

inline Rational det(Matrix m) {
  if (m.rows() != m.cols()) throw error("det of non-square matrix");
  Rational d = 1;
  std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    Rational inv = 1 / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw error("inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Matrix e = rref(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (e(i, i) != 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e(i, n + j);
  return inv;
}

inline Vec scaled(Vec v, const Rational& s) {
  for (auto& x : v) x *= s;
  return v;
}

inline Vec add(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw error("vector add: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vec sub(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw error("vector sub: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Rational(0));
  v.at(i) = 1;
  return v;
}

}  // namespace voaforge

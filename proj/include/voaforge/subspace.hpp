#pragma once

#include <vector>

#include "voaforge/matrix.hpp"

namespace voaforge {

/// A linear subspace of Q^n stored by its reduced-echelon basis. The echelon
/// form is the unique canonical representative, so equality of subspaces is
/// componentwise equality of bases.
class Subspace {
 public:
  Subspace() : ambient_(0) {}

  static Subspace zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(0, ambient);
    return s;
  }

  static Subspace full(std::size_t ambient) {
    return span(Matrix::identity(ambient));
  }

  /// Row space of the given matrix.
  static Subspace span(const Matrix& rows) {
    Subspace s;
    s.ambient_ = rows.cols();
    Matrix e = rref(rows);
    std::vector<Vec> keep;
    for (std::size_t i = 0; i < e.rows(); ++i) {
      Vec r = e.row(i);
      if (!is_zero_vec(r)) keep.push_back(std::move(r));
    }
    s.basis_ = Matrix::from_rows(keep);
    if (keep.empty()) s.basis_ = Matrix(0, s.ambient_);
    return s;
  }

  static Subspace span(std::size_t ambient, const std::vector<Vec>& vecs) {
    if (vecs.empty()) return zero(ambient);
    for (const auto& v : vecs)
      if (v.size() != ambient) throw error("subspace span: length mismatch");
    return span(Matrix::from_rows(vecs));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool is_zero() const { return dim() == 0; }

  bool contains(const Vec& v) const {
    if (v.size() != ambient_) throw error("contains: ambient mismatch");
    Vec r = reduce(v);
    return is_zero_vec(r);
  }

  bool contains(const Subspace& other) const {
    check_ambient(other);
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_vector(i))) return false;
    return true;
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

  /// Residual of v after elimination against the echelon basis; zero iff
  /// v lies in the subspace.
  Vec reduce(Vec v) const {
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      std::size_t p = pivot_of(i);
      if (v[p] != 0) {
        Rational f = v[p];
        for (std::size_t j = p; j < ambient_; ++j) v[j] -= f * basis_(i, j);
      }
    }
    return v;
  }

  /// Coordinates of v in the echelon basis; throws if v is not a member.
  Vec coordinates(const Vec& v) const {
    Vec c(dim());
    Vec w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      std::size_t p = pivot_of(i);
      c[i] = w[p];
      if (w[p] != 0) {
        Rational f = w[p];
        for (std::size_t j = p; j < ambient_; ++j) w[j] -= f * basis_(i, j);
      }
    }
    if (!is_zero_vec(w)) throw error("coordinates: vector not in subspace");
    return c;
  }

  friend Subspace sum(const Subspace& a, const Subspace& b) {
    a.check_ambient(b);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
    for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
    return span(a.ambient_, rows);
  }

  /// Intersection via annihilators: A cap B = ann(ann A + ann B).
  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    a.check_ambient(b);
    Subspace anna = a.annihilator();
    Subspace annb = b.annihilator();
    return sum(anna, annb).annihilator();
  }

  /// {v : <v, s> = 0 for all s in this} with the standard dot product.
  Subspace annihilator() const {
    if (dim() == 0) return full(ambient_);
    Subspace s;
    s.ambient_ = ambient_;
    s.basis_ = kernel_basis(basis_);
    return s;
  }

 private:
  std::size_t pivot_of(std::size_t i) const {
    for (std::size_t j = 0; j < ambient_; ++j)
      if (basis_(i, j) != 0) return j;
    throw error("zero row in echelon basis");
  }

  void check_ambient(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw error("subspace ambient mismatch");
  }

  std::size_t ambient_;
  Matrix basis_;
};

/// Kernel of m as a map on column vectors.
inline Subspace kernel(const Matrix& m) {
  Subspace s = Subspace::zero(m.cols());
  Matrix kb = kernel_basis(m);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < kb.rows(); ++i) rows.push_back(kb.row(i));
  return Subspace::span(m.cols(), rows);
}

/// Row space of m.
inline Subspace row_space(const Matrix& m) { return Subspace::span(m); }

/// Representatives in `big` of a basis of big/small. Requires small <= big.
inline std::vector<Vec> quotient_basis(const Subspace& big,
                                       const Subspace& small) {
  if (big.ambient_dim() != small.ambient_dim())
    throw error("quotient_basis: ambient mismatch");
  if (!big.contains(small)) throw error("quotient_basis: small not in big");
  std::vector<Vec> reps;
  std::vector<Vec> accum;
  for (std::size_t i = 0; i < small.dim(); ++i)
    accum.push_back(small.basis_vector(i));
  Subspace cur = small;
  for (std::size_t i = 0; i < big.dim(); ++i) {
    Vec v = big.basis_vector(i);
    if (cur.contains(v)) continue;
    reps.push_back(v);
    accum.push_back(v);
    cur = Subspace::span(big.ambient_dim(), accum);
  }
  return reps;
}

/// {v : form(v, s) = 0 for all s in the subspace}, i.e. the kernel of the
/// map v -> (s_i^T form v)_i.
inline Subspace orthogonal_complement(const Subspace& s, const Matrix& form) {
  if (form.rows() != s.ambient_dim() || form.cols() != s.ambient_dim())
    throw error("orthogonal_complement: form shape mismatch");
  if (s.dim() == 0) return Subspace::full(s.ambient_dim());
  Matrix constraints = s.basis() * form;  // rows: s_i^T * form
  return kernel(constraints);
}

}  // namespace voaforge

#pragma once

#include <algorithm>

#include "voaforge/frobenius.hpp"

namespace voaforge {

using IntVec = std::vector<long>;

inline Vec to_rational_vec(const IntVec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = rat(v[i]);
  return out;
}

/// Positive-definite even lattice of rank d, given by its Gram matrix.
struct EvenLattice {
  std::size_t rank = 0;
  Matrix gram;

  static EvenLattice make(const Matrix& gram) {
    EvenLattice l;
    l.rank = gram.rows();
    l.gram = gram;
    if (gram.rows() != gram.cols()) throw check_error("lattice: Gram not square");
    for (std::size_t i = 0; i < l.rank; ++i)
      for (std::size_t j = 0; j < l.rank; ++j) {
        if (!is_integer(gram(i, j)))
          throw check_error("lattice: Gram entries must be integers");
        if (gram(i, j) != gram(j, i))
          throw check_error("lattice: Gram not symmetric");
      }
    for (std::size_t i = 0; i < l.rank; ++i)
      if (gram(i, i).get_num() % 2 != 0)
        throw check_error("lattice: Gram diagonal must be even");
    // positive definiteness via leading principal minors
    for (std::size_t k = 1; k <= l.rank; ++k) {
      Matrix lead(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) lead(i, j) = gram(i, j);
      if (det(lead) <= 0)
        throw check_error("lattice: Gram not positive definite");
    }
    return l;
  }

  Rational inner(const Vec& a, const Vec& b) const {
    return dot(a, gram.apply(b));
  }
  Rational inner(const IntVec& a, const IntVec& b) const {
    return inner(to_rational_vec(a), to_rational_vec(b));
  }
  Rational inner(const IntVec& a, const Vec& b) const {
    return inner(to_rational_vec(a), b);
  }
  Rational norm(const Vec& a) const { return inner(a, a); }
  Rational norm(const IntVec& a) const { return inner(a, a); }
};

/// A lattice with a shift vector h in the dual lattice with 2h in L.
struct ShiftDatum {
  EvenLattice lattice;
  Vec h;

  static ShiftDatum make(const EvenLattice& lattice, const Vec& h) {
    if (h.size() != lattice.rank) throw check_error("shift: wrong length");
    ShiftDatum s;
    s.lattice = lattice;
    s.h = h;
    Vec gh = lattice.gram.apply(h);
    for (const auto& x : gh)
      if (!is_integer(x))
        throw check_error("shift: h is not in the dual lattice");
    for (const auto& x : h)
      if (!is_integer(x * 2))
        throw check_error("shift: 2h is not in the lattice");
    return s;
  }

  IntVec two_h() const {
    IntVec t(h.size());
    for (std::size_t i = 0; i < h.size(); ++i)
      t[i] = Rational(h[i] * 2).get_num().get_si();
    return t;
  }
};

namespace detail {

/// Exact LDL^T data for the quadratic form: Q(x) = sum_i d_i (x_i + sum_{j>i} r_ij x_j)^2.
struct LdlData {
  std::vector<Rational> d;
  Matrix r;  // unit upper triangular
};

inline LdlData ldl_decompose(const Matrix& gram) {
  std::size_t n = gram.rows();
  LdlData out;
  out.d.assign(n, Rational(0));
  out.r = Matrix::identity(n);
  Matrix a = gram;
  for (std::size_t i = 0; i < n; ++i) {
    out.d[i] = a(i, i);
    if (out.d[i] <= 0) throw check_error("ldl: form not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) out.r(i, j) = a(i, j) / out.d[i];
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = i + 1; k < n; ++k)
        a(j, k) -= out.d[i] * out.r(i, j) * out.r(i, k);
  }
  return out;
}

/// Integers m with lo <= m <= hi for rational bounds, conservatively widened
/// by the floor-sqrt trick; callers re-filter by the exact inequality.
inline void integer_range(const Rational& center, const Rational& radius_sq,
                          long& lo, long& hi) {
  // |m - center| <= sqrt(radius_sq)
  if (radius_sq < 0) {
    lo = 1;
    hi = 0;
    return;
  }
  Integer num = radius_sq.get_num(), den = radius_sq.get_den();
  Integer s = isqrt_floor(num * den);  // floor(sqrt(num*den))
  Rational bound = Rational(s + 1) / Rational(den);  // sqrt(radius_sq) < bound
  Rational lo_r = center - bound, hi_r = center + bound;
  mpz_class fl, ce;
  mpz_fdiv_q(fl.get_mpz_t(), hi_r.get_num().get_mpz_t(), hi_r.get_den().get_mpz_t());
  mpz_cdiv_q(ce.get_mpz_t(), lo_r.get_num().get_mpz_t(), lo_r.get_den().get_mpz_t());
  lo = ce.get_si();
  hi = fl.get_si();
}

}  // namespace detail

/// All lattice vectors alpha with Q(alpha - center) <= radius_sq, by
/// recursive coordinate-bound enumeration on the exact LDL^T decomposition.
/// The result is sorted lexicographically.
inline std::vector<IntVec> short_vectors(const EvenLattice& l, const Vec& center,
                                         const Rational& radius_sq) {
  if (center.size() != l.rank) throw error("short_vectors: center length");
  if (radius_sq < 0) throw error("short_vectors: negative radius");
  detail::LdlData ldl = detail::ldl_decompose(l.gram);
  std::vector<IntVec> out;
  IntVec x(l.rank, 0);
  // Q(x - c) = sum_i d_i (y_i)^2 with y_i = (x_i - c_i) + sum_{j>i} r_ij (x_j - c_j).
  // Enumerate from the last coordinate down.
  std::vector<Rational> diff(l.rank, Rational(0));
  auto recurse = [&](auto&& self, std::size_t level, const Rational& remaining) -> void {
    if (level == 0 && l.rank == 0) {
      out.push_back(x);
      return;
    }
    std::size_t i = level - 1;
    // y_i = (x_i - c_i) + t where t = sum_{j>i} r_ij diff_j
    Rational t = 0;
    for (std::size_t j = i + 1; j < l.rank; ++j)
      if (ldl.r(i, j) != 0) t += ldl.r(i, j) * diff[j];
    // d_i (x_i - c_i + t)^2 <= remaining
    Rational rad = remaining / ldl.d[i];
    long lo, hi;
    detail::integer_range(center[i] - t, rad, lo, hi);
    for (long m = lo; m <= hi; ++m) {
      Rational y = Rational(m) - center[i] + t;
      Rational used = ldl.d[i] * y * y;
      if (used > remaining) continue;
      x[i] = m;
      diff[i] = Rational(m) - center[i];
      if (i == 0)
        out.push_back(x);
      else
        self(self, i, remaining - used);
    }
    x[i] = 0;
    diff[i] = 0;
  };
  if (l.rank == 0) {
    out.push_back(x);
  } else {
    recurse(recurse, l.rank, radius_sq);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// True iff no coset element of L - h is shorter than -h, i.e. the grading
/// inequality (2h, alpha) <= (alpha, alpha) holds across the lattice.
inline bool shift_admissible(const ShiftDatum& s) {
  Rational hh = s.lattice.norm(s.h);
  for (const auto& alpha : short_vectors(s.lattice, s.h, hh)) {
    Vec d = sub(to_rational_vec(alpha), s.h);
    if (s.lattice.norm(d) < hh) return false;
  }
  return true;
}

/// The sphere A = {alpha in L : (alpha, alpha) = (2h, alpha)}; always
/// contains 0 and 2h. Sorted lexicographically.
inline std::vector<IntVec> enumerate_A(const ShiftDatum& s) {
  if (!shift_admissible(s)) throw check_error("enumerate_A: shift not admissible");
  Rational hh = s.lattice.norm(s.h);
  std::vector<IntVec> out;
  for (const auto& alpha : short_vectors(s.lattice, s.h, hh)) {
    Vec d = sub(to_rational_vec(alpha), s.h);
    if (s.lattice.norm(d) == hh) out.push_back(alpha);
  }
  return out;
}

/// Bilinear two-cocycle with values +-1 satisfying
/// eps(a,b) eps(b,a) = (-1)^{(a,b)}: lower-triangular convention
/// eps(e_i, e_j) = (-1)^{(e_i, e_j)} for i > j, +1 otherwise.
struct Cocycle {
  Matrix exponents;  // integer 0/1 matrix: eps(e_i,e_j) = (-1)^{exponents(i,j)}

  /// Sign on arbitrary lattice vectors by bilinearity.
  int sign(const IntVec& a, const IntVec& b) const {
    long e = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] == 0) continue;
        if (exponents(i, j) != 0) e += a[i] * b[j];
      }
    }
    return ((e % 2) + 2) % 2 == 0 ? 1 : -1;
  }
};

inline Cocycle build_cocycle(const EvenLattice& l) {
  Cocycle c;
  c.exponents = Matrix(l.rank, l.rank);
  for (std::size_t i = 0; i < l.rank; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Integer g = l.gram(i, j).get_num();
      c.exponents(i, j) = rat(mpz_class(g % 2).get_si() != 0 ? 1 : 0);
    }
  return c;
}

/// The weight-zero component of the shifted lattice theory: basis
/// {e^alpha : alpha in A}, product eps(a,b) e^{a+b} when a+b stays in A and
/// zero otherwise, unit e^0, counit picking e^{2h}, grading (h, alpha).
struct V0Build {
  FrobeniusAlgebra algebra;
  GradingOperator grading;
  std::vector<IntVec> points;  // A, sorted; basis order of the algebra
  std::size_t unit_index = 0;
  std::size_t top_index = 0;   // index of e^{2h}
};

inline V0Build build_V0(const ShiftDatum& s, const Cocycle& eps) {
  V0Build b;
  b.points = enumerate_A(s);
  std::size_t n = b.points.size();
  auto find_point = [&](const IntVec& v) -> std::optional<std::size_t> {
    auto it = std::lower_bound(b.points.begin(), b.points.end(), v);
    if (it == b.points.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - b.points.begin());
  };
  IntVec zero(s.lattice.rank, 0);
  b.unit_index = *find_point(zero);
  b.top_index = *find_point(s.two_h());

  b.algebra = FrobeniusAlgebra::zero_product(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntVec sum_ij(s.lattice.rank);
      for (std::size_t k = 0; k < s.lattice.rank; ++k)
        sum_ij[k] = b.points[i][k] + b.points[j][k];
      if (auto kidx = find_point(sum_ij))
        b.algebra.mult[i][j][*kidx] = rat(eps.sign(b.points[i], b.points[j]));
    }
  b.algebra.unit[b.unit_index] = 1;
  b.algebra.counit[b.top_index] = 1;

  b.grading.matrix = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational lam = s.lattice.inner(b.points[i], s.h);
    if (!is_integer(lam))
      throw check_error("build_V0: non-integer grading eigenvalue");
    b.grading.matrix(i, i) = lam;
  }

  if (!verify_frobenius(b.algebra))
    throw check_error("build_V0: output is not a Frobenius algebra");
  if (!is_local(b.algebra)) throw check_error("build_V0: output is not local");
  Subspace t = minimal_ideal(b.algebra);
  if (!(t == Subspace::span(n, {unit_vec(n, b.top_index)})))
    throw check_error("build_V0: minimal ideal is not spanned by e^{2h}");
  return b;
}

}  // namespace voaforge

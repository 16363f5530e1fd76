#pragma once

#include <algorithm>
#include <map>
#include <optional>

#include "voaforge/polynomial.hpp"
#include "voaforge/subspace.hpp"

namespace voaforge {

/// Finite-dimensional commutative unital algebra with a linear functional
/// (counit). The bilinear form is always (a, b) = counit(a * b).
struct FrobeniusAlgebra {
  std::size_t dim = 0;
  std::vector<std::vector<Vec>> mult;  // mult[i][j]: coordinates of e_i * e_j
  Vec unit;
  Vec counit;

  static FrobeniusAlgebra zero_product(std::size_t n) {
    FrobeniusAlgebra a;
    a.dim = n;
    a.mult.assign(n, std::vector<Vec>(n, Vec(n, Rational(0))));
    a.unit = Vec(n, Rational(0));
    a.counit = Vec(n, Rational(0));
    return a;
  }

  Vec mult_vec(const Vec& x, const Vec& y) const {
    Vec out(dim, Rational(0));
    for (std::size_t i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (y[j] == 0) continue;
        Rational c = x[i] * y[j];
        const Vec& m = mult[i][j];
        for (std::size_t k = 0; k < dim; ++k)
          if (m[k] != 0) out[k] += c * m[k];
      }
    }
    return out;
  }

  /// Matrix of multiplication by x.
  Matrix mult_matrix(const Vec& x) const {
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      Vec col = mult_vec(x, unit_vec(dim, j));
      for (std::size_t i = 0; i < dim; ++i) m(i, j) = col[i];
    }
    return m;
  }

  Rational form(const Vec& a, const Vec& b) const {
    return dot(counit, mult_vec(a, b));
  }

  /// Gram matrix of (a, b) = counit(a * b) on the basis.
  Matrix gram() const {
    Matrix g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        Rational v = dot(counit, mult[i][j]);
        g(i, j) = v;
        g(j, i) = v;
      }
    return g;
  }
};

inline bool is_commutative(const FrobeniusAlgebra& a) {
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a.mult[i][j] != a.mult[j][i]) return false;
  return true;
}

inline bool is_associative(const FrobeniusAlgebra& a) {
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        if (a.mult_vec(a.mult[i][j], unit_vec(a.dim, k)) !=
            a.mult_vec(unit_vec(a.dim, i), a.mult[j][k]))
          return false;
  return true;
}

inline bool unit_law_holds(const FrobeniusAlgebra& a) {
  for (std::size_t i = 0; i < a.dim; ++i)
    if (a.mult_vec(a.unit, unit_vec(a.dim, i)) != unit_vec(a.dim, i))
      return false;
  return true;
}

/// Commutativity, associativity, unit law, and nondegeneracy of the form
/// counit(a * b).
inline bool verify_frobenius(const FrobeniusAlgebra& a) {
  return is_commutative(a) && is_associative(a) && unit_law_holds(a) &&
         rank(a.gram()) == a.dim;
}

/// Radical as the kernel of the trace form (x, y) -> tr(mult_x mult_y);
/// for a commutative algebra in characteristic zero this is exactly the set
/// of nilpotent elements.
inline Subspace jacobson_radical(const FrobeniusAlgebra& a) {
  std::vector<Matrix> ms;
  ms.reserve(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    ms.push_back(a.mult_matrix(unit_vec(a.dim, i)));
  Matrix tf(a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Rational t = (ms[i] * ms[j]).trace();
      tf(i, j) = t;
      tf(j, i) = t;
    }
  return kernel(tf);
}

/// Quotient algebra by an ideal, with the projection data.
struct AlgebraQuotient {
  FrobeniusAlgebra algebra;  // counit left zero; only the ring structure matters
  std::vector<Vec> reps;
  Subspace ideal;
  Matrix coord_change_inv;

  Vec project(const Vec& v) const {
    Vec s = coord_change_inv.apply(v);
    return Vec(s.begin() + static_cast<long>(ideal.dim()), s.end());
  }
};

inline AlgebraQuotient algebra_quotient(const FrobeniusAlgebra& a,
                                        const Subspace& ideal) {
  for (std::size_t i = 0; i < ideal.dim(); ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      if (!ideal.contains(a.mult_vec(ideal.basis_vector(i), unit_vec(a.dim, j))))
        throw check_error("algebra quotient: subspace is not an ideal");
  AlgebraQuotient q;
  q.ideal = ideal;
  q.reps = quotient_basis(Subspace::full(a.dim), ideal);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < ideal.dim(); ++i) rows.push_back(ideal.basis_vector(i));
  for (const auto& r : q.reps) rows.push_back(r);
  auto inv = inverse(Matrix::from_rows(rows).transpose());
  if (!inv) throw error("algebra quotient: basis change not invertible");
  q.coord_change_inv = *inv;
  std::size_t m = q.reps.size();
  q.algebra = FrobeniusAlgebra::zero_product(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      q.algebra.mult[i][j] = q.project(a.mult_vec(q.reps[i], q.reps[j]));
  q.algebra.unit = q.project(a.unit);
  return q;
}

namespace detail {

/// Splits a commutative semisimple algebra into its simple (field) factors.
/// Rational eigenvalues of multiplication operators split off factors
/// directly; blocks without rational spectrum are split via factoring the
/// minimal polynomial of a primitive element. Returns the primitive
/// idempotents. Desk scale: quotient dimension <= 8.
inline std::vector<Vec> primitive_idempotents(const FrobeniusAlgebra& q) {
  if (q.dim == 0) return {};
  std::vector<Vec> blocks_done;
  std::vector<Vec> work{q.unit};  // idempotents of blocks still to split
  auto block_elements = [&](const Vec& e) {
    // basis of the ideal e*A
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < q.dim; ++i)
      gens.push_back(q.mult_vec(e, unit_vec(q.dim, i)));
    return Subspace::span(q.dim, gens);
  };
  while (!work.empty()) {
    Vec e = work.back();
    work.pop_back();
    Subspace blk = block_elements(e);
    if (blk.dim() <= 1) {
      blocks_done.push_back(e);
      continue;
    }
    // Choose a splitting element of the block e*A: try basis vectors, then
    // sums, then a primitive element with factorable minimal polynomial.
    std::vector<Vec> candidates;
    for (std::size_t i = 0; i < blk.dim(); ++i)
      candidates.push_back(blk.basis_vector(i));
    for (std::size_t i = 0; i < blk.dim(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        candidates.push_back(add(blk.basis_vector(i), blk.basis_vector(j)));
        candidates.push_back(sub(blk.basis_vector(i), blk.basis_vector(j)));
      }
    // deterministic "generic" combinations 1*b0 + 2*b1 + 4*b2 + ...
    {
      Vec v(q.dim, Rational(0));
      Rational w = 1;
      for (std::size_t i = 0; i < blk.dim(); ++i) {
        v = add(v, scaled(blk.basis_vector(i), w));
        w *= 2;
      }
      candidates.push_back(v);
      Vec v2(q.dim, Rational(0));
      w = 1;
      for (std::size_t i = 0; i < blk.dim(); ++i) {
        v2 = add(v2, scaled(blk.basis_vector(i), w));
        w += 3;
      }
      candidates.push_back(v2);
    }
    bool split_found = false;
    for (const auto& x : candidates) {
      // minimal polynomial of x acting on the block (with unit e)
      std::vector<Vec> krylov{e};
      Vec pw = e;
      Poly mu;
      for (std::size_t d = 1; d <= blk.dim() + 1; ++d) {
        pw = q.mult_vec(pw, x);
        Matrix m(q.dim, krylov.size());
        for (std::size_t c = 0; c < krylov.size(); ++c)
          for (std::size_t r = 0; r < q.dim; ++r) m(r, c) = krylov[c][r];
        Vec rhs(q.dim);
        for (std::size_t r = 0; r < q.dim; ++r) rhs[r] = -pw[r];
        if (auto sol = solve(m, rhs)) {
          mu.assign(d + 1, Rational(0));
          for (std::size_t k = 0; k < d; ++k) mu[k] = (*sol)[k];
          mu[d] = 1;
          break;
        }
        krylov.push_back(pw);
      }
      if (mu.empty()) throw error("idempotent split: no minimal polynomial");
      if (poly_deg(mu) < 2) continue;
      auto f = poly_nontrivial_factor(mu);
      if (!f) continue;
      // mu = f * g coprime (mu squarefree in a semisimple algebra), so
      // e = e_f + e_g with e_f = g(x) * (g(x) inverse mod f applied)...
      // Simpler: e_f = image of the CRT idempotent: find u, v with
      // u f + v g = 1, then e_f = (v g)(x).
      Poly g = poly_divmod(mu, *f).first;
      // extended gcd of f and g
      Poly r0 = *f, r1 = g, s0{Rational(1)}, s1{}, t0{}, t1{Rational(1)};
      while (!r1.empty()) {
        auto [qq, rr] = poly_divmod(r0, r1);
        Poly s2 = poly_add(s0, poly_scale(poly_mul(qq, s1), Rational(-1)));
        Poly t2 = poly_add(t0, poly_scale(poly_mul(qq, t1), Rational(-1)));
        r0 = r1;
        r1 = rr;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
      }
      if (poly_deg(r0) != 0)
        continue;  // factor not coprime to cofactor; try next candidate
      Rational lead = r0[0];
      Poly vg = poly_scale(poly_mul(t0, g), 1 / lead);  // v*g with uf+vg=1
      // evaluate vg at x inside the block (unit = e)
      Vec ef(q.dim, Rational(0));
      Vec xp = e;
      for (std::size_t k = 0; k < vg.size(); ++k) {
        if (vg[k] != 0) ef = add(ef, scaled(xp, vg[k]));
        xp = q.mult_vec(xp, x);
      }
      Vec eg = sub(e, ef);
      if (is_zero_vec(ef) || is_zero_vec(eg)) continue;
      if (q.mult_vec(ef, ef) != ef)
        throw check_error("idempotent split produced a non-idempotent");
      work.push_back(ef);
      work.push_back(eg);
      split_found = true;
      break;
    }
    if (!split_found) blocks_done.push_back(e);  // block is a field
  }
  return blocks_done;
}

}  // namespace detail

/// True iff A/J(A) has no idempotents besides 0 and 1, i.e. A/J is a field.
inline bool is_local(const FrobeniusAlgebra& a) {
  Subspace j = jacobson_radical(a);
  AlgebraQuotient q = algebra_quotient(a, j);
  if (q.algebra.dim <= 1) return true;
  return detail::primitive_idempotents(q.algebra).size() == 1;
}

/// Annihilator of the radical, cross-checked against the form-orthogonal of
/// the radical; must be one-dimensional. Requires a local Frobenius algebra.
inline Subspace minimal_ideal(const FrobeniusAlgebra& a) {
  if (!verify_frobenius(a)) throw check_error("minimal_ideal: not a Frobenius algebra");
  if (!is_local(a)) throw check_error("minimal_ideal: algebra is not local");
  Subspace j = jacobson_radical(a);
  if (j.is_zero()) {
    if (a.dim != 1) throw check_error("minimal_ideal: semisimple but dim > 1");
    return Subspace::full(1);
  }
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < j.dim(); ++r) {
    Matrix m = a.mult_matrix(j.basis_vector(r));
    for (std::size_t k = 0; k < a.dim; ++k) rows.push_back(m.row(k));
  }
  Subspace ann = kernel(Matrix::from_rows(rows));
  Subspace perp = orthogonal_complement(j, a.gram());
  if (!(ann == perp))
    throw check_error("minimal_ideal: Ann(J) differs from the form-orthogonal of J");
  if (ann.dim() != 1)
    throw check_error("minimal_ideal: annihilator of J is not one-dimensional");
  return ann;
}

/// Diagonalizable operator acting as a derivation: the grading datum for the
/// de Rham checks.
struct GradingOperator {
  Matrix matrix;
};

struct DeRhamReport {
  std::vector<std::pair<long, std::size_t>> spectrum;  // (eigenvalue, multiplicity)
  long nu = 0;
  Subspace top_space;
  bool nonneg_integer_spectrum = false;
  bool zero_space_is_unit_line = false;
  bool top_space_is_minimal_ideal = false;
  bool products_respect_grading = false;
  bool orthogonality_ok = false;
  std::vector<bool> pairing_ok_per_level;
  bool perfect_pairing = false;

  bool all_pass() const {
    return nonneg_integer_spectrum && zero_space_is_unit_line &&
           top_space_is_minimal_ideal && products_respect_grading &&
           orthogonality_ok && perfect_pairing;
  }
};

inline bool is_derivation(const FrobeniusAlgebra& a, const Matrix& d) {
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Vec lhs = d.apply(a.mult[i][j]);
      Vec rhs = add(a.mult_vec(d.apply(unit_vec(a.dim, i)), unit_vec(a.dim, j)),
                    a.mult_vec(unit_vec(a.dim, i), d.apply(unit_vec(a.dim, j))));
      if (lhs != rhs) return false;
    }
  return true;
}

/// Checks the six grading/pairing clauses for a graded local Frobenius
/// algebra: nonnegative integer spectrum, unit line in degree zero,
/// one-dimensional top level equal to the minimal ideal, multiplicative
/// grading, orthogonality away from complementary degrees, and perfect
/// pairing between complementary degrees.
inline DeRhamReport de_rham_check(const FrobeniusAlgebra& a,
                                  const GradingOperator& grading) {
  const Matrix& d = grading.matrix;
  if (d.rows() != a.dim || d.cols() != a.dim)
    throw error("de_rham_check: grading dimension mismatch");
  if (!verify_frobenius(a) || !is_local(a))
    throw check_error("de_rham_check: input is not a local Frobenius algebra");
  if (!is_derivation(a, d))
    throw check_error("de_rham_check: grading operator is not a derivation");

  auto roots = rational_roots(char_poly(d));
  std::size_t total_mult = 0;
  for (const auto& [val, mult] : roots) total_mult += mult;
  if (total_mult != a.dim)
    throw check_error("de_rham_check: grading operator has irrational eigenvalues");
  for (const auto& [val, mult] : roots)
    if (!is_integer(val))
      throw check_error("de_rham_check: grading operator has non-integer rational eigenvalues");

  std::map<long, Subspace> eig;
  std::size_t geom_total = 0;
  for (const auto& [val, mult] : roots) {
    Matrix shifted = d;
    for (std::size_t i = 0; i < a.dim; ++i) shifted(i, i) -= val;
    Subspace space = kernel(shifted);
    if (space.dim() != static_cast<std::size_t>(mult))
      throw check_error("de_rham_check: grading operator is not diagonalizable");
    geom_total += space.dim();
    eig[val.get_num().get_si()] = space;
  }
  if (geom_total != a.dim)
    throw check_error("de_rham_check: grading operator is not diagonalizable");

  DeRhamReport rep;
  for (const auto& [val, space] : eig) rep.spectrum.emplace_back(val, space.dim());
  rep.nonneg_integer_spectrum = eig.begin()->first >= 0;
  rep.nu = eig.rbegin()->first;
  rep.top_space = eig.rbegin()->second;

  Subspace unit_line = Subspace::span(a.dim, {a.unit});
  rep.zero_space_is_unit_line =
      eig.count(0) != 0 && eig.at(0) == unit_line;

  Subspace minimal = minimal_ideal(a);
  rep.top_space_is_minimal_ideal =
      rep.top_space.dim() == 1 && rep.top_space == minimal;

  rep.products_respect_grading = true;
  for (const auto& [lam, sl] : eig)
    for (const auto& [mu, sm] : eig) {
      for (std::size_t i = 0; i < sl.dim(); ++i)
        for (std::size_t j = 0; j < sm.dim(); ++j) {
          Vec prod = a.mult_vec(sl.basis_vector(i), sm.basis_vector(j));
          auto it = eig.find(lam + mu);
          bool ok = (it == eig.end()) ? is_zero_vec(prod) : it->second.contains(prod);
          if (!ok) rep.products_respect_grading = false;
        }
    }

  rep.orthogonality_ok = true;
  for (const auto& [lam, sl] : eig)
    for (const auto& [mu, sm] : eig) {
      if (lam + mu == rep.nu) continue;
      for (std::size_t i = 0; i < sl.dim(); ++i)
        for (std::size_t j = 0; j < sm.dim(); ++j)
          if (a.form(sl.basis_vector(i), sm.basis_vector(j)) != 0)
            rep.orthogonality_ok = false;
    }

  rep.perfect_pairing = true;
  for (const auto& [lam, sl] : eig) {
    auto it = eig.find(rep.nu - lam);
    if (it == eig.end() || it->second.dim() != sl.dim()) {
      rep.pairing_ok_per_level.push_back(false);
      rep.perfect_pairing = false;
      continue;
    }
    const Subspace& sm = it->second;
    Matrix block(sl.dim(), sm.dim());
    for (std::size_t i = 0; i < sl.dim(); ++i)
      for (std::size_t j = 0; j < sm.dim(); ++j)
        block(i, j) = a.form(sl.basis_vector(i), sm.basis_vector(j));
    bool ok = rank(block) == sl.dim();
    rep.pairing_ok_per_level.push_back(ok);
    if (!ok) rep.perfect_pairing = false;
  }
  return rep;
}

}  // namespace voaforge

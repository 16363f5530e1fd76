#pragma once

#include <optional>
#include <tuple>

#include "voaforge/subspace.hpp"

namespace voaforge {

/// Finite-dimensional left Leibniz algebra given by structure constants:
/// [e_i, e_j] = sum_k bracket[i][j][k] e_k. Left multiplications are
/// derivations; the table is a Lie algebra iff the bracket is antisymmetric.
struct LeibnizAlgebra {
  std::size_t dim = 0;
  std::vector<std::vector<Vec>> bracket;  // bracket[i][j] is a coordinate vector

  static LeibnizAlgebra zero(std::size_t n) {
    LeibnizAlgebra l;
    l.dim = n;
    l.bracket.assign(n, std::vector<Vec>(n, Vec(n, Rational(0))));
    return l;
  }

  const Vec& basis_bracket(std::size_t i, std::size_t j) const {
    return bracket[i][j];
  }

  Vec bracket_vec(const Vec& u, const Vec& v) const {
    Vec out(dim, Rational(0));
    for (std::size_t i = 0; i < dim; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (v[j] == 0) continue;
        Rational c = u[i] * v[j];
        const Vec& b = bracket[i][j];
        for (std::size_t k = 0; k < dim; ++k)
          if (b[k] != 0) out[k] += c * b[k];
      }
    }
    return out;
  }

  /// Matrix of v -> [u, v].
  Matrix ad_left(const Vec& u) const {
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      Vec col = bracket_vec(u, unit_vec(dim, j));
      for (std::size_t i = 0; i < dim; ++i) m(i, j) = col[i];
    }
    return m;
  }

  /// Matrix of v -> [v, u].
  Matrix ad_right(const Vec& u) const {
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      Vec col = bracket_vec(unit_vec(dim, j), u);
      for (std::size_t i = 0; i < dim; ++i) m(i, j) = col[i];
    }
    return m;
  }
};

/// First basis triple violating [a[bc]] = [[ab]c] + [b[ac]], if any.
inline std::optional<std::tuple<std::size_t, std::size_t, std::size_t>>
leibniz_violation(const LeibnizAlgebra& l) {
  for (std::size_t a = 0; a < l.dim; ++a)
    for (std::size_t b = 0; b < l.dim; ++b)
      for (std::size_t c = 0; c < l.dim; ++c) {
        Vec lhs = l.bracket_vec(unit_vec(l.dim, a),
                                l.basis_bracket(b, c));
        Vec rhs = add(l.bracket_vec(l.basis_bracket(a, b), unit_vec(l.dim, c)),
                      l.bracket_vec(unit_vec(l.dim, b), l.basis_bracket(a, c)));
        if (lhs != rhs) return std::make_tuple(a, b, c);
      }
  return std::nullopt;
}

inline bool verify_leibniz(const LeibnizAlgebra& l) {
  return !leibniz_violation(l).has_value();
}

inline bool is_antisymmetric(const LeibnizAlgebra& l) {
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!is_zero_vec(add(l.basis_bracket(i, j), l.basis_bracket(j, i))))
        return false;
  return true;
}

inline bool is_lie(const LeibnizAlgebra& l) {
  return is_antisymmetric(l) && verify_leibniz(l);
}

/// span{ [a_i, b_j] } over bases of two subspaces.
inline Subspace bracket_span(const LeibnizAlgebra& l, const Subspace& a,
                             const Subspace& b) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      gens.push_back(l.bracket_vec(a.basis_vector(i), b.basis_vector(j)));
  return Subspace::span(l.dim, gens);
}

/// Leibniz kernel: span of symmetrized brackets [a,b] + [b,a]. The smallest
/// two-sided ideal with a Lie quotient.
inline Subspace leibniz_kernel(const LeibnizAlgebra& l) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      gens.push_back(add(l.basis_bracket(i, j), l.basis_bracket(j, i)));
  return Subspace::span(l.dim, gens);
}

inline bool is_two_sided_ideal(const LeibnizAlgebra& l, const Subspace& s) {
  Subspace full = Subspace::full(l.dim);
  return s.contains(bracket_span(l, full, s)) &&
         s.contains(bracket_span(l, s, full));
}

/// {a : [a, n] = 0 for all n in the Leibniz kernel}; a two-sided ideal.
inline Subspace annihilator_of_kernel(const LeibnizAlgebra& l) {
  Subspace n = leibniz_kernel(l);
  if (n.is_zero()) return Subspace::full(l.dim);
  // rows indexed by (kernel basis vector, output coordinate)
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < n.dim(); ++r) {
    Vec nr = n.basis_vector(r);
    // condition on a: sum_i a_i [e_i, nr] = 0
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < l.dim; ++i)
      cols.push_back(l.bracket_vec(unit_vec(l.dim, i), nr));
    for (std::size_t k = 0; k < l.dim; ++k) {
      Vec row(l.dim);
      for (std::size_t i = 0; i < l.dim; ++i) row[i] = cols[i][k];
      rows.push_back(std::move(row));
    }
  }
  Subspace f = kernel(Matrix::from_rows(rows));
  if (!is_two_sided_ideal(l, f))
    throw check_error("annihilator of the Leibniz kernel is not an ideal");
  return f;
}

/// Quotient of a Leibniz algebra by a two-sided ideal: the induced table on
/// echelon-chosen representatives plus the maps between coordinates.
struct QuotientAlgebra {
  LeibnizAlgebra algebra;    // on the representative basis
  std::vector<Vec> reps;     // representatives in the parent algebra
  Subspace ideal;
  Matrix coord_change_inv;   // inverse of [ideal basis; reps] as rows

  /// Coordinates of a parent vector: first ideal.dim() entries along the
  /// ideal, the rest along the representatives.
  Vec split_coords(const Vec& v) const {
    return coord_change_inv.apply(v);
  }

  /// Image of a parent vector in the quotient.
  Vec project(const Vec& v) const {
    Vec s = split_coords(v);
    return Vec(s.begin() + static_cast<long>(ideal.dim()), s.end());
  }

  /// Representative in the parent of a quotient vector.
  Vec lift(const Vec& q) const {
    Vec out(ideal.ambient_dim(), Rational(0));
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (q[i] != 0) out = add(out, scaled(reps[i], q[i]));
    return out;
  }
};

inline QuotientAlgebra quotient_by(const LeibnizAlgebra& l, const Subspace& ideal) {
  if (!is_two_sided_ideal(l, ideal))
    throw check_error("quotient by a non-ideal subspace");
  QuotientAlgebra q;
  q.ideal = ideal;
  q.reps = quotient_basis(Subspace::full(l.dim), ideal);
  std::vector<Vec> basis_rows;
  for (std::size_t i = 0; i < ideal.dim(); ++i)
    basis_rows.push_back(ideal.basis_vector(i));
  for (const auto& r : q.reps) basis_rows.push_back(r);
  Matrix change = Matrix::from_rows(basis_rows).transpose();
  auto inv = inverse(change);
  if (!inv) throw error("quotient basis change not invertible");
  q.coord_change_inv = *inv;
  std::size_t m = q.reps.size();
  q.algebra = LeibnizAlgebra::zero(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      q.algebra.bracket[a][b] = q.project(l.bracket_vec(q.reps[a], q.reps[b]));
  return q;
}

/// Quotient by the Leibniz kernel; the result satisfies antisymmetry and the
/// Jacobi identity exactly (verified).
inline QuotientAlgebra lie_quotient_full(const LeibnizAlgebra& l) {
  QuotientAlgebra q = quotient_by(l, leibniz_kernel(l));
  if (!is_lie(q.algebra))
    throw check_error("quotient by the Leibniz kernel is not a Lie algebra");
  return q;
}

inline LeibnizAlgebra lie_quotient(const LeibnizAlgebra& l) {
  return lie_quotient_full(l).algebra;
}

/// Restriction of the table to a bracket-closed subspace, on its echelon basis.
inline LeibnizAlgebra subalgebra_table(const LeibnizAlgebra& l, const Subspace& s) {
  LeibnizAlgebra sub = LeibnizAlgebra::zero(s.dim());
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = 0; b < s.dim(); ++b) {
      Vec w = l.bracket_vec(s.basis_vector(a), s.basis_vector(b));
      if (!s.contains(w)) throw check_error("subspace is not bracket-closed");
      sub.bracket[a][b] = s.coordinates(w);
    }
  return sub;
}

inline std::vector<Subspace> derived_series(const LeibnizAlgebra& l) {
  std::vector<Subspace> series{Subspace::full(l.dim)};
  while (true) {
    const Subspace& last = series.back();
    Subspace next = bracket_span(l, last, last);
    if (next == last) break;
    series.push_back(next);
    if (next.is_zero()) break;
  }
  return series;
}

inline std::vector<Subspace> lower_central_series(const LeibnizAlgebra& l) {
  Subspace full = Subspace::full(l.dim);
  std::vector<Subspace> series{full};
  while (true) {
    const Subspace& last = series.back();
    Subspace next = sum(bracket_span(l, full, last), bracket_span(l, last, full));
    if (next == last) break;
    series.push_back(next);
    if (next.is_zero()) break;
  }
  return series;
}

inline bool is_solvable(const LeibnizAlgebra& l) {
  return derived_series(l).back().is_zero() || l.dim == 0;
}

inline bool is_nilpotent(const LeibnizAlgebra& l) {
  return lower_central_series(l).back().is_zero() || l.dim == 0;
}

inline bool subspace_is_solvable(const LeibnizAlgebra& l, const Subspace& s) {
  Subspace cur = s;
  while (!cur.is_zero()) {
    Subspace next = bracket_span(l, cur, cur);
    if (next == cur) return false;
    cur = next;
  }
  return true;
}

/// Killing form kappa(x, y) = tr(ad x ad y) of a Lie table.
inline Matrix killing_form(const LeibnizAlgebra& l) {
  std::vector<Matrix> ads;
  ads.reserve(l.dim);
  for (std::size_t i = 0; i < l.dim; ++i)
    ads.push_back(l.ad_left(unit_vec(l.dim, i)));
  Matrix k(l.dim, l.dim);
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Rational t = (ads[i] * ads[j]).trace();
      k(i, j) = t;
      k(j, i) = t;
    }
  return k;
}

/// Largest solvable two-sided ideal. Computed on the Lie quotient by the
/// Cartan criterion (Killing-orthogonal of the derived algebra, valid in
/// characteristic zero) and pulled back.
inline Subspace solvable_radical(const LeibnizAlgebra& l) {
  if (l.dim == 0) return Subspace::zero(0);
  QuotientAlgebra q = lie_quotient_full(l);
  const LeibnizAlgebra& g = q.algebra;
  Subspace derived = bracket_span(g, Subspace::full(g.dim), Subspace::full(g.dim));
  Subspace rad_g;
  if (derived.is_zero()) {
    rad_g = Subspace::full(g.dim);
  } else {
    Matrix kf = killing_form(g);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < derived.dim(); ++i)
      rows.push_back(kf.apply(derived.basis_vector(i)));
    rad_g = kernel(Matrix::from_rows(rows));
  }
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < q.ideal.dim(); ++i)
    gens.push_back(q.ideal.basis_vector(i));
  for (std::size_t i = 0; i < rad_g.dim(); ++i)
    gens.push_back(q.lift(rad_g.basis_vector(i)));
  Subspace b = Subspace::span(l.dim, gens);
  if (!subspace_is_solvable(l, b))
    throw check_error("computed solvable radical is not solvable");
  return b;
}

/// Smallest two-sided ideal with reductive Lie quotient: the preimage of
/// [g,g] cap rad(g) for g the Lie quotient.
inline Subspace nilpotent_radical(const LeibnizAlgebra& l) {
  Subspace k = leibniz_kernel(l);
  Subspace full = Subspace::full(l.dim);
  Subspace derived = bracket_span(l, full, full);
  Subspace b = solvable_radical(l);
  return intersect(sum(derived, k), b);
}

namespace detail {

inline Vec flatten(const Matrix& m) {
  Vec v(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
  return v;
}

/// Basis of the (non-unital) associative algebra generated by the given
/// operators, via span saturation under products.
inline std::vector<Matrix> associative_envelope(const std::vector<Matrix>& gens) {
  if (gens.empty()) return {};
  std::size_t n = gens[0].rows();
  std::vector<Matrix> basis;
  Subspace spanned = Subspace::zero(n * n);
  auto try_add = [&](const Matrix& m) {
    Vec f = flatten(m);
    if (spanned.contains(f)) return false;
    basis.push_back(m);
    spanned = sum(spanned, Subspace::span(n * n, {f}));
    return true;
  };
  for (const auto& g : gens) try_add(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t sz = basis.size();
    for (std::size_t i = 0; i < sz && !grew; ++i)
      for (std::size_t j = 0; j < sz; ++j)
        if (try_add(basis[i] * basis[j])) {
          grew = true;
          break;
        }
  }
  return basis;
}

/// Nilradical of a Lie algebra table (characteristic zero): the set of
/// x in rad(g) with nilpotent adjoint, computed as the trace-form kernel
/// against the associative envelope of ad(rad g).
inline Subspace lie_nilradical(const LeibnizAlgebra& g) {
  if (!is_lie(g)) throw check_error("nilradical of a non-Lie table");
  Subspace radg = solvable_radical(g);
  if (radg.is_zero()) return radg;
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < radg.dim(); ++i)
    gens.push_back(g.ad_left(radg.basis_vector(i)));
  std::vector<Matrix> env = associative_envelope(gens);
  // x = sum_i c_i r_i with tr(ad(x) w) = 0 for every envelope element w
  std::vector<Vec> rows;
  for (const auto& w : env) {
    Vec row(radg.dim());
    for (std::size_t i = 0; i < radg.dim(); ++i) row[i] = (gens[i] * w).trace();
    rows.push_back(std::move(row));
  }
  Subspace coords = rows.empty() ? Subspace::full(radg.dim())
                                 : kernel(Matrix::from_rows(rows));
  std::vector<Vec> out;
  for (std::size_t i = 0; i < coords.dim(); ++i) {
    Vec c = coords.basis_vector(i);
    Vec v(g.dim, Rational(0));
    for (std::size_t j = 0; j < radg.dim(); ++j)
      if (c[j] != 0) v = add(v, scaled(radg.basis_vector(j), c[j]));
    out.push_back(std::move(v));
  }
  return Subspace::span(g.dim, out);
}

}  // namespace detail

/// Preimage in l of the nil radical of the Lie quotient l/n. The ideal n must
/// contain the Leibniz kernel.
inline Subspace nil_radical_over(const LeibnizAlgebra& l, const Subspace& n) {
  if (!n.contains(leibniz_kernel(l)))
    throw check_error("nil radical: ideal does not contain the Leibniz kernel");
  QuotientAlgebra q = quotient_by(l, n);
  Subspace nil_q = detail::lie_nilradical(q.algebra);
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n.dim(); ++i) gens.push_back(n.basis_vector(i));
  for (std::size_t i = 0; i < nil_q.dim(); ++i)
    gens.push_back(q.lift(nil_q.basis_vector(i)));
  return Subspace::span(l.dim, gens);
}

/// The chain of ideals N <= N1 <= N0 <= B together with the annihilator of
/// the Leibniz kernel. N defaults to the Leibniz kernel; an analyzer that
/// knows a larger distinguished ideal (the image of the translation operator
/// on the weight-zero space) passes it explicitly.
struct RadicalTower {
  Subspace kernel_N;
  Subspace annihilator_F;
  Subspace solvable_B;
  Subspace nilpotent_N1;
  Subspace nil_N0;
};

inline RadicalTower radical_tower(const LeibnizAlgebra& l,
                                  std::optional<Subspace> n_opt = std::nullopt) {
  RadicalTower t;
  t.kernel_N = n_opt ? *n_opt : leibniz_kernel(l);
  if (!is_two_sided_ideal(l, t.kernel_N))
    throw check_error("radical tower: N is not a two-sided ideal");
  t.annihilator_F = annihilator_of_kernel(l);
  t.solvable_B = solvable_radical(l);
  Subspace full = Subspace::full(l.dim);
  t.nilpotent_N1 = intersect(sum(bracket_span(l, full, full), t.kernel_N),
                             t.solvable_B);
  t.nil_N0 = nil_radical_over(l, t.kernel_N);
  if (!(t.nilpotent_N1.contains(t.kernel_N) &&
        t.nil_N0.contains(t.nilpotent_N1) &&
        t.solvable_B.contains(t.nil_N0)))
    throw check_error("radical tower containments violated");
  return t;
}

/// Levi subalgebra: a semisimple Lie subalgebra complementing the solvable
/// radical, by Levi-Malcev lifting down the derived series of the radical.
/// Underdetermined correction systems take the echelon-canonical solution,
/// so the output is deterministic.
inline Subspace levi_subalgebra(const LeibnizAlgebra& l) {
  Subspace b = solvable_radical(l);
  if (b.dim() == l.dim) return Subspace::zero(l.dim);
  if (b.is_zero()) return Subspace::full(l.dim);
  Subspace derived_b = bracket_span(l, b, b);
  if (!derived_b.is_zero()) {
    // reduce to a shorter derived series: pull back a Levi of l/[B,B]
    QuotientAlgebra q = quotient_by(l, derived_b);
    Subspace s_quo = levi_subalgebra(q.algebra);
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < derived_b.dim(); ++i)
      gens.push_back(derived_b.basis_vector(i));
    for (std::size_t i = 0; i < s_quo.dim(); ++i)
      gens.push_back(q.lift(s_quo.basis_vector(i)));
    Subspace sub = Subspace::span(l.dim, gens);
    LeibnizAlgebra t = subalgebra_table(l, sub);
    Subspace s_in_t = levi_subalgebra(t);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < s_in_t.dim(); ++i) {
      Vec c = s_in_t.basis_vector(i);
      Vec v(l.dim, Rational(0));
      for (std::size_t j = 0; j < sub.dim(); ++j)
        if (c[j] != 0) v = add(v, scaled(sub.basis_vector(j), c[j]));
      out.push_back(std::move(v));
    }
    return Subspace::span(l.dim, out);
  }

  // Base case: abelian radical. Correct a linear complement c_a by phi_a in B
  // so that span{c_a + phi_a} is bracket-closed.
  std::vector<Vec> reps = quotient_basis(Subspace::full(l.dim), b);
  std::size_t m = reps.size(), r = b.dim();
  std::vector<Vec> basis_rows;
  for (std::size_t i = 0; i < r; ++i) basis_rows.push_back(b.basis_vector(i));
  for (const auto& c : reps) basis_rows.push_back(c);
  Matrix change = Matrix::from_rows(basis_rows).transpose();
  auto inv = inverse(change);
  if (!inv) throw error("levi: basis change not invertible");
  auto split = [&](const Vec& v) {
    Vec s = inv->apply(v);
    Vec beta(s.begin(), s.begin() + static_cast<long>(r));
    Vec gamma(s.begin() + static_cast<long>(r), s.end());
    return std::make_pair(beta, gamma);
  };

  // structure constants of the quotient and the defects delta_ab in B
  std::vector<std::vector<Vec>> gamma(m, std::vector<Vec>(m));
  std::vector<std::vector<Vec>> delta(m, std::vector<Vec>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t bb = 0; bb < m; ++bb) {
      auto [be, ga] = split(l.bracket_vec(reps[a], reps[bb]));
      gamma[a][bb] = ga;
      delta[a][bb] = be;
    }
  // B-coordinates of [c_a, v_rho] and [v_rho, c_b]
  std::vector<std::vector<Vec>> lb(m, std::vector<Vec>(r)), rb(m, std::vector<Vec>(r));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t rho = 0; rho < r; ++rho) {
      auto [be1, ga1] = split(l.bracket_vec(reps[a], b.basis_vector(rho)));
      if (!is_zero_vec(ga1)) throw check_error("levi: radical is not an ideal");
      lb[a][rho] = be1;
      auto [be2, ga2] = split(l.bracket_vec(b.basis_vector(rho), reps[a]));
      if (!is_zero_vec(ga2)) throw check_error("levi: radical is not an ideal");
      rb[a][rho] = be2;
    }

  // unknowns x[(a, rho)] = phi_a^rho
  std::size_t unknowns = m * r;
  std::vector<Vec> rows;
  Vec rhs;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t bb = 0; bb < m; ++bb)
      for (std::size_t sigma = 0; sigma < r; ++sigma) {
        Vec row(unknowns, Rational(0));
        // [c_a, phi_b] term
        for (std::size_t rho = 0; rho < r; ++rho)
          row[bb * r + rho] += lb[a][rho][sigma];
        // [phi_a, c_b] term
        for (std::size_t rho = 0; rho < r; ++rho)
          row[a * r + rho] += rb[bb][rho][sigma];
        // -gamma_ab^e phi_e
        for (std::size_t e = 0; e < m; ++e)
          if (gamma[a][bb][e] != 0) row[e * r + sigma] -= gamma[a][bb][e];
        rows.push_back(std::move(row));
        rhs.push_back(-delta[a][bb][sigma]);
      }
  auto x = solve(Matrix::from_rows(rows), rhs);
  if (!x)
    throw check_error("levi lifting system inconsistent (should not happen in characteristic zero)");
  std::vector<Vec> s_basis;
  for (std::size_t a = 0; a < m; ++a) {
    Vec v = reps[a];
    for (std::size_t rho = 0; rho < r; ++rho)
      if ((*x)[a * r + rho] != 0)
        v = add(v, scaled(b.basis_vector(rho), (*x)[a * r + rho]));
    s_basis.push_back(std::move(v));
  }
  Subspace s = Subspace::span(l.dim, s_basis);
  if (!s.contains(bracket_span(l, s, s)))
    throw check_error("levi output not bracket-closed");
  return s;
}

/// Kernel of the Gram matrix of an invariant form on the algebra.
inline Subspace invariant_form_radical(const LeibnizAlgebra& l, const Matrix& form) {
  if (form.rows() != l.dim || form.cols() != l.dim)
    throw error("invariant_form_radical: dimension mismatch");
  return kernel(form);
}

}  // namespace voaforge

#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "voaforge/frobenius.hpp"
#include "voaforge/leibniz.hpp"

namespace voaforge {

/// The weight-(0,1) package of a graded structure: the commutative algebra
/// on degree zero, the Leibniz algebra on degree one, and the four
/// connecting maps u(0)a, u(1)v, L(-1)a and t(-1)u.
struct TruncatedConformalDatum {
  FrobeniusAlgebra v0;   // counit normalized so that (1, t) = counit(t) = 1
  LeibnizAlgebra v1;     // bracket u(0)v
  std::vector<std::vector<Vec>> act0;   // act0[u][a]: u(0) e_a in V0 coords
  std::vector<std::vector<Vec>> pair1;  // pair1[u][v]: u(1) v in V0 coords
  Matrix lminus1;        // V0 -> V1
  Matrix tminus1;        // V1 -> V1
  Vec t;                 // generator of the minimal ideal of V0

  std::size_t dim0() const { return v0.dim; }
  std::size_t dim1() const { return v1.dim; }

  Vec act0_vec(const Vec& u, const Vec& a) const {
    Vec out(dim0(), Rational(0));
    for (std::size_t i = 0; i < dim1(); ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < dim0(); ++j) {
        if (a[j] == 0) continue;
        Rational c = u[i] * a[j];
        for (std::size_t k = 0; k < dim0(); ++k)
          if (act0[i][j][k] != 0) out[k] += c * act0[i][j][k];
      }
    }
    return out;
  }

  Vec pair1_vec(const Vec& u, const Vec& v) const {
    Vec out(dim0(), Rational(0));
    for (std::size_t i = 0; i < dim1(); ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < dim1(); ++j) {
        if (v[j] == 0) continue;
        Rational c = u[i] * v[j];
        for (std::size_t k = 0; k < dim0(); ++k)
          if (pair1[i][j][k] != 0) out[k] += c * pair1[i][j][k];
      }
    }
    return out;
  }
};

struct NamedCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample or explanation when failing
};

namespace detail {

inline std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? ", " : "") << rat_str(v[i]);
  os << ")";
  return os.str();
}

}  // namespace detail

/// Gram matrix of <u, v> = (u(1)v, t) through the degree-zero form.
inline Matrix form_gram(const TruncatedConformalDatum& d) {
  Matrix g(d.dim1(), d.dim1());
  for (std::size_t i = 0; i < d.dim1(); ++i)
    for (std::size_t j = 0; j < d.dim1(); ++j)
      g(i, j) = dot(d.v0.counit, d.v0.mult_vec(d.pair1[i][j], d.t));
  return g;
}

inline Subspace form_radical(const TruncatedConformalDatum& d) {
  return kernel(form_gram(d));
}

inline Subspace annihilator_t(const TruncatedConformalDatum& d) {
  return kernel(d.tminus1);
}

/// M = {u : u(0)t = 0}; a two-sided ideal, of codimension one when
/// dim V0 >= 2.
inline Subspace ideal_M(const TruncatedConformalDatum& d) {
  Matrix m(d.dim0(), d.dim1());
  for (std::size_t j = 0; j < d.dim1(); ++j) {
    Vec col = d.act0_vec(unit_vec(d.dim1(), j), d.t);
    for (std::size_t i = 0; i < d.dim0(); ++i) m(i, j) = col[i];
  }
  Subspace res = kernel(m);
  if (!is_two_sided_ideal(d.v1, res))
    throw check_error("ideal_M: annihilator of t is not a two-sided ideal");
  return res;
}

struct PCharacterizations {
  Subspace from_form;       // {u : <u, M> = 0}
  Subspace from_translate;  // {u : t(-1)u in span(L(-1)t)}
  bool agree = false;
  Vec witness;              // a vector in exactly one of the two
};

inline PCharacterizations p_characterizations(const TruncatedConformalDatum& d) {
  PCharacterizations out;
  Subspace m = ideal_M(d);
  Matrix g = form_gram(d);
  if (m.is_zero()) {
    out.from_form = Subspace::full(d.dim1());
  } else {
    Matrix rows(m.dim(), d.dim1());
    for (std::size_t r = 0; r < m.dim(); ++r) {
      Vec gm = g.apply(m.basis_vector(r));
      for (std::size_t j = 0; j < d.dim1(); ++j) rows(r, j) = gm[j];
    }
    out.from_form = kernel(rows);
  }
  // {u : t(-1)u in span(L(-1)t)}: kernel of the composition with the
  // projection away from that line
  Vec lt = d.lminus1.apply(d.t);
  Subspace line = Subspace::span(d.dim1(), {lt});
  std::vector<Vec> constraints;
  // residues of t(-1)e_j after eliminating the line, as linear conditions
  for (std::size_t j = 0; j < d.dim1(); ++j) {
    Vec img = d.tminus1.apply(unit_vec(d.dim1(), j));
    constraints.push_back(line.reduce(img));
  }
  Matrix cm(d.dim1(), d.dim1());
  for (std::size_t j = 0; j < d.dim1(); ++j)
    for (std::size_t i = 0; i < d.dim1(); ++i) cm(i, j) = constraints[j][i];
  out.from_translate = kernel(cm);
  out.agree = out.from_form == out.from_translate;
  if (!out.agree) {
    const Subspace& a = out.from_form;
    const Subspace& b = out.from_translate;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!b.contains(a.basis_vector(i))) out.witness = a.basis_vector(i);
    for (std::size_t i = 0; i < b.dim(); ++i)
      if (!a.contains(b.basis_vector(i))) out.witness = b.basis_vector(i);
  }
  return out;
}

/// P as an ideal; throws when the two characterizations disagree (the datum
/// then violates the structural axioms).
inline Subspace ideal_P(const TruncatedConformalDatum& d) {
  PCharacterizations p = p_characterizations(d);
  if (!p.agree)
    throw check_error("ideal_P: characterizations disagree at " +
                      detail::vec_str(p.witness));
  return p.from_form;
}

enum class TrichotomyCase { i, ii, iii };

inline std::string to_string(TrichotomyCase c) {
  switch (c) {
    case TrichotomyCase::i: return "i";
    case TrichotomyCase::ii: return "ii";
    default: return "iii";
  }
}

struct TrichotomyReport {
  Subspace rad;
  Subspace ann_t;
  Subspace P;
  Subspace M;
  TrichotomyCase which = TrichotomyCase::i;
};

/// Decides which of the three containment patterns holds:
///   (i)  ann = rad, strictly inside P;
///   (ii) ann strictly inside rad = P;
///  (iii) rad strictly inside ann = P.
/// The strict step must have codimension exactly one; all-equal is an error.
inline TrichotomyCase classify_from_subspaces(const Subspace& rad,
                                              const Subspace& ann,
                                              const Subspace& p) {
  bool rad_eq_ann = rad == ann;
  bool rad_eq_p = rad == p;
  bool ann_eq_p = ann == p;
  if (rad_eq_ann && rad_eq_p)
    throw check_error("trichotomy: all three subspaces coincide");
  if (rad_eq_ann) {
    if (!p.contains(ann) || p.dim() != ann.dim() + 1)
      throw check_error("trichotomy: ann = rad but P is not a codimension-one cover");
    return TrichotomyCase::i;
  }
  if (rad_eq_p) {
    if (!rad.contains(ann) || rad.dim() != ann.dim() + 1)
      throw check_error("trichotomy: rad = P but ann is not codimension one inside");
    return TrichotomyCase::ii;
  }
  if (ann_eq_p) {
    if (!ann.contains(rad) || ann.dim() != rad.dim() + 1)
      throw check_error("trichotomy: ann = P but rad is not codimension one inside");
    return TrichotomyCase::iii;
  }
  throw check_error("trichotomy: no case matches");
}

inline TrichotomyReport classify_trichotomy(const TruncatedConformalDatum& d) {
  if (d.dim0() < 2)
    throw check_error("classify_trichotomy: needs dim V0 >= 2");
  TrichotomyReport rep;
  rep.rad = form_radical(d);
  rep.ann_t = annihilator_t(d);
  rep.P = ideal_P(d);
  rep.M = ideal_M(d);
  rep.which = classify_from_subspaces(rep.rad, rep.ann_t, rep.P);
  return rep;
}

/// The named identity suite (symmetry, invariance, the P agreement, the
/// M-intersection identity, codimensions, structural conditions on the
/// connecting maps). One result per identity, with a witness on failure.
inline std::vector<NamedCheck> verify_axioms(const TruncatedConformalDatum& d) {
  std::vector<NamedCheck> out;
  auto push = [&](const std::string& name, bool pass, const std::string& detail = "") {
    out.push_back({name, pass, pass ? "" : detail});
  };

  // counit normalization (1, t) = 1
  push("counit_normalized", dot(d.v0.counit, d.t) == 1,
       "counit(t) = " + rat_str(dot(d.v0.counit, d.t)));

  // t spans the minimal ideal
  bool t_ok = false;
  std::string t_detail;
  try {
    Subspace minimal = minimal_ideal(d.v0);
    t_ok = minimal == Subspace::span(d.dim0(), {d.t});
    if (!t_ok) t_detail = "t does not span Ann(J)";
  } catch (const error& e) {
    t_detail = e.what();
  }
  push("t_spans_minimal_ideal", t_ok, t_detail);

  // u(0) acts by derivations
  {
    bool ok = true;
    std::string detail;
    for (std::size_t u = 0; u < d.dim1() && ok; ++u)
      for (std::size_t a = 0; a < d.dim0() && ok; ++a)
        for (std::size_t b = 0; b < d.dim0() && ok; ++b) {
          Vec ua = d.act0[u][a], ub = d.act0[u][b];
          Vec ea = unit_vec(d.dim0(), a), eb = unit_vec(d.dim0(), b);
          Vec lhs = d.act0_vec(unit_vec(d.dim1(), u), d.v0.mult_vec(ea, eb));
          Vec rhs = add(d.v0.mult_vec(ua, eb), d.v0.mult_vec(ea, ub));
          if (lhs != rhs) {
            ok = false;
            detail = "(u,a,b) = (" + std::to_string(u) + "," +
                     std::to_string(a) + "," + std::to_string(b) + ")";
          }
        }
    push("act0_derivation", ok, detail);
  }

  // u(1)v symmetric
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < d.dim1() && ok; ++i)
      for (std::size_t j = 0; j < i && ok; ++j)
        if (d.pair1[i][j] != d.pair1[j][i]) {
          ok = false;
          detail = "(i,j) = (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
    push("pair1_symmetric", ok, detail);
  }

  // skew-symmetry u(0)v + v(0)u = L(-1)(u(1)v)
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < d.dim1() && ok; ++i)
      for (std::size_t j = 0; j < d.dim1() && ok; ++j) {
        Vec lhs = add(d.v1.basis_bracket(i, j), d.v1.basis_bracket(j, i));
        Vec rhs = d.lminus1.apply(d.pair1[i][j]);
        if (lhs != rhs) {
          ok = false;
          detail = "(i,j) = (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    push("skew_symmetry", ok, detail);
  }

  // L(-1) kills exactly the unit line
  push("lminus1_kernel_is_unit_line",
       kernel(d.lminus1) == Subspace::span(d.dim0(), {d.v0.unit}),
       "kernel has dimension " + std::to_string(kernel(d.lminus1).dim()));

  // translates act trivially: (L(-1)a)(0) = 0 on V0 and V1
  {
    bool ok = true;
    std::string detail;
    for (std::size_t a = 0; a < d.dim0() && ok; ++a) {
      Vec img = d.lminus1.apply(unit_vec(d.dim0(), a));
      for (std::size_t b = 0; b < d.dim0() && ok; ++b)
        if (!is_zero_vec(d.act0_vec(img, unit_vec(d.dim0(), b)))) {
          ok = false;
          detail = "translate of basis vector " + std::to_string(a) +
                   " acts on the degree-zero space";
        }
      for (std::size_t v = 0; v < d.dim1() && ok; ++v)
        if (!is_zero_vec(d.v1.bracket_vec(img, unit_vec(d.dim1(), v)))) {
          ok = false;
          detail = "translate of basis vector " + std::to_string(a) +
                   " acts on the degree-one space";
        }
    }
    push("translates_act_trivially", ok, detail);
  }

  // u(0) preserves J and T
  {
    Subspace j = jacobson_radical(d.v0);
    Subspace tline = Subspace::span(d.dim0(), {d.t});
    bool okj = true, okt = true;
    for (std::size_t u = 0; u < d.dim1(); ++u) {
      for (std::size_t r = 0; r < j.dim(); ++r)
        if (!j.contains(d.act0_vec(unit_vec(d.dim1(), u), j.basis_vector(r))))
          okj = false;
      if (!tline.contains(d.act0_vec(unit_vec(d.dim1(), u), d.t))) okt = false;
    }
    push("act0_preserves_radical", okj);
    push("act0_preserves_minimal_ideal", okt);
  }

  Matrix g = form_gram(d);

  // symmetry of the Gram matrix
  push("form_symmetric", g == g.transpose());

  // invariance <v(0)u, w> = <v, u(0)w>
  {
    bool ok = true;
    std::string detail;
    auto pairing = [&](const Vec& x, const Vec& y) { return dot(x, g.apply(y)); };
    for (std::size_t u = 0; u < d.dim1() && ok; ++u)
      for (std::size_t v = 0; v < d.dim1() && ok; ++v)
        for (std::size_t w = 0; w < d.dim1() && ok; ++w) {
          Vec eu = unit_vec(d.dim1(), u), ev = unit_vec(d.dim1(), v),
              ew = unit_vec(d.dim1(), w);
          Rational lhs = pairing(d.v1.bracket_vec(ev, eu), ew);
          Rational rhs = pairing(ev, d.v1.bracket_vec(eu, ew));
          if (lhs != rhs) {
            ok = false;
            detail = "(u,v,w) = (" + std::to_string(u) + "," +
                     std::to_string(v) + "," + std::to_string(w) + ")";
          }
        }
    push("form_invariance", ok, detail);
  }

  // image of L(-1) inside the radical
  {
    Subspace rad = form_radical(d);
    bool ok = true;
    std::string detail;
    for (std::size_t a = 0; a < d.dim0(); ++a) {
      Vec img = d.lminus1.apply(unit_vec(d.dim0(), a));
      if (!rad.contains(img)) {
        ok = false;
        detail = "L(-1) of basis vector " + std::to_string(a);
      }
    }
    push("translate_image_in_radical", ok, detail);
  }

  // the two P characterizations agree
  {
    PCharacterizations p = p_characterizations(d);
    push("p_characterizations_agree", p.agree,
         p.agree ? "" : "witness " + detail::vec_str(p.witness));
  }

  // M cap Ann(t(-1)) = M cap rad
  {
    Subspace m = ideal_M(d);
    Subspace lhs = intersect(m, annihilator_t(d));
    Subspace rhs = intersect(m, form_radical(d));
    push("m_cap_ann_equals_m_cap_rad", lhs == rhs);
  }

  // M has codimension one (only meaningful beyond the one-dimensional case)
  if (d.dim0() >= 2) {
    Subspace m = ideal_M(d);
    push("m_codimension_one", m.dim() + 1 == d.dim1(),
         "codim = " + std::to_string(d.dim1() - m.dim()));
  }

  // nondegeneracy on a Levi subalgebra of V1, when one exists
  {
    Subspace s = levi_subalgebra(d.v1);
    if (!s.is_zero()) {
      Matrix block(s.dim(), s.dim());
      for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
          block(i, j) = dot(s.basis_vector(i), g.apply(s.basis_vector(j)));
      push("form_nondegenerate_on_levi", rank(block) == s.dim(),
           "rank " + std::to_string(rank(block)) + " of " + std::to_string(s.dim()));
    }
  }

  return out;
}

/// Results of the graded-structure identities for data carrying a bigrading:
/// the span of the higher-graded part against the radical, the t(-1)
/// annihilator, and the two nilpotent-radical computations.
struct ShiftedStructureReport {
  Subspace higher;  // span of basis states with unshifted weight >= 2
  bool higher_in_ann = false;
  bool higher_in_rad = false;
  bool rad_equals_ann = false;
  bool chain_equalities = false;  // N1 = higher = Ann = rad (when reductive)
  bool nilp_equals_rad = false;   // Leibniz nilpotent radical = rad (reductive)
  std::optional<TrichotomyCase> trichotomy;
};

inline ShiftedStructureReport shifted_structure_check(
    const TruncatedConformalDatum& d, const std::vector<Rational>& lprime_weights,
    bool w1_reductive) {
  if (lprime_weights.size() != d.dim1())
    throw error("shifted_structure_check: wrong number of weight labels");
  ShiftedStructureReport rep;
  std::vector<Vec> higher_gens;
  for (std::size_t i = 0; i < d.dim1(); ++i)
    if (lprime_weights[i] >= 2) higher_gens.push_back(unit_vec(d.dim1(), i));
  rep.higher = Subspace::span(d.dim1(), higher_gens);

  Subspace rad = form_radical(d);
  Subspace ann = annihilator_t(d);
  rep.higher_in_ann = ann.contains(rep.higher);
  rep.higher_in_rad = rad.contains(rep.higher);
  rep.rad_equals_ann = rad == ann;

  if (d.dim0() >= 2) rep.trichotomy = classify_trichotomy(d).which;

  if (w1_reductive) {
    // the distinguished ideal N = image of L(-1)
    std::vector<Vec> n_gens;
    for (std::size_t a = 0; a < d.dim0(); ++a)
      n_gens.push_back(d.lminus1.apply(unit_vec(d.dim0(), a)));
    Subspace n_img = Subspace::span(d.dim1(), n_gens);
    Subspace full = Subspace::full(d.dim1());
    Subspace n1_paper = intersect(sum(bracket_span(d.v1, full, full), n_img),
                                  solvable_radical(d.v1));
    rep.chain_equalities =
        n1_paper == rep.higher && rep.higher == ann && ann == rad;
    rep.nilp_equals_rad = nilpotent_radical(d.v1) == rad;
  }
  return rep;
}

/// Classical (one-dimensional degree-zero space) analysis: the pairing takes
/// values in the unit line and the form radical is its kernel.
struct ClassicalReport {
  Matrix gram;
  Subspace rad;
  bool pair_in_unit_line = false;
};

inline ClassicalReport classical_analysis(const TruncatedConformalDatum& d) {
  if (d.dim0() != 1) throw error("classical_analysis: needs dim V0 = 1");
  ClassicalReport rep;
  rep.gram = form_gram(d);
  rep.rad = kernel(rep.gram);
  rep.pair_in_unit_line = true;
  for (std::size_t i = 0; i < d.dim1(); ++i)
    for (std::size_t j = 0; j < d.dim1(); ++j) {
      Vec expect = scaled(d.v0.unit, rep.gram(i, j));
      if (d.pair1[i][j] != expect) rep.pair_in_unit_line = false;
    }
  return rep;
}

}  // namespace voaforge

#pragma once

#include "voaforge/fock.hpp"
#include "voaforge/onetrunc.hpp"

namespace voaforge {

/// Finite model of the shifted level-k affine sl2 theory: the degree-zero
/// algebra Q[x]/x^{k+1} with the top-coefficient pairing, the degree-one
/// spanning set h(-1)e(-1)^i and e(-2)e(-1)^i (0 <= i < k) recorded as
/// formal basis labels, and the weight-lowering map into degree zero.
struct Sl2ShiftModel {
  long level = 0;
  FrobeniusAlgebra v0;
  GradingOperator grading;
  std::vector<std::string> v1_labels;
  Matrix lh1;  // V1 -> V0
  DeRhamReport de_rham;
};

inline Sl2ShiftModel build_sl2(long k) {
  if (k < 1) throw check_error("build_sl2: level must be positive");
  Sl2ShiftModel m;
  m.level = k;
  std::size_t n = static_cast<std::size_t>(k) + 1;
  m.v0 = FrobeniusAlgebra::zero_product(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) m.v0.mult[i][j][i + j] = 1;
  m.v0.unit[0] = 1;
  m.v0.counit[n - 1] = 1;
  m.grading.matrix = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m.grading.matrix(i, i) = rat(long(i));

  // degree-one labels: u_i = h(-1)e(-1)^i 1 for 0 <= i < k, then
  // w_i = e(-2)e(-1)^i 1
  std::size_t dim1 = 2 * static_cast<std::size_t>(k);
  m.lh1 = Matrix(n, dim1);
  for (long i = 0; i < k; ++i) {
    m.v1_labels.push_back("h(-1)e(-1)^" + std::to_string(i));
    // L_H(1) u_i = 2(i - k) x^i
    m.lh1(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) =
        rat(2 * (i - k));
  }
  for (long i = 0; i < k; ++i)
    m.v1_labels.push_back("e(-2)e(-1)^" + std::to_string(i));  // killed by L_H(1)

  m.de_rham = de_rham_check(m.v0, m.grading);
  return m;
}

/// True iff the image of the weight-lowering map is exactly the span of
/// 1, x, ..., x^{k-1}: codimension one, missing the top power.
inline bool check_sl2_selfdual(const Sl2ShiftModel& m) {
  Subspace image = row_space(m.lh1.transpose());
  std::vector<Vec> lower;
  for (std::size_t i = 0; i + 1 < m.v0.dim; ++i)
    lower.push_back(unit_vec(m.v0.dim, i));
  return image == Subspace::span(m.v0.dim, lower);
}

/// Fully computed shifted-lattice package: the symbolic degree-zero algebra,
/// the degree-one basis from the weight-one space, and all connecting maps
/// evaluated by the mode calculus (never transcribed).
struct LatticeShiftBundle {
  ShiftDatum shift;
  Cocycle eps;
  V0Build v0;
  std::vector<GradedState> v1_states;
  TruncatedConformalDatum datum;
  std::vector<Rational> lprime_weights;
  bool w1_reductive = true;  // weight-one space of a lattice theory is reductive
  Rational nu;               // 2(h,h)
  Rational central_charge_unshifted;
  Rational central_charge_shifted;
  std::vector<NamedCheck> fock_checks;
};

namespace detail {

inline Vec coords_in_points(const FockVector& v, const std::vector<IntVec>& points,
                            const char* what) {
  Vec out(points.size(), Rational(0));
  for (const auto& [s, c] : v.terms()) {
    if (!s.heis.empty())
      throw check_error(std::string(what) + ": stray Heisenberg factor");
    auto it = std::lower_bound(points.begin(), points.end(), s.point);
    if (it == points.end() || *it != s.point)
      throw check_error(std::string(what) + ": state outside the expected span");
    out[static_cast<std::size_t>(it - points.begin())] = c;
  }
  return out;
}

inline Vec coords_in_states(const FockVector& v, const std::vector<GradedState>& basis,
                            const char* what) {
  Vec out(basis.size(), Rational(0));
  for (const auto& [s, c] : v.terms()) {
    std::size_t idx = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].state == s) {
        idx = i;
        break;
      }
    if (idx == basis.size())
      throw check_error(std::string(what) + ": state outside the expected span");
    out[idx] = c;
  }
  return out;
}

}  // namespace detail

inline LatticeShiftBundle build_lattice_shift(const ShiftDatum& shift) {
  if (!shift_admissible(shift))
    throw check_error("build_lattice_shift: shift is not admissible");
  LatticeShiftBundle b;
  b.shift = shift;
  b.eps = build_cocycle(shift.lattice);
  b.v0 = build_V0(shift, b.eps);
  FockContext ctx(shift.lattice, b.eps);
  VirasoroDatum vd = ctx.make_virasoro(shift.h);

  b.v1_states = ctx.weight_space(shift, 1);
  std::size_t n0 = b.v0.algebra.dim;
  std::size_t n1 = b.v1_states.size();
  for (const auto& g : b.v1_states) b.lprime_weights.push_back(g.unshifted_weight);
  b.nu = shift.lattice.norm(shift.h) * 2;

  auto v0_state = [&](std::size_t i) {
    return FockVector(FockState::exponential(b.v0.points[i]));
  };
  auto v1_state = [&](std::size_t i) { return FockVector(b.v1_states[i].state); };
  auto coords0 = [&](const FockVector& v, const char* what) {
    return detail::coords_in_points(v, b.v0.points, what);
  };
  auto coords1 = [&](const FockVector& v, const char* what) {
    return detail::coords_in_states(v, b.v1_states, what);
  };

  TruncatedConformalDatum& d = b.datum;
  d.v0 = b.v0.algebra;
  d.t = unit_vec(n0, b.v0.top_index);

  // cross-check the symbolic degree-zero product against the mode calculus
  bool product_ok = true;
  IntVec two_h = shift.two_h();
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j) {
      Vec computed = coords0(
          ctx.exp_mode(b.v0.points[i], -1, v0_state(j)), "v0 product");
      if (computed != d.v0.mult[i][j]) product_ok = false;
    }
  if (!product_ok)
    throw check_error("build_lattice_shift: symbolic and computed products differ");
  b.fock_checks.push_back({"v0_product_matches_mode_calculus", true, ""});

  // degree-one tables
  d.v1 = LeibnizAlgebra::zero(n1);
  d.act0.assign(n1, std::vector<Vec>(n0));
  d.pair1.assign(n1, std::vector<Vec>(n1));
  for (std::size_t u = 0; u < n1; ++u) {
    for (std::size_t v = 0; v < n1; ++v) {
      d.v1.bracket[u][v] =
          coords1(ctx.iterate_mode(v1_state(u), 0, v1_state(v)), "bracket");
      d.pair1[u][v] =
          coords0(ctx.iterate_mode(v1_state(u), 1, v1_state(v)), "pairing");
    }
    for (std::size_t a = 0; a < n0; ++a)
      d.act0[u][a] =
          coords0(ctx.iterate_mode(v1_state(u), 0, v0_state(a)), "action");
  }
  if (!verify_leibniz(d.v1))
    throw check_error("build_lattice_shift: degree-one bracket is not Leibniz");

  d.lminus1 = Matrix(n1, n0);
  for (std::size_t a = 0; a < n0; ++a) {
    Vec col = coords1(
        ctx.virasoro_mode(vd, -1, v0_state(a), Conformal::shifted), "L(-1)");
    for (std::size_t i = 0; i < n1; ++i) d.lminus1(i, a) = col[i];
  }
  d.tminus1 = Matrix(n1, n1);
  for (std::size_t u = 0; u < n1; ++u) {
    Vec col = coords1(ctx.exp_mode(two_h, -1, v1_state(u)), "t(-1)");
    for (std::size_t i = 0; i < n1; ++i) d.tminus1(i, u) = col[i];
  }

  // central charges from L(2)L(-2)1 = (c/2)1
  FockVector vac(FockState::vacuum(shift.lattice.rank));
  b.central_charge_unshifted =
      ctx.virasoro_mode(vd, 2,
                        ctx.virasoro_mode(vd, -2, vac, Conformal::unshifted),
                        Conformal::unshifted)
          .coeff(FockState::vacuum(shift.lattice.rank)) *
      2;
  b.central_charge_shifted =
      ctx.virasoro_mode(vd, 2, ctx.virasoro_mode(vd, -2, vac, Conformal::shifted),
                        Conformal::shifted)
          .coeff(FockState::vacuum(shift.lattice.rank)) *
      2;

  // t(-2) kills the radical of the degree-zero algebra (checked at the
  // mode level): e^{2h}(-2) e^alpha = 0 for every nonzero alpha in A
  {
    bool ok = true;
    for (std::size_t i = 0; i < n0; ++i) {
      if (i == b.v0.unit_index) continue;
      if (!ctx.exp_mode(two_h, -2, v0_state(i)).is_zero()) ok = false;
    }
    b.fock_checks.push_back({"t_minus2_kills_radical", ok,
                             ok ? "" : "nonzero t(-2) image"});
  }

  // h(1)h = (h,h) vacuum, the quadratic normalization behind nu = 2(h,h)
  {
    FockVector hh = ctx.heis_mode(shift.h, 1, ctx.heis_mode(shift.h, -1, vac));
    bool ok = hh == vac * shift.lattice.norm(shift.h);
    b.fock_checks.push_back({"h1h_is_norm_vacuum", ok, ""});
  }

  // <u, v> = -(v, u(-1)t) where ( , ) on degree one is evaluated through
  // the adjoint formula (v, w) = -(1, v(1)w) - (1, (L(1)v)(0)w)
  {
    auto inv_form = [&](std::size_t v_idx, const FockVector& w) -> Rational {
      Rational first =
          dot(d.v0.counit,
              coords0(ctx.iterate_mode(v1_state(v_idx), 1, w), "inv form"));
      FockVector l1v =
          ctx.virasoro_mode(vd, 1, v1_state(v_idx), Conformal::shifted);
      Rational second = 0;
      if (!l1v.is_zero())
        second = dot(d.v0.counit,
                     coords0(ctx.iterate_mode(l1v, 0, w), "inv form"));
      return -first - second;
    };
    Matrix g = form_gram(d);
    FockVector t_state = v0_state(b.v0.top_index);
    bool ok = true;
    for (std::size_t u = 0; u < n1 && ok; ++u) {
      FockVector ut = ctx.iterate_mode(v1_state(u), -1, t_state);
      for (std::size_t v = 0; v < n1 && ok; ++v)
        if (g(u, v) != -inv_form(v, ut)) ok = false;
    }
    b.fock_checks.push_back({"form_agrees_with_adjoint_route", ok,
                             ok ? "" : "adjoint formula mismatch"});
  }

  return b;
}

}  // namespace voaforge

#include <catch2/catch_amalgamated.hpp>

#include "voaforge/models.hpp"

using namespace voaforge;

namespace {
ShiftDatum a1_half() {
  return ShiftDatum::make(EvenLattice::make(Matrix{{2}}), Vec{rat(1, 2)});
}
ShiftDatum a1a1_diag() {
  return ShiftDatum::make(EvenLattice::make(Matrix{{2, 0}, {0, 2}}),
                          Vec{rat(1, 2), rat(1, 2)});
}
ShiftDatum a1a1_first() {
  return ShiftDatum::make(EvenLattice::make(Matrix{{2, 0}, {0, 2}}),
                          Vec{rat(1, 2), rat(0)});
}
ShiftDatum rank1_half(long k) {
  return ShiftDatum::make(EvenLattice::make(Matrix{{2 * k}}), Vec{rat(1, 2)});
}
}  // namespace

TEST_CASE("sl2 shift model") {
  SECTION("level one") {
    Sl2ShiftModel m = build_sl2(1);
    CHECK(m.v0.dim == 2);
    CHECK(m.de_rham.all_pass());
    CHECK(m.de_rham.nu == 1);
    CHECK(m.v0.form(unit_vec(2, 0), unit_vec(2, 1)) == rat(1));
    CHECK(m.v0.form(unit_vec(2, 1), unit_vec(2, 1)) == rat(0));
    CHECK(check_sl2_selfdual(m));
    // image of the lowering map is span{1}: u_0 -> 2(0-1)x^0
    CHECK(m.lh1.apply(unit_vec(2, 0)) == Vec{rat(-2), rat(0)});
  }

  SECTION("level three eigenvalue multiplicities") {
    Sl2ShiftModel m = build_sl2(3);
    CHECK(m.de_rham.all_pass());
    CHECK(m.de_rham.nu == 3);
    REQUIRE(m.de_rham.spectrum.size() == 4);
    for (const auto& [lam, mult] : m.de_rham.spectrum) CHECK(mult == 1);
    CHECK(check_sl2_selfdual(m));
  }

  SECTION("levels up to five: dimension, pairing, self-duality") {
    for (long k = 1; k <= 5; ++k) {
      Sl2ShiftModel m = build_sl2(k);
      CHECK(m.v0.dim == std::size_t(k + 1));
      CHECK(m.de_rham.all_pass());
      CHECK(m.de_rham.nu == k);
      CHECK(check_sl2_selfdual(m));
      CHECK(m.v1_labels.size() == std::size_t(2 * k));
      for (long p = 0; p <= k; ++p)
        for (long q = 0; q <= k; ++q)
          CHECK(m.v0.form(unit_vec(k + 1, p), unit_vec(k + 1, q)) ==
                (p + q == k ? rat(1) : rat(0)));
    }
  }

  SECTION("tampered lowering map is detected") {
    Sl2ShiftModel m = build_sl2(2);
    m.lh1(2, 0) = 1;  // leak x^k into the image
    m.lh1(0, 0) = 0;
    CHECK_FALSE(check_sl2_selfdual(m));
    CHECK_THROWS_AS(build_sl2(0), check_error);
  }
}

TEST_CASE("lattice shift bundle: rank one half shift") {
  LatticeShiftBundle b = build_lattice_shift(a1_half());
  CHECK(b.v0.algebra.dim == 2);
  REQUIRE(b.v1_states.size() == 2);
  CHECK(b.nu == rat(1));
  for (const auto& c : b.fock_checks) {
    INFO(c.name);
    CHECK(c.pass);
  }
  // the computed degree-one tables match the hand computation
  CHECK(b.datum.v1.basis_bracket(0, 1) == Vec{rat(0), rat(2)});
  CHECK(b.datum.v1.basis_bracket(1, 0) == Vec{rat(0), rat(0)});
  CHECK(form_gram(b.datum) == Matrix{{2, 0}, {0, 0}});
  CHECK(b.central_charge_unshifted == rat(1));  // the rank
  // shifted central charge is computed and reported, not asserted to a
  // closed form; it must at least differ from the unshifted one here
  CHECK(b.central_charge_shifted != b.central_charge_unshifted);

  for (const auto& c : verify_axioms(b.datum)) {
    INFO(c.name << " " << c.detail);
    CHECK(c.pass);
  }
  TrichotomyReport rep = classify_trichotomy(b.datum);
  CHECK(rep.which == TrichotomyCase::i);

  ShiftedStructureReport srep =
      shifted_structure_check(b.datum, b.lprime_weights, b.w1_reductive);
  CHECK(srep.higher.dim() == 1);
  CHECK(srep.chain_equalities);
  CHECK(srep.nilp_equals_rad);
}

TEST_CASE("lattice shift bundle: diagonal shift of the rank-two lattice") {
  LatticeShiftBundle b = build_lattice_shift(a1a1_diag());
  CHECK(b.v0.algebra.dim == 4);
  CHECK(b.v1_states.size() == 8);
  CHECK(b.nu == rat(2));
  CHECK(b.central_charge_unshifted == rat(2));  // the rank
  for (const auto& c : b.fock_checks) {
    INFO(c.name);
    CHECK(c.pass);
  }
  for (const auto& c : verify_axioms(b.datum)) {
    INFO(c.name << " " << c.detail);
    CHECK(c.pass);
  }
  CHECK(classify_trichotomy(b.datum).which == TrichotomyCase::i);
  ShiftedStructureReport srep =
      shifted_structure_check(b.datum, b.lprime_weights, b.w1_reductive);
  CHECK(srep.higher.dim() == 6);
  CHECK(srep.rad_equals_ann);
  CHECK(srep.chain_equalities);
  CHECK(srep.nilp_equals_rad);
  DeRhamReport dr = de_rham_check(b.v0.algebra, b.v0.grading);
  CHECK(dr.all_pass());
  CHECK(dr.nu == 2);
}

TEST_CASE("lattice shift bundle: asymmetric shift keeps a Levi factor") {
  LatticeShiftBundle b = build_lattice_shift(a1a1_first());
  CHECK(b.v0.algebra.dim == 2);
  CHECK(b.v1_states.size() == 8);
  for (const auto& c : verify_axioms(b.datum)) {
    INFO(c.name << " " << c.detail);
    CHECK(c.pass);
  }
  // the second factor's sl2 survives in degree one
  Subspace s = levi_subalgebra(b.datum.v1);
  CHECK(s.dim() == 3);
  CHECK(classify_trichotomy(b.datum).which == TrichotomyCase::i);
  ShiftedStructureReport srep =
      shifted_structure_check(b.datum, b.lprime_weights, b.w1_reductive);
  CHECK(srep.higher.dim() == 4);
  CHECK(srep.chain_equalities);
  CHECK(srep.nilp_equals_rad);
}

TEST_CASE("lattice shift bundle: CFT-type boundary") {
  LatticeShiftBundle b = build_lattice_shift(
      ShiftDatum::make(EvenLattice::make(Matrix{{2}}), Vec{rat(0)}));
  CHECK(b.v0.algebra.dim == 1);
  CHECK(b.v1_states.size() == 3);  // the sl2 triple
  ClassicalReport rep = classical_analysis(b.datum);
  CHECK(rep.pair_in_unit_line);
  CHECK(rep.rad.is_zero());
  CHECK(b.central_charge_shifted == b.central_charge_unshifted);
  // vacuous higher part
  ShiftedStructureReport srep =
      shifted_structure_check(b.datum, b.lprime_weights, true);
  CHECK(srep.higher.is_zero());
  CHECK(srep.higher_in_ann);
}

TEST_CASE("lattice shift bundle: rank-one lattices of norm four and six") {
  for (long k = 2; k <= 3; ++k) {
    LatticeShiftBundle b = build_lattice_shift(rank1_half(k));
    CHECK(b.v0.algebra.dim == 2);
    CHECK(b.nu == rat(k));
    for (const auto& c : verify_axioms(b.datum)) {
      INFO("k=" << k << " " << c.name << " " << c.detail);
      CHECK(c.pass);
    }
    CHECK(classify_trichotomy(b.datum).which == TrichotomyCase::i);
    ShiftedStructureReport srep =
        shifted_structure_check(b.datum, b.lprime_weights, b.w1_reductive);
    CHECK(srep.chain_equalities);
    CHECK(srep.nilp_equals_rad);
    DeRhamReport dr = de_rham_check(b.v0.algebra, b.v0.grading);
    CHECK(dr.all_pass());
    CHECK(dr.nu == k);
  }
}

TEST_CASE("inadmissible shifts are rejected") {
  CHECK_THROWS_AS(build_lattice_shift(ShiftDatum::make(
                      EvenLattice::make(Matrix{{2}}), Vec{rat(3, 2)})),
                  check_error);
}

TEST_CASE("the shift vector separates the trichotomy ideals") {
  // h lies in P but in neither the radical nor the t(-1) annihilator, and
  // (t(-1)h, h) = (nu^2 - nu/2)(t, 1) through the adjoint-route form.
  LatticeShiftBundle b = build_lattice_shift(a1_half());
  FockContext ctx(b.shift.lattice, b.eps);
  VirasoroDatum vd = ctx.make_virasoro(b.shift.h);

  // h = u1/2 in the degree-one basis (a(-1)e^0, a(-1)e^a)
  Vec h_coords{rat(1, 2), rat(0)};
  TrichotomyReport tri = classify_trichotomy(b.datum);
  CHECK(tri.P.contains(h_coords));
  CHECK_FALSE(tri.rad.contains(h_coords));
  CHECK_FALSE(tri.ann_t.contains(h_coords));
  // <h, h> = (nu/2)(1, t)
  Matrix g = form_gram(b.datum);
  CHECK(dot(h_coords, g.apply(h_coords)) == b.nu / 2);

  // the adjoint-route invariant form on degree one:
  // (v, w) = -(1, v(1)w) - (1, (L(1)v)(0)w), with (1, x) = counit(x)
  IntVec two_h = b.shift.two_h();
  auto counit_of = [&](const FockVector& x) -> Rational {
    Rational out = 0;
    for (const auto& [s, c] : x.terms())
      if (s.heis.empty() && s.point == two_h) out += c;
    return out;
  };
  auto inv_form = [&](const FockVector& v, const FockVector& w) -> Rational {
    Rational first = counit_of(ctx.iterate_mode(v, 1, w));
    FockVector l1v = ctx.virasoro_mode(vd, 1, v, Conformal::shifted);
    Rational second =
        l1v.is_zero() ? Rational(0) : counit_of(ctx.iterate_mode(l1v, 0, w));
    return -first - second;
  };
  FockVector h_state =
      ctx.heis_mode(b.shift.h, -1, FockVector(FockState::vacuum(1)));
  FockVector th = ctx.exp_mode(b.shift.two_h(), -1, h_state);
  CHECK_FALSE(th.is_zero());
  CHECK(inv_form(th, h_state) == b.nu * b.nu - b.nu / 2);
}

TEST_CASE("lattice shift bundle: mixed-norm rank-two lattice") {
  // norms 2 and 4 with the diagonal half shift: the degree-zero generators
  // sit in different grading degrees (1 and 2), with top degree 3
  EvenLattice l = EvenLattice::make(Matrix{{2, 0}, {0, 4}});
  LatticeShiftBundle b =
      build_lattice_shift(ShiftDatum::make(l, Vec{rat(1, 2), rat(1, 2)}));
  CHECK(b.v0.algebra.dim == 4);
  CHECK(b.v1_states.size() == 8);
  CHECK(b.nu == rat(3));
  for (const auto& c : verify_axioms(b.datum)) {
    INFO(c.name << " " << c.detail);
    CHECK(c.pass);
  }
  DeRhamReport dr = de_rham_check(b.v0.algebra, b.v0.grading);
  CHECK(dr.all_pass());
  CHECK(dr.nu == 3);
  REQUIRE(dr.spectrum.size() == 4);  // degrees 0, 1, 2, 3 with multiplicity one
  for (const auto& [lam, mult] : dr.spectrum) CHECK(mult == 1);
  CHECK(classify_trichotomy(b.datum).which == TrichotomyCase::i);
  ShiftedStructureReport srep =
      shifted_structure_check(b.datum, b.lprime_weights, b.w1_reductive);
  CHECK(srep.chain_equalities);
  CHECK(srep.nilp_equals_rad);
}

TEST_CASE("model labels carry weight one under the shifted grading") {
  // contribution of a factor g(-l): e adds l-1, f adds l+1, h adds l
  auto label_weight = [](const std::string& label) {
    long w = 0;
    if (label.rfind("h(-1)", 0) == 0) w += 1;
    if (label.rfind("e(-2)", 0) == 0) w += 2 - 1;
    return w;  // trailing e(-1)^i factors contribute i * (1-1) = 0
  };
  for (long k = 1; k <= 4; ++k) {
    Sl2ShiftModel m = build_sl2(k);
    for (const auto& label : m.v1_labels) CHECK(label_weight(label) == 1);
  }
}

TEST_CASE("lattice shift bundle: rank-three diagonal half shift") {
  EvenLattice l = EvenLattice::make(Matrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  LatticeShiftBundle b = build_lattice_shift(
      ShiftDatum::make(l, Vec{rat(1, 2), rat(1, 2), rat(1, 2)}));
  CHECK(b.v0.algebra.dim == 8);
  CHECK(b.v1_states.size() == 24);
  CHECK(b.nu == rat(3));
  CHECK(b.central_charge_unshifted == rat(3));  // the rank
  for (const auto& c : b.fock_checks) {
    INFO(c.name);
    CHECK(c.pass);
  }
  for (const auto& c : verify_axioms(b.datum)) {
    INFO(c.name << " " << c.detail);
    CHECK(c.pass);
  }
  CHECK(classify_trichotomy(b.datum).which == TrichotomyCase::i);
  ShiftedStructureReport srep =
      shifted_structure_check(b.datum, b.lprime_weights, b.w1_reductive);
  CHECK(srep.chain_equalities);
  CHECK(srep.nilp_equals_rad);
  DeRhamReport dr = de_rham_check(b.v0.algebra, b.v0.grading);
  CHECK(dr.all_pass());
  CHECK(dr.nu == 3);
  // binomial level dimensions 1, 3, 3, 1
  REQUIRE(dr.spectrum.size() == 4);
  CHECK(dr.spectrum[1].second == 3);
  CHECK(dr.spectrum[2].second == 3);
}

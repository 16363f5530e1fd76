#include <catch2/catch_amalgamated.hpp>

#include "voaforge/leibniz.hpp"
#include "voaforge/selfcheck.hpp"

using namespace voaforge;

TEST_CASE("leibniz identity verification") {
  CHECK(verify_leibniz(LeibnizAlgebra::zero(3)));
  CHECK(verify_leibniz(tables::sl2()));
  CHECK(is_lie(tables::sl2()));

  // 2-dim table with [e,e] = f and all other brackets zero; the eight basis
  // triples expand to 0 = 0 by hand except (e,e,*) which give [f,e] = 0.
  LeibnizAlgebra toy = tables::square_toy();
  CHECK(verify_leibniz(toy));
  CHECK_FALSE(is_antisymmetric(toy));

  LeibnizAlgebra bad = LeibnizAlgebra::zero(2);
  bad.bracket[0][0][1] = 1;  // [e,e] = f ...
  bad.bracket[1][0][0] = 1;  // ... and [f,e] = e breaks the identity
  auto viol = leibniz_violation(bad);
  REQUIRE(viol.has_value());
}

TEST_CASE("leibniz kernel") {
  CHECK(leibniz_kernel(tables::sl2()).is_zero());
  CHECK(leibniz_kernel(LeibnizAlgebra::zero(4)).is_zero());
  Subspace k = leibniz_kernel(tables::square_toy());
  REQUIRE(k.dim() == 1);
  CHECK(k.contains(unit_vec(2, 1)));
  CHECK(is_two_sided_ideal(tables::square_toy(), k));
}

TEST_CASE("squares lie in the kernel") {
  LeibnizAlgebra l = tables::direct_sum(tables::square_toy(), tables::sl2());
  Subspace k = leibniz_kernel(l);
  for (std::size_t i = 0; i < l.dim; ++i)
    CHECK(k.contains(l.basis_bracket(i, i)));
}

TEST_CASE("annihilator of the kernel") {
  CHECK(annihilator_of_kernel(tables::sl2()) == Subspace::full(3));
  CHECK(annihilator_of_kernel(tables::square_toy()) == Subspace::full(2));
  LeibnizAlgebra ds = tables::direct_sum(tables::square_toy(), tables::sl2());
  CHECK(annihilator_of_kernel(ds) == Subspace::full(5));
}

TEST_CASE("lie quotient") {
  // a Lie table quotients by zero: the identity quotient with the same table
  LeibnizAlgebra q1 = lie_quotient(tables::sl2());
  CHECK(q1.dim == 3);
  CHECK(is_lie(q1));
  CHECK(q1.bracket == tables::sl2().bracket);

  LeibnizAlgebra q2 = lie_quotient(tables::square_toy());
  CHECK(q2.dim == 1);
  CHECK(q2.basis_bracket(0, 0) == Vec{rat(0)});

  LeibnizAlgebra q3 = lie_quotient(LeibnizAlgebra::zero(4));
  CHECK(q3.dim == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(is_zero_vec(q3.basis_bracket(i, j)));
}

TEST_CASE("solvable radical") {
  CHECK(solvable_radical(tables::sl2()).is_zero());
  CHECK(solvable_radical(tables::affine_line()) == Subspace::full(2));
  // gl2: radical is the span of the identity matrix
  LeibnizAlgebra gl2 = tables::gl2();
  Subspace rad = solvable_radical(gl2);
  REQUIRE(rad.dim() == 1);
  CHECK(rad.contains(Vec{rat(1), rat(0), rat(0), rat(1)}));
  // cross-check by brute force ideal search
  CHECK(oracle::max_solvable_ideal(gl2) == rad);
}

TEST_CASE("nilpotent radical") {
  CHECK(nilpotent_radical(tables::sl2()).is_zero());
  Subspace n1 = nilpotent_radical(tables::affine_line());
  REQUIRE(n1.dim() == 1);
  CHECK(n1.contains(unit_vec(2, 1)));
  CHECK(nilpotent_radical(tables::gl2()).is_zero());
}

TEST_CASE("radical tower containments and reductivity") {
  for (const LeibnizAlgebra& l :
       {tables::sl2(), tables::gl2(), tables::affine_line(),
        tables::direct_sum(tables::square_toy(), tables::sl2())}) {
    RadicalTower t = radical_tower(l);
    CHECK(t.nilpotent_N1.contains(t.kernel_N));
    CHECK(t.nil_N0.contains(t.nilpotent_N1));
    CHECK(t.solvable_B.contains(t.nil_N0));
    CHECK(is_two_sided_ideal(l, t.nilpotent_N1));
    CHECK(is_two_sided_ideal(l, t.solvable_B));
    // quotient by N1 is reductive: its solvable radical is central
    QuotientAlgebra q = quotient_by(l, t.nilpotent_N1);
    Subspace radq = solvable_radical(q.algebra);
    CHECK(bracket_span(q.algebra, Subspace::full(q.algebra.dim), radq).is_zero());
    CHECK(bracket_span(q.algebra, radq, Subspace::full(q.algebra.dim)).is_zero());
  }
}

TEST_CASE("nil radical separates central torus from nilpotent part") {
  // gl2 = sl2 + center: N1 = 0 but N0 = center
  RadicalTower t = radical_tower(tables::gl2());
  CHECK(t.nilpotent_N1.is_zero());
  REQUIRE(t.nil_N0.dim() == 1);
  CHECK(t.nil_N0.contains(Vec{rat(1), rat(0), rat(0), rat(1)}));

  // non-nilpotent solvable: N0 = span{y} inside B = everything
  RadicalTower t2 = radical_tower(tables::affine_line());
  CHECK(t2.nil_N0.dim() == 1);
  CHECK(t2.solvable_B.dim() == 2);
}

TEST_CASE("derived and lower central series") {
  LeibnizAlgebra ab = LeibnizAlgebra::zero(3);
  CHECK(is_solvable(ab));
  CHECK(is_nilpotent(ab));

  CHECK_FALSE(is_solvable(tables::sl2()));
  CHECK_FALSE(is_nilpotent(tables::sl2()));

  LeibnizAlgebra aff = tables::affine_line();  // [x,y] = y
  CHECK(is_solvable(aff));
  CHECK_FALSE(is_nilpotent(aff));
  auto ds = derived_series(aff);
  REQUIRE(ds.size() == 3);  // full > span{y} > 0
  CHECK(ds[1].dim() == 1);
  CHECK(ds[2].is_zero());

  CHECK(is_nilpotent(tables::heisenberg3()));
}

TEST_CASE("levi subalgebra") {
  CHECK(levi_subalgebra(tables::sl2()) == Subspace::full(3));
  CHECK(levi_subalgebra(tables::affine_line()).is_zero());

  // sl2 acting on its 2-dim standard module
  LeibnizAlgebra l = tables::semidirect_sl2_module({2});
  Subspace s = levi_subalgebra(l);
  Subspace b = solvable_radical(l);
  REQUIRE(s.dim() == 3);
  CHECK(intersect(s, b).is_zero());
  CHECK(sum(s, b) == Subspace::full(l.dim));
  LeibnizAlgebra st = subalgebra_table(l, s);
  CHECK(is_lie(st));
  CHECK(det(killing_form(st)) != rat(0));
}

TEST_CASE("invariant form radical") {
  LeibnizAlgebra l = tables::sl2();
  CHECK(invariant_form_radical(l, Matrix::identity(3)).is_zero());
  CHECK(invariant_form_radical(l, Matrix(3, 3)) == Subspace::full(3));
  Matrix rank1{{1, 0}, {0, 0}};
  LeibnizAlgebra two = LeibnizAlgebra::zero(2);
  Subspace r = invariant_form_radical(two, rank1);
  REQUIRE(r.dim() == 1);
  CHECK(r.contains(unit_vec(2, 1)));
  CHECK_THROWS_AS(invariant_form_radical(two, Matrix::identity(3)), error);
}

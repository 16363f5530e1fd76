#include <catch2/catch_amalgamated.hpp>

#include "voaforge/frobenius.hpp"
#include "voaforge/selfcheck.hpp"

using namespace voaforge;

TEST_CASE("verify_frobenius") {
  // Q[x]/x^2 with counit picking x: nondegenerate
  FrobeniusAlgebra a = tables::truncated_polynomial(1);
  CHECK(verify_frobenius(a));

  // same algebra with counit picking 1: degenerate (x is in the form radical)
  FrobeniusAlgebra b = a;
  b.counit = Vec{rat(1), rat(0)};
  CHECK_FALSE(verify_frobenius(b));
  CHECK(is_commutative(b));
  CHECK(is_associative(b));

  FrobeniusAlgebra one = tables::truncated_polynomial(0);
  CHECK(verify_frobenius(one));
}

TEST_CASE("jacobson radical") {
  for (std::size_t k = 1; k <= 4; ++k) {
    Subspace j = jacobson_radical(tables::truncated_polynomial(k));
    REQUIRE(j.dim() == k);
    for (std::size_t i = 1; i <= k; ++i) CHECK(j.contains(unit_vec(k + 1, i)));
  }
  CHECK(jacobson_radical(tables::q_times_q()).is_zero());
  Subspace j2 = jacobson_radical(tables::two_nilpotents());
  REQUIRE(j2.dim() == 3);
  for (std::size_t i : {1u, 2u, 3u}) CHECK(j2.contains(unit_vec(4, i)));
}

TEST_CASE("radical elements are nilpotent and the rest are not") {
  gen::Rng rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    auto inst = gen::random_commutative_instance(rng);
    Subspace j = jacobson_radical(inst.algebra);
    CHECK(j == inst.known_radical);
    for (std::size_t i = 0; i < j.dim(); ++i)
      CHECK(oracle::element_is_nilpotent(inst.algebra, j.basis_vector(i)));
    // elements outside the radical are not nilpotent
    auto reps = quotient_basis(Subspace::full(inst.algebra.dim), j);
    for (const auto& r : reps)
      CHECK_FALSE(oracle::element_is_nilpotent(inst.algebra, r));
  }
}

TEST_CASE("is_local") {
  CHECK(is_local(tables::truncated_polynomial(3)));
  CHECK_FALSE(is_local(tables::q_times_q()));
  CHECK(is_local(tables::two_nilpotents()));
  CHECK(is_local(tables::quadratic_field(2)));   // a field, no idempotents
  CHECK(is_local(tables::quadratic_field(-1)));  // imaginary quadratic field
  CHECK_FALSE(is_local(tables::quadratic_field(4)));  // s^2 = 4 splits
  // product of two quadratic fields, fields only split by factorization
  FrobeniusAlgebra pp = tables::direct_product(tables::quadratic_field(2),
                                               tables::quadratic_field(3));
  // scramble so no basis vector is idempotent
  gen::Rng rng(5);
  Matrix p = gen::random_unimodular(rng, 4, 12);
  FrobeniusAlgebra out = FrobeniusAlgebra::zero_product(4);
  auto pinv = inverse(p);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      out.mult[i][j] = pinv->apply(pp.mult_vec(p.col(i), p.col(j)));
  out.unit = pinv->apply(pp.unit);
  for (std::size_t i = 0; i < 4; ++i) out.counit[i] = dot(pp.counit, p.col(i));
  CHECK_FALSE(is_local(out));
}

TEST_CASE("minimal ideal") {
  for (std::size_t k = 1; k <= 3; ++k) {
    Subspace t = minimal_ideal(tables::truncated_polynomial(k));
    REQUIRE(t.dim() == 1);
    CHECK(t.contains(unit_vec(k + 1, k)));
  }
  CHECK(minimal_ideal(tables::truncated_polynomial(0)) == Subspace::full(1));
  Subspace t = minimal_ideal(tables::two_nilpotents());
  REQUIRE(t.dim() == 1);
  CHECK(t.contains(unit_vec(4, 3)));
  CHECK_THROWS_AS(minimal_ideal(tables::q_times_q()), check_error);
}

TEST_CASE("minimal ideal is annihilated by the radical") {
  FrobeniusAlgebra a = tables::two_nilpotents();
  Subspace j = jacobson_radical(a);
  Subspace t = minimal_ideal(a);
  for (std::size_t i = 0; i < j.dim(); ++i)
    CHECK(is_zero_vec(a.mult_vec(j.basis_vector(i), t.basis_vector(0))));
}

TEST_CASE("form invariance on basis triples") {
  for (const auto& a : {tables::truncated_polynomial(3), tables::two_nilpotents()}) {
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j)
        for (std::size_t k = 0; k < a.dim; ++k) {
          Vec ei = unit_vec(a.dim, i), ej = unit_vec(a.dim, j), ek = unit_vec(a.dim, k);
          CHECK(dot(a.counit, a.mult_vec(a.mult_vec(ei, ej), ek)) ==
                dot(a.counit, a.mult_vec(ej, a.mult_vec(ei, ek))));
        }
  }
}

static GradingOperator diagonal_grading(std::initializer_list<long> eigs) {
  Matrix m(eigs.size(), eigs.size());
  std::size_t i = 0;
  for (long e : eigs) {
    m(i, i) = rat(e);
    ++i;
  }
  return GradingOperator{m};
}

TEST_CASE("de Rham checks on graded local algebras") {
  SECTION("truncated polynomial algebra, degree grading") {
    for (std::size_t k = 1; k <= 4; ++k) {
      FrobeniusAlgebra a = tables::truncated_polynomial(k);
      Matrix d(k + 1, k + 1);
      for (std::size_t i = 0; i <= k; ++i) d(i, i) = rat(long(i));
      DeRhamReport rep = de_rham_check(a, GradingOperator{d});
      CHECK(rep.all_pass());
      CHECK(rep.nu == long(k));
      REQUIRE(rep.spectrum.size() == k + 1);
      for (const auto& [lam, mult] : rep.spectrum) CHECK(mult == 1);
      // the pairing is the anti-diagonal delta_{p+q,k}
      for (std::size_t p = 0; p <= k; ++p)
        for (std::size_t q = 0; q <= k; ++q)
          CHECK(a.form(unit_vec(k + 1, p), unit_vec(k + 1, q)) ==
                (p + q == k ? rat(1) : rat(0)));
    }
  }

  SECTION("one-dimensional algebra, zero grading") {
    DeRhamReport rep =
        de_rham_check(tables::truncated_polynomial(0), diagonal_grading({0}));
    CHECK(rep.all_pass());
    CHECK(rep.nu == 0);
  }

  SECTION("two nilpotent generators in degree one") {
    DeRhamReport rep =
        de_rham_check(tables::two_nilpotents(), diagonal_grading({0, 1, 1, 2}));
    CHECK(rep.all_pass());
    CHECK(rep.nu == 2);
    REQUIRE(rep.spectrum.size() == 3);
    CHECK(rep.spectrum[0] == std::make_pair(0L, std::size_t(1)));
    CHECK(rep.spectrum[1] == std::make_pair(1L, std::size_t(2)));
    CHECK(rep.spectrum[2] == std::make_pair(2L, std::size_t(1)));
  }

  SECTION("palindromic level dimensions") {
    DeRhamReport rep =
        de_rham_check(tables::two_nilpotents(), diagonal_grading({0, 1, 1, 2}));
    for (std::size_t i = 0; i < rep.spectrum.size(); ++i) {
      auto [lam, mult] = rep.spectrum[i];
      auto [lam2, mult2] = rep.spectrum[rep.spectrum.size() - 1 - i];
      CHECK(lam + lam2 == rep.nu);
      CHECK(mult == mult2);
    }
  }

  SECTION("non-derivation and non-integer gradings are rejected") {
    FrobeniusAlgebra a = tables::truncated_polynomial(1);
    Matrix bad(2, 2);
    bad(0, 0) = rat(1);  // does not kill the unit: not a derivation
    bad(1, 1) = rat(1);
    CHECK_THROWS_AS(de_rham_check(a, GradingOperator{bad}), check_error);
    Matrix half(2, 2);
    half(1, 1) = rat(1, 2);
    CHECK_THROWS_AS(de_rham_check(a, GradingOperator{half}), check_error);
  }
}

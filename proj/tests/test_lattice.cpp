#include <catch2/catch_amalgamated.hpp>

#include "voaforge/lattice.hpp"

using namespace voaforge;

static EvenLattice a1() { return EvenLattice::make(Matrix{{2}}); }
static EvenLattice a1a1() { return EvenLattice::make(Matrix{{2, 0}, {0, 2}}); }
static EvenLattice rank1(long k) { return EvenLattice::make(Matrix{{2 * k}}); }

TEST_CASE("lattice validation") {
  CHECK_THROWS_AS(EvenLattice::make(Matrix{{1}}), check_error);        // odd norm
  CHECK_THROWS_AS(EvenLattice::make(Matrix{{-2}}), check_error);       // indefinite
  CHECK_THROWS_AS(EvenLattice::make(Matrix{{2, 1}, {0, 2}}), check_error);  // asym
  CHECK_NOTHROW(EvenLattice::make(Matrix{{2, -1}, {-1, 2}}));          // A2
}

TEST_CASE("short vector enumeration") {
  auto v = short_vectors(a1(), Vec{rat(0)}, rat(2));
  REQUIRE(v.size() == 3);  // -a, 0, a
  CHECK(v[0] == IntVec{-1});
  CHECK(v[1] == IntVec{0});
  CHECK(v[2] == IntVec{1});

  CHECK(short_vectors(a1(), Vec{rat(0)}, rat(0)) == std::vector<IntVec>{{0}});

  auto w = short_vectors(a1a1(), Vec{rat(0), rat(0)}, rat(2));
  CHECK(w.size() == 5);  // 0 and the four unit-coordinate vectors
}

TEST_CASE("off-center count is exact") {
  // 2(n-1/2)^2 <= 5/8 iff (2n-1)^2 <= 5/4 iff n in {0,1}
  auto u = short_vectors(a1(), Vec{rat(1, 2)}, rat(5, 8));
  REQUIRE(u.size() == 2);
  CHECK(u[0] == IntVec{0});
  CHECK(u[1] == IntVec{1});
}

TEST_CASE("shift admissibility") {
  CHECK(shift_admissible(ShiftDatum::make(a1(), Vec{rat(1, 2)})));
  CHECK(shift_admissible(ShiftDatum::make(a1(), Vec{rat(0)})));
  CHECK_FALSE(shift_admissible(ShiftDatum::make(a1(), Vec{rat(3, 2)})));
  CHECK_THROWS_AS(ShiftDatum::make(a1(), Vec{rat(1, 3)}), check_error);
  CHECK(shift_admissible(ShiftDatum::make(a1a1(), Vec{rat(1, 2), rat(1, 2)})));
  for (long k = 1; k <= 3; ++k)
    CHECK(shift_admissible(ShiftDatum::make(rank1(k), Vec{rat(1, 2)})));
}

TEST_CASE("enumerate_A") {
  auto a = enumerate_A(ShiftDatum::make(a1(), Vec{rat(1, 2)}));
  REQUIRE(a.size() == 2);
  CHECK(a[0] == IntVec{0});
  CHECK(a[1] == IntVec{1});

  CHECK(enumerate_A(ShiftDatum::make(a1(), Vec{rat(0)})) ==
        std::vector<IntVec>{{0}});

  auto b = enumerate_A(ShiftDatum::make(a1a1(), Vec{rat(1, 2), rat(1, 2)}));
  REQUIRE(b.size() == 4);
  CHECK(b[0] == IntVec{0, 0});
  CHECK(b[1] == IntVec{0, 1});
  CHECK(b[2] == IntVec{1, 0});
  CHECK(b[3] == IntVec{1, 1});

  for (long k = 1; k <= 3; ++k) {
    auto c = enumerate_A(ShiftDatum::make(rank1(k), Vec{rat(1, 2)}));
    REQUIRE(c.size() == 2);
    CHECK(c[0] == IntVec{0});
    CHECK(c[1] == IntVec{1});
  }
}

TEST_CASE("A sphere properties") {
  ShiftDatum s = ShiftDatum::make(a1a1(), Vec{rat(1, 2), rat(1, 2)});
  auto a = enumerate_A(s);
  IntVec two_h = s.two_h();
  for (const auto& al : a) {
    // symmetry under alpha -> 2h - alpha
    IntVec refl(al.size());
    for (std::size_t i = 0; i < al.size(); ++i) refl[i] = two_h[i] - al[i];
    CHECK(std::find(a.begin(), a.end(), refl) != a.end());
    for (const auto& be : a) {
      Rational ip = s.lattice.inner(al, be);
      CHECK(ip >= 0);
      IntVec sum_ab(al.size());
      for (std::size_t i = 0; i < al.size(); ++i) sum_ab[i] = al[i] + be[i];
      bool in_a = std::find(a.begin(), a.end(), sum_ab) != a.end();
      CHECK(in_a == (ip == 0));
    }
  }
}

TEST_CASE("cocycle") {
  Cocycle c1 = build_cocycle(a1());
  for (long m = -3; m <= 3; ++m)
    for (long n = -3; n <= 3; ++n)
      CHECK(c1.sign(IntVec{m}, IntVec{n}) == 1);  // (a,a) even in rank 1

  Cocycle c2 = build_cocycle(a1a1());
  CHECK(c2.sign(IntVec{1, 0}, IntVec{0, 1}) * c2.sign(IntVec{0, 1}, IntVec{1, 0}) == 1);
  CHECK(c2.sign(IntVec{0, 0}, IntVec{1, 1}) == 1);
  CHECK(c2.sign(IntVec{1, 1}, IntVec{0, 0}) == 1);

  // commutator identity on a non-orthogonal lattice (A2)
  EvenLattice a2 = EvenLattice::make(Matrix{{2, -1}, {-1, 2}});
  Cocycle c3 = build_cocycle(a2);
  for (long i = -2; i <= 2; ++i)
    for (long j = -2; j <= 2; ++j)
      for (long k = -2; k <= 2; ++k)
        for (long m = -2; m <= 2; ++m) {
          IntVec a{i, j}, b{k, m};
          Rational ip = a2.inner(a, b);
          int expect = ip.get_num() % 2 == 0 ? 1 : -1;
          CHECK(c3.sign(a, b) * c3.sign(b, a) == expect);
        }
}

TEST_CASE("build_V0") {
  SECTION("A1 with h = alpha/2 is the dual numbers") {
    ShiftDatum s = ShiftDatum::make(a1(), Vec{rat(1, 2)});
    V0Build b = build_V0(s, build_cocycle(s.lattice));
    REQUIRE(b.algebra.dim == 2);
    CHECK(verify_frobenius(b.algebra));
    CHECK(is_local(b.algebra));
    // x = e^alpha squares to zero
    CHECK(is_zero_vec(b.algebra.mult_vec(unit_vec(2, b.top_index),
                                         unit_vec(2, b.top_index))));
    DeRhamReport rep = de_rham_check(b.algebra, b.grading);
    CHECK(rep.all_pass());
    CHECK(rep.nu == 1);
  }

  SECTION("h = 0 gives the one-dimensional algebra") {
    ShiftDatum s = ShiftDatum::make(a1(), Vec{rat(0)});
    V0Build b = build_V0(s, build_cocycle(s.lattice));
    CHECK(b.algebra.dim == 1);
  }

  SECTION("A1 + A1 with diagonal half shift is Q[x,y]/(x^2,y^2)") {
    ShiftDatum s = ShiftDatum::make(a1a1(), Vec{rat(1, 2), rat(1, 2)});
    V0Build b = build_V0(s, build_cocycle(s.lattice));
    REQUIRE(b.algebra.dim == 4);
    DeRhamReport rep = de_rham_check(b.algebra, b.grading);
    CHECK(rep.all_pass());
    CHECK(rep.nu == 2);
    // x^2 = 0: alpha1 + alpha1 leaves the sphere
    std::size_t x_idx = 2;  // points sorted: (0,0), (0,1), (1,0), (1,1)
    CHECK(is_zero_vec(b.algebra.mult_vec(unit_vec(4, x_idx), unit_vec(4, x_idx))));
    // x*y = e^{(1,1)}
    Vec xy = b.algebra.mult_vec(unit_vec(4, 1), unit_vec(4, 2));
    CHECK(xy == unit_vec(4, 3));
  }

  SECTION("rank-one lattices of higher norm") {
    for (long k = 2; k <= 3; ++k) {
      ShiftDatum s = ShiftDatum::make(rank1(k), Vec{rat(1, 2)});
      V0Build b = build_V0(s, build_cocycle(s.lattice));
      REQUIRE(b.algebra.dim == 2);
      DeRhamReport rep = de_rham_check(b.algebra, b.grading);
      CHECK(rep.all_pass());
      CHECK(rep.nu == k);  // nu = 2(h,h) = k
    }
  }

  SECTION("the counit pairs e^a with e^{2h-a}") {
    ShiftDatum s = ShiftDatum::make(a1a1(), Vec{rat(1, 2), rat(1, 2)});
    V0Build b = build_V0(s, build_cocycle(s.lattice));
    IntVec two_h = s.two_h();
    for (std::size_t i = 0; i < b.points.size(); ++i)
      for (std::size_t j = 0; j < b.points.size(); ++j) {
        bool complementary = true;
        for (std::size_t d = 0; d < two_h.size(); ++d)
          if (b.points[i][d] + b.points[j][d] != two_h[d]) complementary = false;
        Rational val = b.algebra.form(unit_vec(b.algebra.dim, i),
                                      unit_vec(b.algebra.dim, j));
        CHECK((val != 0) == complementary);
      }
  }
}

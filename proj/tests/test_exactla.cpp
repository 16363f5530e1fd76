#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "voaforge/matrix.hpp"
#include "voaforge/subspace.hpp"

using namespace voaforge;

TEST_CASE("rational parsing and formatting") {
  CHECK(rat_parse("3/6") == rat(1, 2));
  CHECK(rat_parse("-4/2") == rat(-2));
  CHECK(rat_parse("7") == rat(7));
  CHECK(rat_str(rat(1, 2)) == "1/2");
  CHECK(rat_str(rat(-6, 3)) == "-2");
  CHECK_THROWS_AS(rat_parse("1.5"), parse_error);
  CHECK_THROWS_AS(rat_parse("x"), parse_error);
  CHECK_THROWS_AS(rat_parse("1/0"), parse_error);
}

TEST_CASE("rref on known inputs") {
  CHECK(rref(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(rref(Matrix(2, 2)) == Matrix(2, 2));
  // hand row-reduction: [[2,4],[1,2]] -> [[1,2],[0,0]]
  Matrix m{{2, 4}, {1, 2}};
  Matrix expect{{1, 2}, {0, 0}};
  CHECK(rref(m) == expect);
}

TEST_CASE("rref is idempotent") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m(4, 6);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 6; ++j) m(i, j) = rat(d(rng), 1 + (trial % 3));
    Matrix e = rref(m);
    CHECK(rref(e) == e);
  }
}

TEST_CASE("kernel of known maps") {
  CHECK(kernel(Matrix::identity(4)).dim() == 0);
  CHECK(kernel(Matrix(3, 3)) == Subspace::full(3));
  Matrix m{{1, 1}};
  Subspace k = kernel(m);
  REQUIRE(k.dim() == 1);
  CHECK(k.contains(Vec{rat(1), rat(-1)}));
}

TEST_CASE("rank-nullity") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 1 + trial % 5, c = 1 + (trial * 3) % 6;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    CHECK(rank(m) + kernel(m).dim() == c);
  }
}

TEST_CASE("solve returns echelon-canonical particular solutions") {
  Matrix a{{1, 2, 0}, {0, 0, 1}};
  auto x = solve(a, Vec{rat(3), rat(5)});
  REQUIRE(x.has_value());
  CHECK(*x == Vec{rat(3), rat(0), rat(5)});  // free variable set to zero
  Matrix bad{{1, 1}, {1, 1}};
  CHECK_FALSE(solve(bad, Vec{rat(0), rat(1)}).has_value());
}

TEST_CASE("determinant and inverse") {
  Matrix m{{2, 1}, {1, 1}};
  CHECK(det(m) == rat(1));
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK((*inv) * m == Matrix::identity(2));
  CHECK(det(Matrix{{1, 2}, {2, 4}}) == rat(0));
  CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}).has_value());
}

TEST_CASE("subspace basics") {
  Subspace e1 = Subspace::span(2, {Vec{rat(1), rat(0)}});
  Subspace e2 = Subspace::span(2, {Vec{rat(0), rat(1)}});
  CHECK(intersect(e1, e2).is_zero());
  CHECK(sum(e1, e2) == Subspace::full(2));
  CHECK(orthogonal_complement(e1, Matrix::identity(2)) == e2);

  // subspace equality is canonical regardless of the spanning set
  Subspace a = Subspace::span(3, {Vec{rat(1), rat(1), rat(0)},
                                  Vec{rat(0), rat(1), rat(1)}});
  Subspace b = Subspace::span(3, {Vec{rat(1), rat(2), rat(1)},
                                  Vec{rat(2), rat(1), rat(-1)}});
  CHECK(a == b);
  CHECK(a.contains(b));
  CHECK(b.contains(a));
}

TEST_CASE("sum/intersection dimension law on random instances") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> d(-3, 3);
  auto random_subspace = [&](std::size_t ambient, std::size_t gens) {
    std::vector<Vec> rows;
    for (std::size_t g = 0; g < gens; ++g) {
      Vec v(ambient);
      for (auto& x : v) x = d(rng);
      rows.push_back(v);
    }
    return Subspace::span(ambient, rows);
  };
  for (int trial = 0; trial < 40; ++trial) {
    Subspace a = random_subspace(5, 1 + trial % 4);
    Subspace b = random_subspace(5, 1 + (trial / 2) % 4);
    CHECK(a.dim() + b.dim() == sum(a, b).dim() + intersect(a, b).dim());
    CHECK(sum(a, b).contains(a));
    CHECK(a.contains(intersect(a, b)));
  }
}

TEST_CASE("orthogonal complement is an involution under nondegenerate forms") {
  Matrix form{{2, 1, 0}, {1, 2, 0}, {0, 0, 1}};
  REQUIRE(det(form) != rat(0));
  Subspace s = Subspace::span(3, {Vec{rat(1), rat(2), rat(3)}});
  Subspace perp = orthogonal_complement(s, form);
  CHECK(perp.dim() == 2);
  CHECK(orthogonal_complement(perp, form) == s);
}

TEST_CASE("quotient basis") {
  Subspace big = Subspace::full(3);
  Subspace small = Subspace::span(3, {Vec{rat(1), rat(1), rat(0)}});
  auto reps = quotient_basis(big, small);
  REQUIRE(reps.size() == 2);
  std::vector<Vec> all = reps;
  all.push_back(small.basis_vector(0));
  CHECK(Subspace::span(3, all) == big);
  CHECK_THROWS_AS(quotient_basis(small, big), error);
}

#include <catch2/catch_amalgamated.hpp>

#include "voaforge/polynomial.hpp"

using namespace voaforge;

static Poly P(std::initializer_list<long> coeffs) {
  Poly p;
  for (long c : coeffs) p.push_back(rat(c));
  return poly_trim(p);
}

TEST_CASE("polynomial arithmetic") {
  Poly a = P({1, 2, 1});  // (x+1)^2
  Poly b = P({1, 1});
  auto [q, r] = poly_divmod(a, b);
  CHECK(q == b);
  CHECK(r.empty());
  CHECK(poly_mul(b, b) == a);
  CHECK(poly_eval(a, rat(2)) == rat(9));
  CHECK(poly_gcd(a, poly_derivative(a)) == b);
}

TEST_CASE("characteristic and minimal polynomials") {
  Matrix m{{2, 0}, {0, 2}};
  CHECK(char_poly(m) == P({4, -4, 1}));
  CHECK(min_poly(m) == P({-2, 1}));
  Matrix j{{2, 1}, {0, 2}};
  CHECK(min_poly(j) == P({4, -4, 1}));
  Matrix comp{{0, -6}, {1, 5}};  // companion of x^2-5x+6
  auto roots = rational_roots(char_poly(comp));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first == rat(2));
  CHECK(roots[1].first == rat(3));
}

TEST_CASE("rational roots with multiplicities") {
  // x^2 (x - 1/2) (x + 3)
  Poly p = poly_mul(P({0, 0, 1}), poly_mul(Poly{rat(-1, 2), rat(1)}, P({3, 1})));
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == std::make_pair(rat(-3), 1));
  CHECK(roots[1] == std::make_pair(rat(0), 2));
  CHECK(roots[2] == std::make_pair(rat(1, 2), 1));
  CHECK(rational_roots(P({2, 0, 1})).empty());  // x^2+2
}

TEST_CASE("irreducibility over Q") {
  CHECK(poly_irreducible(P({-2, 0, 1})));          // x^2-2
  CHECK_FALSE(poly_irreducible(P({-4, 0, 1})));    // (x-2)(x+2)
  CHECK(poly_irreducible(P({1, 1, 1, 1, 1})));     // cyclotomic Phi_5
  CHECK_FALSE(poly_irreducible(P({6, 0, 5, 0, 1})));  // (x^2+2)(x^2+3)
  CHECK(poly_irreducible(P({2, 0, 0, 0, 0, 0, 0, 0, 1})));  // x^8+2 (Eisenstein)
  auto f = poly_nontrivial_factor(P({6, 0, 5, 0, 1}));
  REQUIRE(f.has_value());
  auto [q, r] = poly_divmod(P({6, 0, 5, 0, 1}), *f);
  CHECK(r.empty());
  CHECK(poly_deg(*f) + poly_deg(q) == 4);
}

#pragma once

#include <algorithm>
#include <map>
#include <optional>

#include "voaforge/matrix.hpp"

namespace voaforge {

/// Dense univariate polynomial over Q, coefficients in ascending degree,
/// no trailing zeros. The zero polynomial is the empty vector.
using Poly = std::vector<Rational>;

inline Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return poly_trim(r);
}

inline Poly poly_scale(Poly p, const Rational& s) {
  for (auto& c : p) c *= s;
  return poly_trim(p);
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

/// Quotient and remainder of a by b.
inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  if (b.empty()) throw error("polynomial division by zero");
  Poly q(a.size(), Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a = poly_trim(a);
  }
  return {poly_trim(q), poly_trim(a)};
}

inline Rational poly_eval(const Poly& p, const Rational& x) {
  Rational v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

inline Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rational(long(i));
  return d;
}

inline Poly poly_monic(Poly p) {
  if (p.empty()) return p;
  return poly_scale(std::move(p), 1 / p.back());
}

inline Poly poly_gcd(Poly a, Poly b) {
  a = poly_trim(a);
  b = poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

/// Characteristic polynomial by the Faddeev-LeVerrier recursion (exact over Q).
inline Poly char_poly(const Matrix& m) {
  if (m.rows() != m.cols()) throw error("char_poly of non-square matrix");
  std::size_t n = m.rows();
  Poly c(n + 1, Rational(0));
  c[n] = 1;
  Matrix mk = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    Rational ck = -mk.trace() / Rational(long(k));
    c[n - k] = ck;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += ck;
  }
  return c;
}

/// Minimal polynomial of a square matrix: least monic p with p(m) = 0,
/// found as the first linear dependence among I, m, m^2, ...
inline Poly min_poly(const Matrix& m) {
  if (m.rows() != m.cols()) throw error("min_poly of non-square matrix");
  std::size_t n = m.rows();
  std::vector<Vec> flat;  // powers flattened to vectors of length n*n
  Matrix pw = Matrix::identity(n);
  for (std::size_t d = 0;; ++d) {
    Vec f(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) f[i * n + j] = pw(i, j);
    // look for coefficients x with sum x_k m^k + f = 0
    if (!flat.empty()) {
      Matrix a(n * n, flat.size());
      for (std::size_t c = 0; c < flat.size(); ++c)
        for (std::size_t r = 0; r < n * n; ++r) a(r, c) = flat[c][r];
      Vec rhs(n * n);
      for (std::size_t r = 0; r < n * n; ++r) rhs[r] = -f[r];
      if (auto x = solve(a, rhs)) {
        Poly p(d + 1);
        for (std::size_t k = 0; k < d; ++k) p[k] = (*x)[k];
        p[d] = 1;
        return p;
      }
    }
    flat.push_back(std::move(f));
    pw = pw * m;
    if (d > n) throw error("min_poly: no dependence found");  // cannot happen
  }
}

/// All divisors of |n| (unsigned), by trial division. Desk scale only.
inline std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  if (n == 0) throw error("divisors of zero");
  std::map<Integer, int> fac;
  Integer d = 2;
  while (d * d <= n) {
    while (n % d == 0) {
      ++fac[d];
      n /= d;
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) ++fac[n];
  std::vector<Integer> out{Integer(1)};
  for (const auto& [p, e] : fac) {
    std::size_t sz = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Content-free integer form of p: returns primitive integer coefficients.
inline std::vector<Integer> poly_primitive_integer(const Poly& p) {
  if (p.empty()) throw error("primitive form of zero polynomial");
  Integer lcm_den = 1;
  for (const auto& c : p) {
    Integer den = c.get_den();
    Integer g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    lcm_den = lcm_den / g * den;
  }
  std::vector<Integer> z(p.size());
  Integer content = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational c = p[i] * Rational(lcm_den);
    z[i] = c.get_num();
    Integer g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
    content = g;
  }
  if (content > 1)
    for (auto& c : z) c /= content;
  if (z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

/// Rational roots of p with multiplicities, via the rational root theorem.
inline std::vector<std::pair<Rational, int>> rational_roots(Poly p) {
  p = poly_trim(p);
  std::vector<std::pair<Rational, int>> roots;
  if (p.size() <= 1) return roots;
  int zero_mult = 0;
  while (!p.empty() && p.front() == 0) {
    p.erase(p.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);
  if (p.size() <= 1) return roots;
  std::vector<Integer> z = poly_primitive_integer(p);
  std::vector<Integer> nums = divisors(z.front());
  std::vector<Integer> dens = divisors(z.back());
  std::vector<Rational> candidates;
  for (const auto& num : nums)
    for (const auto& den : dens) {
      Rational c(num, den);
      c.canonicalize();
      candidates.push_back(c);
      candidates.push_back(-c);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (const auto& c : candidates) {
    int mult = 0;
    while (poly_eval(p, c) == 0) {
      Poly lin{-c, Rational(1)};
      p = poly_divmod(p, lin).first;
      ++mult;
      if (p.size() <= 1) break;
    }
    if (mult > 0) roots.emplace_back(c, mult);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace detail {

inline Integer poly_eval_z(const std::vector<Integer>& p, const Integer& x) {
  Integer v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

/// Finds a monic-integer-compatible factor of degree <= max_deg of the
/// primitive squarefree integer polynomial p via Kronecker interpolation,
/// or nullopt when p admits none (p irreducible if max_deg >= deg/2).
/// Intended for the small polynomials arising from desk-scale algebras.
inline std::optional<Poly> kronecker_factor(const std::vector<Integer>& p) {
  int n = static_cast<int>(p.size()) - 1;
  Poly pq(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) pq[i] = Rational(p[i]);
  long budget = 4000000;  // divisor-tuple cap; inputs here are tiny
  for (int d = 1; d <= n / 2; ++d) {
    std::vector<Integer> pts;
    std::vector<std::vector<Integer>> divs;
    Integer x = 0;
    while (static_cast<int>(pts.size()) < d + 1) {
      Integer v = poly_eval_z(p, x);
      if (v != 0) {
        pts.push_back(x);
        std::vector<Integer> dv = divisors(v);
        std::vector<Integer> all;
        for (const auto& e : dv) {
          all.push_back(e);
          all.push_back(-e);
        }
        divs.push_back(std::move(all));
      }
      if (x > 0)
        x = -x;  // 0, 1, -1, 2, -2, ...
      else
        x = 1 - x;
    }
    std::vector<std::size_t> idx(d + 1, 0);
    long tried = 0;
    while (true) {
      if (++tried > budget)
        throw error("factorization budget exceeded (input too large)");
      // Lagrange interpolation through (pts[i], divs[i][idx[i]])
      Poly cand;
      for (int i = 0; i <= d; ++i) {
        Poly li{Rational(1)};
        Rational denom = 1;
        for (int j = 0; j <= d; ++j) {
          if (i == j) continue;
          li = poly_mul(li, Poly{Rational(-pts[j]), Rational(1)});
          denom *= Rational(pts[i] - pts[j]);
        }
        li = poly_scale(li, Rational(divs[i][idx[i]]) / denom);
        cand = poly_add(cand, li);
      }
      if (poly_deg(cand) == d) {
        auto [q, r] = poly_divmod(pq, cand);
        if (r.empty()) return cand;
      }
      int k = 0;
      while (k <= d && ++idx[k] == divs[k].size()) {
        idx[k] = 0;
        ++k;
      }
      if (k > d) break;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// True iff p (degree >= 1) is irreducible over Q. Exact; uses rational-root
/// elimination plus Kronecker factor search, so keep degrees small (<= 8 in
/// this project).
inline bool poly_irreducible(const Poly& p_in) {
  Poly p = poly_trim(p_in);
  if (poly_deg(p) < 1) throw error("irreducibility of a constant");
  if (poly_deg(p) == 1) return true;
  if (!rational_roots(p).empty()) return false;
  if (poly_deg(p) <= 3) return true;  // no roots and degree <= 3
  return !detail::kronecker_factor(poly_primitive_integer(p)).has_value();
}

/// One nontrivial monic factor of p over Q, if any.
inline std::optional<Poly> poly_nontrivial_factor(const Poly& p_in) {
  Poly p = poly_trim(p_in);
  if (poly_deg(p) < 2) return std::nullopt;
  auto roots = rational_roots(p);
  if (!roots.empty()) return Poly{-roots[0].first, Rational(1)};
  if (poly_deg(p) <= 3) return std::nullopt;
  auto f = detail::kronecker_factor(poly_primitive_integer(p));
  if (!f) return std::nullopt;
  return poly_monic(*f);
}

}  // namespace voaforge

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace voaforge {

// All arithmetic in this library is exact. Scalars are arbitrary-precision
// rationals kept in lowest terms with positive denominator (GMP canonical
// form); there is no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;

/// Base class for all library errors.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical check failed (an identity does not hold, an input violates
/// a structural axiom, ...). Carries a human-readable witness.
struct check_error : error {
  explicit check_error(const std::string& what) : error(what) {}
};

/// Malformed input file or request.
struct parse_error : error {
  explicit parse_error(const std::string& what) : error(what) {}
};

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q". Exact; no decimal literals.
inline Rational rat_parse(const std::string& text) {
  if (text.empty()) throw parse_error("empty rational literal");
  if (text.find_first_not_of("+-/0123456789") != std::string::npos)
    throw parse_error("bad rational literal: '" + text + "'");
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw parse_error("bad rational literal: '" + text + "'");
  if (r.get_den() == 0) throw parse_error("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Floor of the square root of a nonnegative integer.
inline Integer isqrt_floor(const Integer& n) {
  if (n < 0) throw error("isqrt of negative integer");
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

inline Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw error("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace voaforge

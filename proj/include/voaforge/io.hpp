#pragma once

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "voaforge/models.hpp"

namespace voaforge {

// Insertion-ordered JSON keeps report output byte-stable.
using Json = nlohmann::ordered_json;

inline Json json_of(const Rational& r) { return rat_str(r); }

inline Rational rational_of(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return rat_parse(j.get<std::string>());
  throw parse_error("expected a rational (integer or \"p/q\" string)");
}

inline Json json_of(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(json_of(x));
  return out;
}

inline Vec vec_of(const Json& j) {
  if (!j.is_array()) throw parse_error("expected an array of rationals");
  Vec v;
  for (const auto& e : j) v.push_back(rational_of(e));
  return v;
}

inline Json json_of(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(json_of(m.row(i)));
  return out;
}

inline Matrix matrix_of(const Json& j) {
  if (!j.is_array()) throw parse_error("expected a matrix (array of arrays)");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_of(r));
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw parse_error("ragged matrix");
  if (rows.empty()) return Matrix(0, 0);
  return Matrix::from_rows(rows);
}

inline Json json_of(const Subspace& s) {
  Json out;
  out["ambient_dim"] = s.ambient_dim();
  out["dim"] = s.dim();
  out["basis"] = json_of(s.basis());
  return out;
}

inline Json json_of(const IntVec& v) {
  Json out = Json::array();
  for (long x : v) out.push_back(x);
  return out;
}

// ---- Leibniz algebra: {"dim": n, "bracket": [[i, j, [c...]], ...]},
// omitted pairs meaning zero bracket; indices are zero-based.

inline Json json_of(const LeibnizAlgebra& l) {
  Json out;
  out["dim"] = l.dim;
  Json entries = Json::array();
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = 0; j < l.dim; ++j)
      if (!is_zero_vec(l.bracket[i][j]))
        entries.push_back(Json::array({i, j, json_of(l.bracket[i][j])}));
  out["bracket"] = std::move(entries);
  return out;
}

inline LeibnizAlgebra leibniz_of(const Json& j) {
  if (!j.is_object() || !j.contains("dim"))
    throw parse_error("leibniz algebra: expected {\"dim\", \"bracket\"}");
  std::size_t n = j.at("dim").get<std::size_t>();
  LeibnizAlgebra l = LeibnizAlgebra::zero(n);
  if (j.contains("bracket")) {
    for (const auto& e : j.at("bracket")) {
      if (!e.is_array() || e.size() != 3)
        throw parse_error("leibniz bracket entry: expected [i, j, [c...]]");
      std::size_t a = e[0].get<std::size_t>(), b = e[1].get<std::size_t>();
      if (a >= n || b >= n) throw parse_error("leibniz bracket entry: index out of range");
      Vec c = vec_of(e[2]);
      if (c.size() != n) throw parse_error("leibniz bracket entry: wrong vector length");
      l.bracket[a][b] = std::move(c);
    }
  }
  return l;
}

// ---- Frobenius algebra: {"dim", "unit", "counit", "mult": [[i,j,[...]],...]}.

inline Json json_of(const FrobeniusAlgebra& a) {
  Json out;
  out["dim"] = a.dim;
  out["unit"] = json_of(a.unit);
  out["counit"] = json_of(a.counit);
  Json entries = Json::array();
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      if (!is_zero_vec(a.mult[i][j]))
        entries.push_back(Json::array({i, j, json_of(a.mult[i][j])}));
  out["mult"] = std::move(entries);
  return out;
}

inline FrobeniusAlgebra frobenius_of(const Json& j) {
  if (!j.is_object() || !j.contains("dim"))
    throw parse_error("algebra: expected {\"dim\", \"unit\", \"counit\", \"mult\"}");
  std::size_t n = j.at("dim").get<std::size_t>();
  FrobeniusAlgebra a = FrobeniusAlgebra::zero_product(n);
  a.unit = vec_of(j.at("unit"));
  a.counit = vec_of(j.at("counit"));
  if (a.unit.size() != n || a.counit.size() != n)
    throw parse_error("algebra: unit/counit length mismatch");
  for (const auto& e : j.at("mult")) {
    if (!e.is_array() || e.size() != 3)
      throw parse_error("algebra mult entry: expected [i, j, [c...]]");
    std::size_t x = e[0].get<std::size_t>(), y = e[1].get<std::size_t>();
    if (x >= n || y >= n) throw parse_error("algebra mult entry: index out of range");
    Vec c = vec_of(e[2]);
    if (c.size() != n) throw parse_error("algebra mult entry: wrong vector length");
    a.mult[x][y] = std::move(c);
  }
  return a;
}

// ---- Fock vectors: [{"heis": [[dir, mode], ...], "point": [...], "coeff": "p/q"}]
// with creation modes negative.

inline Json json_of(const FockVector& v) {
  Json out = Json::array();
  for (const auto& [s, c] : v.terms()) {
    Json term;
    Json heis = Json::array();
    for (const auto& [n, dir] : s.heis) heis.push_back(Json::array({dir, -n}));
    term["heis"] = std::move(heis);
    term["point"] = json_of(s.point);
    term["coeff"] = json_of(c);
    out.push_back(std::move(term));
  }
  return out;
}

inline FockVector fock_of(const Json& j, std::size_t rank) {
  if (!j.is_array()) throw parse_error("fock vector: expected an array of terms");
  FockVector v;
  for (const auto& term : j) {
    FockState s;
    if (!term.contains("point")) throw parse_error("fock term: missing point");
    for (const auto& x : term.at("point")) s.point.push_back(x.get<long>());
    if (s.point.size() != rank) throw parse_error("fock term: point length mismatch");
    if (term.contains("heis"))
      for (const auto& f : term.at("heis")) {
        if (!f.is_array() || f.size() != 2)
          throw parse_error("fock term: heis factor must be [dir, mode]");
        int dir = f[0].get<int>();
        int mode = f[1].get<int>();
        if (dir < 0 || dir >= static_cast<int>(rank))
          throw parse_error("fock term: direction out of range");
        if (mode >= 0) throw parse_error("fock term: creation mode must be negative");
        s = s.with_factor(-mode, dir);
      }
    Rational c = term.contains("coeff") ? rational_of(term.at("coeff")) : Rational(1);
    v.add_term(s, c);
  }
  return v;
}

// ---- Reports.

inline Json json_of(const NamedCheck& c) {
  Json out;
  out["name"] = c.name;
  out["pass"] = c.pass;
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

inline Json json_of(const DeRhamReport& r) {
  Json out;
  Json spec = Json::array();
  for (const auto& [lam, mult] : r.spectrum)
    spec.push_back(Json::array({lam, mult}));
  out["spectrum"] = std::move(spec);
  out["nu"] = r.nu;
  out["nonneg_integer_spectrum"] = r.nonneg_integer_spectrum;
  out["zero_space_is_unit_line"] = r.zero_space_is_unit_line;
  out["top_space_is_minimal_ideal"] = r.top_space_is_minimal_ideal;
  out["products_respect_grading"] = r.products_respect_grading;
  out["orthogonality"] = r.orthogonality_ok;
  out["perfect_pairing"] = r.perfect_pairing;
  out["pass"] = r.all_pass();
  return out;
}

inline Json json_of(const TrichotomyReport& r) {
  Json out;
  out["case"] = to_string(r.which);
  out["rad"] = json_of(r.rad);
  out["ann_t"] = json_of(r.ann_t);
  out["P"] = json_of(r.P);
  out["M"] = json_of(r.M);
  return out;
}

inline Json json_of(const TruncatedConformalDatum& d) {
  Json out;
  out["v0"] = json_of(d.v0);
  out["v1"] = json_of(d.v1);
  out["t"] = json_of(d.t);
  Json act0 = Json::array();
  for (std::size_t u = 0; u < d.dim1(); ++u)
    for (std::size_t a = 0; a < d.dim0(); ++a)
      if (!is_zero_vec(d.act0[u][a]))
        act0.push_back(Json::array({u, a, json_of(d.act0[u][a])}));
  out["act0"] = std::move(act0);
  Json pair1 = Json::array();
  for (std::size_t u = 0; u < d.dim1(); ++u)
    for (std::size_t v = 0; v < d.dim1(); ++v)
      if (!is_zero_vec(d.pair1[u][v]))
        pair1.push_back(Json::array({u, v, json_of(d.pair1[u][v])}));
  out["pair1"] = std::move(pair1);
  out["lminus1"] = json_of(d.lminus1);
  out["tminus1"] = json_of(d.tminus1);
  return out;
}

inline TruncatedConformalDatum datum_of(const Json& j) {
  TruncatedConformalDatum d;
  d.v0 = frobenius_of(j.at("v0"));
  d.v1 = leibniz_of(j.at("v1"));
  d.t = vec_of(j.at("t"));
  std::size_t n0 = d.v0.dim, n1 = d.v1.dim;
  if (d.t.size() != n0) throw parse_error("datum: t length mismatch");
  d.act0.assign(n1, std::vector<Vec>(n0, Vec(n0, Rational(0))));
  for (const auto& e : j.at("act0")) {
    std::size_t u = e[0].get<std::size_t>(), a = e[1].get<std::size_t>();
    if (u >= n1 || a >= n0) throw parse_error("datum act0: index out of range");
    d.act0[u][a] = vec_of(e[2]);
  }
  d.pair1.assign(n1, std::vector<Vec>(n1, Vec(n0, Rational(0))));
  for (const auto& e : j.at("pair1")) {
    std::size_t u = e[0].get<std::size_t>(), v = e[1].get<std::size_t>();
    if (u >= n1 || v >= n1) throw parse_error("datum pair1: index out of range");
    d.pair1[u][v] = vec_of(e[2]);
  }
  d.lminus1 = matrix_of(j.at("lminus1"));
  d.tminus1 = matrix_of(j.at("tminus1"));
  if (d.lminus1.rows() != n1 || d.lminus1.cols() != n0 ||
      d.tminus1.rows() != n1 || d.tminus1.cols() != n1)
    throw parse_error("datum: connecting map shape mismatch");
  return d;
}

// ---- Lattice/shift input: {"gram": [[ints]], "h": ["p/q", ...]}.

inline ShiftDatum shift_of(const Json& j) {
  if (!j.contains("gram") || !j.contains("h"))
    throw parse_error("shift input: expected keys \"gram\" and \"h\"");
  EvenLattice lat = EvenLattice::make(matrix_of(j.at("gram")));
  return ShiftDatum::make(lat, vec_of(j.at("h")));
}

// ---- Restricted TOML reader, enough for the lattice/shift input schema:
// top-level `key = value` lines, values being integers, "strings", booleans
// or (nested) arrays; # comments. Produces the same document shape as the
// JSON input path.

namespace detail {

struct TomlLexer {
  std::string text;
  std::size_t pos = 0;

  void skip_space(bool newlines) {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
        ++pos;
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip_space(true);
    return pos >= text.size();
  }

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  Json parse_value() {
    skip_space(true);
    if (pos >= text.size()) throw parse_error("toml: unexpected end of input");
    char c = text[pos];
    if (c == '[') {
      ++pos;
      Json arr = Json::array();
      skip_space(true);
      if (peek() == ']') {
        ++pos;
        return arr;
      }
      while (true) {
        arr.push_back(parse_value());
        skip_space(true);
        if (peek() == ',') {
          ++pos;
          skip_space(true);
          if (peek() == ']') {  // trailing comma
            ++pos;
            return arr;
          }
          continue;
        }
        if (peek() == ']') {
          ++pos;
          return arr;
        }
        throw parse_error("toml: expected ',' or ']' in array");
      }
    }
    if (c == '"') {
      ++pos;
      std::string s;
      while (pos < text.size() && text[pos] != '"') s += text[pos++];
      if (pos >= text.size()) throw parse_error("toml: unterminated string");
      ++pos;
      return Json(s);
    }
    if (text.compare(pos, 4, "true") == 0) {
      pos += 4;
      return Json(true);
    }
    if (text.compare(pos, 5, "false") == 0) {
      pos += 5;
      return Json(false);
    }
    // bare integer or rational literal like -3 or 1/2
    std::string tok;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '-' || text[pos] == '+' || text[pos] == '/'))
      tok += text[pos++];
    if (tok.empty()) throw parse_error(std::string("toml: unexpected character '") + c + "'");
    if (tok.find('/') != std::string::npos) return Json(tok);  // rational literal
    try {
      return Json(std::stol(tok));
    } catch (...) {
      throw parse_error("toml: bad integer '" + tok + "'");
    }
  }
};

}  // namespace detail

inline Json toml_parse(const std::string& text) {
  detail::TomlLexer lex{text};
  Json out = Json::object();
  while (!lex.eof()) {
    std::string key;
    while (lex.pos < lex.text.size()) {
      char c = lex.text[lex.pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
        key += c;
        ++lex.pos;
      } else {
        break;
      }
    }
    if (key.empty()) throw parse_error("toml: expected a key");
    lex.skip_space(false);
    if (lex.peek() != '=') throw parse_error("toml: expected '=' after key '" + key + "'");
    ++lex.pos;
    out[key] = lex.parse_value();
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Loads a lattice/shift input from JSON or TOML, picked by content.
inline Json load_structured(const std::string& path) {
  std::string text = read_file(path);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("invalid JSON in " + path);
    return j;
  }
  return toml_parse(text);
}

}  // namespace voaforge

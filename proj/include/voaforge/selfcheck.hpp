#pragma once

#include <random>

#include "voaforge/frobenius.hpp"
#include "voaforge/leibniz.hpp"

// Catalog of concrete algebra tables, independent brute-force oracles, and
// seeded random instance generators. The oracles deliberately avoid the
// algorithms they cross-check (Cartan criterion, trace forms): they work by
// ideal-closure search and explicit nilpotency of multiplication operators.

namespace voaforge::tables {

/// sl2 with Chevalley basis (e, f, h): [e,f]=h, [h,e]=2e, [h,f]=-2f.
inline LeibnizAlgebra sl2() {
  LeibnizAlgebra l = LeibnizAlgebra::zero(3);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, long c) {
    l.bracket[i][j][k] = rat(c);
  };
  set(0, 1, 2, 1);   // [e,f] = h
  set(1, 0, 2, -1);
  set(2, 0, 0, 2);   // [h,e] = 2e
  set(0, 2, 0, -2);
  set(2, 1, 1, -2);  // [h,f] = -2f
  set(1, 2, 1, 2);
  return l;
}

/// gl2 on the matrix-unit basis (E11, E12, E21, E22).
inline LeibnizAlgebra gl2() {
  LeibnizAlgebra l = LeibnizAlgebra::zero(4);
  auto idx = [](std::size_t r, std::size_t c) { return 2 * r + c; };
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t m = 0; m < 2; ++m) {
          // [E_ij, E_km] = d_jk E_im - d_mi E_kj
          Vec& b = l.bracket[idx(i, j)][idx(k, m)];
          if (j == k) b[idx(i, m)] += 1;
          if (m == i) b[idx(k, j)] -= 1;
        }
  return l;
}

/// Two-dimensional nonabelian Lie algebra [x,y] = y.
inline LeibnizAlgebra affine_line() {
  LeibnizAlgebra l = LeibnizAlgebra::zero(2);
  l.bracket[0][1][1] = 1;
  l.bracket[1][0][1] = -1;
  return l;
}

/// Heisenberg algebra [x,y] = z.
inline LeibnizAlgebra heisenberg3() {
  LeibnizAlgebra l = LeibnizAlgebra::zero(3);
  l.bracket[0][1][2] = 1;
  l.bracket[1][0][2] = -1;
  return l;
}

/// Non-Lie Leibniz toy: [e,e] = f, everything else zero.
inline LeibnizAlgebra square_toy() {
  LeibnizAlgebra l = LeibnizAlgebra::zero(2);
  l.bracket[0][0][1] = 1;
  return l;
}

inline LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
  LeibnizAlgebra l = LeibnizAlgebra::zero(a.dim + b.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        l.bracket[i][j][k] = a.bracket[i][j][k];
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      for (std::size_t k = 0; k < b.dim; ++k)
        l.bracket[a.dim + i][a.dim + j][a.dim + k] = b.bracket[i][j][k];
  return l;
}

/// sl2 semidirect a sum of irreducible modules (given by their dimensions),
/// the module part abelian. Module V(m) of dimension m+1 in the standard
/// basis: h v_j = (m-2j) v_j, f v_j = v_{j+1}, e v_j = j(m-j+1) v_{j-1}.
inline LeibnizAlgebra semidirect_sl2_module(const std::vector<std::size_t>& dims) {
  std::size_t md = 0;
  for (auto d : dims) md += d;
  LeibnizAlgebra l = LeibnizAlgebra::zero(3 + md);
  LeibnizAlgebra s = sl2();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) l.bracket[i][j][k] = s.bracket[i][j][k];
  std::size_t base = 3;
  for (auto dsz : dims) {
    long m = static_cast<long>(dsz) - 1;
    for (long j = 0; j <= m; ++j) {
      std::size_t v = base + static_cast<std::size_t>(j);
      // e action
      if (j >= 1)
        l.bracket[0][v][v - 1] = rat(j * (m - j + 1));
      // f action
      if (j < m) l.bracket[1][v][v + 1] = 1;
      // h action
      l.bracket[2][v][v] = rat(m - 2 * j);
      // right brackets [v, x] = -x.v
      if (j >= 1) l.bracket[v][0][v - 1] = rat(-j * (m - j + 1));
      if (j < m) l.bracket[v][1][v + 1] = -1;
      l.bracket[v][2][v] = rat(-(m - 2 * j));
    }
    base += dsz;
  }
  return l;
}

/// sl2 acting on the Heisenberg algebra: (x, y) is the standard module and
/// the center z is killed; the action is by derivations of [x,y] = z.
inline LeibnizAlgebra semidirect_sl2_heisenberg() {
  LeibnizAlgebra l = LeibnizAlgebra::zero(6);
  LeibnizAlgebra s = sl2();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) l.bracket[i][j][k] = s.bracket[i][j][k];
  std::size_t x = 3, y = 4, z = 5;
  l.bracket[x][y][z] = 1;
  l.bracket[y][x][z] = -1;
  auto act = [&](std::size_t g, std::size_t v, std::size_t w, long c) {
    l.bracket[g][v][w] = rat(c);
    l.bracket[v][g][w] = rat(-c);
  };
  act(0, y, x, 1);   // e: y -> x
  act(1, x, y, 1);   // f: x -> y
  act(2, x, x, 1);   // h: x -> x
  act(2, y, y, -1);  // h: y -> -y
  return l;
}

/// Commutative tables.

/// Q[x]/x^{k+1} on the basis 1, x, ..., x^k with counit picking the top
/// coefficient.
inline FrobeniusAlgebra truncated_polynomial(std::size_t k) {
  FrobeniusAlgebra a = FrobeniusAlgebra::zero_product(k + 1);
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = 0; j <= k; ++j)
      if (i + j <= k) a.mult[i][j][i + j] = 1;
  a.unit[0] = 1;
  a.counit[k] = 1;
  return a;
}

/// Q x Q on the idempotent basis, counit summing the coordinates.
inline FrobeniusAlgebra q_times_q() {
  FrobeniusAlgebra a = FrobeniusAlgebra::zero_product(2);
  a.mult[0][0][0] = 1;
  a.mult[1][1][1] = 1;
  a.unit = Vec{rat(1), rat(1)};
  a.counit = Vec{rat(1), rat(1)};
  return a;
}

/// Q[x,y]/(x^2, y^2) on the basis (1, x, y, xy), counit picking xy.
inline FrobeniusAlgebra two_nilpotents() {
  FrobeniusAlgebra a = FrobeniusAlgebra::zero_product(4);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
    a.mult[i][j][k] = 1;
    a.mult[j][i][k] = 1;
  };
  set(0, 0, 0);
  set(0, 1, 1);
  set(0, 2, 2);
  set(0, 3, 3);
  set(1, 2, 3);
  a.unit[0] = 1;
  a.counit[3] = 1;
  return a;
}

/// Q(sqrt(d)) as a 2-dim table on (1, s) with s^2 = d.
inline FrobeniusAlgebra quadratic_field(long d) {
  FrobeniusAlgebra a = FrobeniusAlgebra::zero_product(2);
  a.mult[0][0][0] = 1;
  a.mult[0][1][1] = 1;
  a.mult[1][0][1] = 1;
  a.mult[1][1][0] = rat(d);
  a.unit[0] = 1;
  a.counit = Vec{rat(1), rat(0)};  // trace-like functional
  return a;
}

inline FrobeniusAlgebra tensor_product(const FrobeniusAlgebra& a,
                                       const FrobeniusAlgebra& b) {
  FrobeniusAlgebra t = FrobeniusAlgebra::zero_product(a.dim * b.dim);
  auto idx = [&](std::size_t i, std::size_t j) { return i * b.dim + j; };
  for (std::size_t i1 = 0; i1 < a.dim; ++i1)
    for (std::size_t j1 = 0; j1 < b.dim; ++j1)
      for (std::size_t i2 = 0; i2 < a.dim; ++i2)
        for (std::size_t j2 = 0; j2 < b.dim; ++j2) {
          const Vec& ma = a.mult[i1][i2];
          const Vec& mb = b.mult[j1][j2];
          for (std::size_t k1 = 0; k1 < a.dim; ++k1)
            for (std::size_t k2 = 0; k2 < b.dim; ++k2)
              if (ma[k1] != 0 && mb[k2] != 0)
                t.mult[idx(i1, j1)][idx(i2, j2)][idx(k1, k2)] = ma[k1] * mb[k2];
        }
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j) {
      t.unit[idx(i, j)] = a.unit[i] * b.unit[j];
      t.counit[idx(i, j)] = a.counit[i] * b.counit[j];
    }
  return t;
}

inline FrobeniusAlgebra direct_product(const FrobeniusAlgebra& a,
                                       const FrobeniusAlgebra& b) {
  FrobeniusAlgebra p = FrobeniusAlgebra::zero_product(a.dim + b.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) p.mult[i][j][k] = a.mult[i][j][k];
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      for (std::size_t k = 0; k < b.dim; ++k)
        p.mult[a.dim + i][a.dim + j][a.dim + k] = b.mult[i][j][k];
  for (std::size_t i = 0; i < a.dim; ++i) {
    p.unit[i] = a.unit[i];
    p.counit[i] = a.counit[i];
  }
  for (std::size_t j = 0; j < b.dim; ++j) {
    p.unit[a.dim + j] = b.unit[j];
    p.counit[a.dim + j] = b.counit[j];
  }
  return p;
}

}  // namespace voaforge::tables

namespace voaforge::oracle {

/// Smallest two-sided ideal containing the seed.
inline Subspace ideal_closure(const LeibnizAlgebra& l, const Subspace& seed) {
  Subspace cur = seed;
  Subspace full = Subspace::full(l.dim);
  while (true) {
    Subspace next = sum(cur, sum(bracket_span(l, full, cur),
                                 bracket_span(l, cur, full)));
    if (next == cur) return cur;
    cur = next;
  }
}

/// Two-sided center {x : [x, g] = [g, x] = 0}.
inline Subspace center(const LeibnizAlgebra& l) {
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < l.dim; ++j) {
    Matrix left = l.ad_left(unit_vec(l.dim, j));
    Matrix right = l.ad_right(unit_vec(l.dim, j));
    for (std::size_t k = 0; k < l.dim; ++k) {
      rows.push_back(left.row(k));
      rows.push_back(right.row(k));
    }
  }
  return kernel(Matrix::from_rows(rows));
}

/// Brute-force maximal solvable ideal, by saturating over solvable ideal
/// closures of a seed family (basis vectors, pairwise combinations,
/// derived/lower-central members, the center, the Leibniz kernel, plus any
/// caller-provided hint vectors). Every candidate is certified from the
/// table alone: ideal closure, then derived-series solvability.
inline Subspace max_solvable_ideal(const LeibnizAlgebra& l,
                                   const std::vector<Vec>& hint_seeds = {}) {
  std::vector<Subspace> seeds;
  for (const auto& h : hint_seeds)
    seeds.push_back(Subspace::span(l.dim, {h}));
  seeds.push_back(center(l));
  for (std::size_t i = 0; i < l.dim; ++i)
    seeds.push_back(Subspace::span(l.dim, {unit_vec(l.dim, i)}));
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      seeds.push_back(Subspace::span(
          l.dim, {add(unit_vec(l.dim, i), unit_vec(l.dim, j))}));
      seeds.push_back(Subspace::span(
          l.dim, {sub(unit_vec(l.dim, i), unit_vec(l.dim, j))}));
    }
  for (const auto& s : derived_series(l)) seeds.push_back(s);
  for (const auto& s : lower_central_series(l)) seeds.push_back(s);
  seeds.push_back(leibniz_kernel(l));

  Subspace r = Subspace::zero(l.dim);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& s : seeds) {
      Subspace cand = ideal_closure(l, sum(r, s));
      if (cand == r) continue;
      if (subspace_is_solvable(l, cand)) {
        r = cand;
        grew = true;
      }
    }
  }
  return r;
}

/// Nilpotency of an element of a commutative algebra: the multiplication
/// operator to the dim-th power vanishes.
inline bool element_is_nilpotent(const FrobeniusAlgebra& a, const Vec& x) {
  Matrix m = a.mult_matrix(x);
  Matrix p = Matrix::identity(a.dim);
  for (std::size_t k = 0; k < a.dim; ++k) p = p * m;
  return p.is_zero();
}

}  // namespace voaforge::oracle

namespace voaforge::gen {

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Random unimodular integer matrix (product of elementary unitriangular
/// operations), used to hide the construction basis of generated tables.
inline Matrix random_unimodular(Rng& rng, std::size_t n, int ops = -1) {
  Matrix m = Matrix::identity(n);
  if (ops < 0) ops = static_cast<int>(2 * n);
  for (int t = 0; t < ops; ++t) {
    std::size_t i = static_cast<std::size_t>(rand_int(rng, 0, long(n) - 1));
    std::size_t j = static_cast<std::size_t>(rand_int(rng, 0, long(n) - 1));
    if (i == j) continue;
    Rational c = rat(rand_int(rng, -2, 2));
    for (std::size_t k = 0; k < n; ++k) m(i, k) += c * m(j, k);
  }
  return m;
}

/// Conjugates a bracket table by an invertible p: new basis f_i = p e_i.
inline LeibnizAlgebra change_basis(const LeibnizAlgebra& l, const Matrix& p) {
  auto pinv = inverse(p);
  if (!pinv) throw error("change_basis: singular matrix");
  LeibnizAlgebra out = LeibnizAlgebra::zero(l.dim);
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = 0; j < l.dim; ++j)
      out.bracket[i][j] = pinv->apply(l.bracket_vec(p.col(i), p.col(j)));
  return out;
}

inline Subspace map_subspace(const Subspace& s, const Matrix& pinv) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < s.dim(); ++i)
    rows.push_back(pinv.apply(s.basis_vector(i)));
  return Subspace::span(s.ambient_dim(), rows);
}

struct LieInstance {
  LeibnizAlgebra algebra;
  Subspace known_radical;
  std::vector<Vec> radical_hints;  // random elements of the known radical,
                                   // seeds for the brute-force oracle
};

/// Random Lie (or Leibniz) table with radical known by construction:
/// a semisimple part from the catalog semidirect a solvable part, scrambled
/// by a random basis change.
inline LieInstance random_lie_instance(Rng& rng, std::size_t max_dim = 5) {
  using namespace tables;
  int kind = static_cast<int>(rand_int(rng, 0, 5));
  LeibnizAlgebra base;
  std::size_t rad_dim = 0;  // radical = span of the last rad_dim basis vectors
  switch (kind) {
    case 0:  // purely solvable
      switch (rand_int(rng, 0, 3)) {
        case 0: base = LeibnizAlgebra::zero(1 + rand_int(rng, 0, 3)); break;
        case 1: base = affine_line(); break;
        case 2: base = heisenberg3(); break;
        default: base = square_toy(); break;
      }
      rad_dim = base.dim;
      break;
    case 1:  // semisimple
      base = sl2();
      rad_dim = 0;
      break;
    case 2: {  // sl2 + abelian module, possibly trivial
      std::vector<std::size_t> dims;
      std::size_t budget = max_dim - 3;
      while (budget > 0) {
        std::size_t d = static_cast<std::size_t>(rand_int(rng, 1, long(budget)));
        dims.push_back(d);
        budget -= d;
        if (rand_int(rng, 0, 1) == 0) break;
      }
      base = semidirect_sl2_module(dims);
      rad_dim = base.dim - 3;
      break;
    }
    case 3:  // sl2 + affine line, zero action
      base = direct_sum(sl2(), affine_line());
      rad_dim = 2;
      break;
    case 4:  // sl2 + Leibniz toy, zero action
      base = direct_sum(sl2(), square_toy());
      rad_dim = 2;
      break;
    default:  // solvable + solvable
      base = direct_sum(affine_line(), heisenberg3());
      rad_dim = base.dim;
      break;
  }
  std::vector<Vec> rad_rows;
  for (std::size_t i = 0; i < rad_dim; ++i)
    rad_rows.push_back(unit_vec(base.dim, base.dim - rad_dim + i));
  Matrix p = random_unimodular(rng, base.dim);
  auto pinv = inverse(p);
  LieInstance inst;
  inst.algebra = change_basis(base, p);
  // known radical in the new coordinates: f-coords of v are pinv * v
  std::vector<Vec> mapped;
  for (const auto& r : rad_rows) mapped.push_back(pinv->apply(r));
  inst.known_radical = Subspace::span(base.dim, mapped);
  for (int t = 0; t < 3 && !mapped.empty(); ++t) {
    Vec h(base.dim, Rational(0));
    for (const auto& r : mapped) h = add(h, scaled(r, rat(rand_int(rng, -2, 2))));
    if (!is_zero_vec(h)) inst.radical_hints.push_back(h);
  }
  return inst;
}

struct CommutativeInstance {
  FrobeniusAlgebra algebra;
  Subspace known_radical;
};

/// Random commutative table assembled from local pieces and copies of Q,
/// scrambled by a random basis change. The radical is known by construction.
inline CommutativeInstance random_commutative_instance(Rng& rng,
                                                       std::size_t max_dim = 6) {
  using namespace tables;
  FrobeniusAlgebra a;
  std::vector<std::size_t> nilpotent_indices;
  std::size_t used = 0;
  bool first = true;
  while (used < max_dim) {
    FrobeniusAlgebra piece;
    std::vector<std::size_t> local_nilp;
    switch (rand_int(rng, 0, 3)) {
      case 0:
        piece = truncated_polynomial(
            static_cast<std::size_t>(rand_int(rng, 1, 3)));
        for (std::size_t i = 1; i < piece.dim; ++i) local_nilp.push_back(i);
        break;
      case 1:
        piece = two_nilpotents();
        local_nilp = {1, 2, 3};
        break;
      default:
        piece = truncated_polynomial(0);  // a copy of Q
        break;
    }
    if (used + piece.dim > max_dim) break;
    if (first) {
      a = piece;
      for (auto i : local_nilp) nilpotent_indices.push_back(i);
      first = false;
    } else {
      std::size_t off = a.dim;
      a = direct_product(a, piece);
      for (auto i : local_nilp) nilpotent_indices.push_back(off + i);
    }
    used += piece.dim;
    if (rand_int(rng, 0, 2) == 0) break;
  }
  if (first) a = truncated_polynomial(1), nilpotent_indices = {1};
  Matrix p = random_unimodular(rng, a.dim);
  auto pinv = inverse(p);
  CommutativeInstance inst;
  // change of basis for a commutative table, same transport as for brackets
  FrobeniusAlgebra out = FrobeniusAlgebra::zero_product(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      out.mult[i][j] = pinv->apply(a.mult_vec(p.col(i), p.col(j)));
  out.unit = pinv->apply(a.unit);
  for (std::size_t i = 0; i < a.dim; ++i) out.counit[i] = dot(a.counit, p.col(i));
  inst.algebra = out;
  std::vector<Vec> rad_rows;
  for (auto i : nilpotent_indices)
    rad_rows.push_back(pinv->apply(unit_vec(a.dim, i)));
  inst.known_radical = Subspace::span(a.dim, rad_rows);
  return inst;
}

/// Levi test instances: semidirect products with known Levi dimension.
struct LeviInstance {
  LeibnizAlgebra algebra;
  std::size_t levi_dim;
};

inline LeviInstance random_levi_instance(Rng& rng) {
  using namespace tables;
  LeibnizAlgebra base;
  switch (rand_int(rng, 0, 3)) {
    case 0:
      base = semidirect_sl2_module({static_cast<std::size_t>(rand_int(rng, 1, 3))});
      break;
    case 1:
      base = semidirect_sl2_heisenberg();
      break;
    case 2:
      base = direct_sum(sl2(), heisenberg3());
      break;
    default:
      base = direct_sum(semidirect_sl2_module({2}), square_toy());
      break;
  }
  LeviInstance inst;
  inst.algebra = change_basis(base, random_unimodular(rng, base.dim));
  inst.levi_dim = 3;
  return inst;
}

}  // namespace voaforge::gen

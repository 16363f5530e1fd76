#pragma once

#include <map>
#include <tuple>

#include "voaforge/lattice.hpp"

namespace voaforge {

/// Basis state of the lattice Fock space M(1) (x) Q[L]: a multiset of
/// Heisenberg creation factors e_dir(-n) applied to the group-algebra
/// element e^point. Factors are kept sorted by (n, dir).
struct FockState {
  std::vector<std::pair<int, int>> heis;  // (n, dir) with n >= 1
  IntVec point;

  static FockState exponential(IntVec beta) {
    FockState s;
    s.point = std::move(beta);
    return s;
  }

  static FockState vacuum(std::size_t rank) {
    return exponential(IntVec(rank, 0));
  }

  FockState with_factor(int n, int dir) const {
    FockState s = *this;
    auto it = std::lower_bound(s.heis.begin(), s.heis.end(), std::make_pair(n, dir));
    s.heis.insert(it, {n, dir});
    return s;
  }

  FockState without_factor(std::size_t idx) const {
    FockState s = *this;
    s.heis.erase(s.heis.begin() + static_cast<long>(idx));
    return s;
  }

  int heis_degree() const {
    int d = 0;
    for (const auto& [n, dir] : heis) d += n;
    return d;
  }

  int max_mode() const {
    int m = 0;
    for (const auto& [n, dir] : heis) m = std::max(m, n);
    return m;
  }

  auto operator<=>(const FockState&) const = default;
};

/// Finite exact-rational combination of Fock states. Zero coefficients are
/// never stored.
class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(const FockState& s, const Rational& c = Rational(1)) {
    if (c != 0) terms_[s] = c;
  }

  static FockVector zero() { return FockVector(); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<FockState, Rational>& terms() const { return terms_; }

  void add_term(const FockState& s, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(s, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  FockVector& operator+=(const FockVector& o) {
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
  }

  friend FockVector operator+(FockVector a, const FockVector& b) {
    a += b;
    return a;
  }

  friend FockVector operator-(FockVector a, const FockVector& b) {
    a += b * Rational(-1);
    return a;
  }

  FockVector operator*(const Rational& c) const {
    FockVector out;
    if (c == 0) return out;
    for (const auto& [s, cc] : terms_) out.terms_[s] = cc * c;
    return out;
  }

  Rational coeff(const FockState& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool operator==(const FockVector& o) const { return terms_ == o.terms_; }

  int max_mode() const {
    int m = 0;
    for (const auto& [s, c] : terms_) m = std::max(m, s.max_mode());
    return m;
  }

 private:
  std::map<FockState, Rational> terms_;
};

inline Rational binom(long p, long i) {
  Rational r = 1;
  for (long t = 0; t < i; ++t) r *= Rational(p - t) / Rational(t + 1);
  return r;
}

/// A basis state of a given shifted weight with its bigrading.
struct GradedState {
  FockState state;
  Rational unshifted_weight;  // eigenvalue of the unshifted degree operator
  Rational charge;            // eigenvalue of h(0)
};

/// Virasoro data: the quadratic Heisenberg vector, the shift, and the shifted
/// conformal vector omega_h = omega' + h(-2)1.
struct VirasoroDatum {
  FockVector omega_prime;
  Vec shift_h;
  FockVector omega_h;
};

enum class Conformal { unshifted, shifted };

/// Exact mode calculus over a fixed even lattice. Caches the composite-state
/// recursion; one context per computation session.
class FockContext {
 public:
  FockContext(const EvenLattice& lattice, const Cocycle& eps)
      : lattice_(lattice), eps_(eps) {}

  const EvenLattice& lattice() const { return lattice_; }
  std::size_t rank() const { return lattice_.rank; }

  Rational unshifted_weight(const FockState& s) const {
    return Rational(s.heis_degree()) + lattice_.norm(s.point) / 2;
  }

  Rational shifted_weight(const FockState& s, const Vec& h) const {
    return unshifted_weight(s) - lattice_.inner(s.point, h);
  }

  /// gamma(n): creation for n < 0, the charge (gamma, beta) for n = 0,
  /// contraction with multiplier n (gamma, dir) for n > 0.
  FockVector heis_mode(const Vec& gamma, int n, const FockVector& v) const {
    if (gamma.size() != rank()) throw error("heis_mode: direction length");
    FockVector out;
    for (const auto& [s, c] : v.terms()) {
      if (n < 0) {
        for (std::size_t i = 0; i < rank(); ++i)
          if (gamma[i] != 0)
            out.add_term(s.with_factor(-n, static_cast<int>(i)), c * gamma[i]);
      } else if (n == 0) {
        Rational charge = lattice_.inner(s.point, gamma);
        out.add_term(s, c * charge);
      } else {
        annihilate(gamma, n, s, c, out);
      }
    }
    return out;
  }

  /// e^alpha(m): exact coefficient extraction from the exponential vertex
  /// operator. The annihilation series is finite on each state and the
  /// creation series is truncated exactly by the required z-power.
  FockVector exp_mode(const IntVec& alpha, int m, const FockVector& v) const {
    if (alpha.size() != rank()) throw error("exp_mode: point length");
    Vec alpha_q = to_rational_vec(alpha);
    FockVector out;
    for (const auto& [s, c] : v.terms()) {
      // e_alpha z^alpha: cocycle sign, z-shift by (alpha, beta), move point
      Rational p0 = lattice_.inner(alpha, s.point);
      if (!is_integer(p0)) throw error("exp_mode: non-integer pairing");
      long p0i = p0.get_num().get_si();
      Rational sgn = rat(eps_.sign(alpha, s.point));
      FockState shifted = s;
      for (std::size_t i = 0; i < rank(); ++i) shifted.point[i] += alpha[i];
      // annihilation exponential exp(-sum_n alpha(n)/n z^-n): q -> component
      std::map<int, FockVector> byq;
      byq[0] = FockVector(shifted, c * sgn);
      for (int n = 1; n <= s.max_mode(); ++n) {
        std::map<int, FockVector> next;
        for (const auto& [q, vec] : byq) {
          FockVector w = vec;
          next[q] += w;
          Rational coeff = 1;
          for (int t = 1; !w.is_zero(); ++t) {
            FockVector w2;
            for (const auto& [ws, wc] : w.terms()) annihilate(alpha_q, n, ws, wc, w2);
            w = w2;
            if (w.is_zero()) break;
            coeff *= Rational(-1) / Rational(n) / Rational(t);
            next[q + n * t] += w * coeff;
          }
        }
        byq = std::move(next);
      }
      // creation exponential exp(sum_n alpha(-n)/n z^n): pick the z-power
      // that lands on z^{-m-1}
      for (const auto& [q, vec] : byq) {
        long k = -static_cast<long>(m) - 1 - p0i + q;
        if (k < 0 || vec.is_zero()) continue;
        out += creation_series_term(alpha_q, static_cast<int>(k), vec);
      }
    }
    return out;
  }

  /// Mode of an arbitrary state, by the iterate (associativity) recursion:
  /// peeling one creation factor u(-n0) off a = u(-n0)b,
  ///   (u(-n0)b)(m) = sum_i (-1)^i C(-n0,i) u(-n0-i) b(m+i)
  ///                - (-1)^{n0} sum_i (-1)^i C(-n0,i) b(-n0+m-i) u(i).
  /// Sums terminate by the grading bound and by annihilation.
  FockVector iterate_mode(const FockVector& a, int m, const FockVector& v) {
    FockVector out;
    for (const auto& [as, ac] : a.terms())
      for (const auto& [vs, vc] : v.terms())
        out += state_mode(as, m, vs) * (ac * vc);
    return out;
  }

  /// The quadratic Heisenberg conformal vector and its shift by h.
  VirasoroDatum make_virasoro(const Vec& h) const {
    if (h.size() != rank()) throw error("make_virasoro: shift length");
    VirasoroDatum vd;
    auto ginv = inverse(lattice_.gram);
    if (!ginv) throw error("make_virasoro: singular Gram matrix");
    FockState vac = FockState::vacuum(rank());
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        Rational c = (*ginv)(i, j);
        if (c == 0) continue;
        FockState s = vac.with_factor(1, static_cast<int>(i))
                          .with_factor(1, static_cast<int>(j));
        vd.omega_prime.add_term(s, i == j ? c / 2 : c);
      }
    vd.shift_h = h;
    vd.omega_h = vd.omega_prime;
    for (std::size_t i = 0; i < rank(); ++i)
      if (h[i] != 0)
        vd.omega_h.add_term(vac.with_factor(2, static_cast<int>(i)), h[i]);
    return vd;
  }

  /// L'(n) or L_h(n) = L'(n) - (n+1) h(n).
  FockVector virasoro_mode(const VirasoroDatum& vd, int n, const FockVector& v,
                           Conformal which) {
    FockVector lw = iterate_mode(vd.omega_prime, n + 1, v);
    if (which == Conformal::unshifted) return lw;
    return lw - heis_mode(vd.shift_h, n, v) * Rational(n + 1);
  }

  /// Same operator computed directly from omega_h; used to cross-check the
  /// displayed mode formula.
  FockVector virasoro_mode_direct(const VirasoroDatum& vd, int n,
                                  const FockVector& v) {
    return iterate_mode(vd.omega_h, n + 1, v);
  }

  /// All basis states of shifted weight n, sorted, with their bigradings.
  std::vector<GradedState> weight_space(const ShiftDatum& s, long n) const {
    if (!(s.lattice.gram == lattice_.gram))
      throw error("weight_space: foreign shift datum");
    std::vector<GradedState> out;
    if (n < 0) return out;
    Rational hh = lattice_.norm(s.h);
    for (const auto& beta : short_vectors(lattice_, s.h, 2 * Rational(n) + hh)) {
      Rational base = lattice_.norm(beta) / 2 - lattice_.inner(beta, s.h);
      Rational kq = Rational(n) - base;
      if (kq < 0 || !is_integer(kq)) continue;
      int k = static_cast<int>(kq.get_num().get_si());
      for (const auto& part : colored_partitions(k)) {
        FockState st;
        st.point = beta;
        st.heis = part;
        GradedState g;
        g.unshifted_weight = unshifted_weight(st);
        g.charge = lattice_.inner(st.point, s.h);
        g.state = std::move(st);
        out.push_back(std::move(g));
      }
    }
    std::sort(out.begin(), out.end(), [](const GradedState& a, const GradedState& b) {
      return std::tie(a.state.point, a.state.heis) <
             std::tie(b.state.point, b.state.heis);
    });
    return out;
  }

  /// dim V_n for n = 0..up_to from the generating function
  /// sum_beta q^{(beta,beta)/2 - (h,beta)} / prod_k (1-q^k)^rank.
  std::vector<long> graded_dimension_series(const ShiftDatum& s, long up_to) const {
    std::vector<long> part(up_to + 1, 0);
    part[0] = 1;
    for (long k = 1; k <= up_to; ++k)
      for (std::size_t copy = 0; copy < rank(); ++copy)
        for (long i = k; i <= up_to; ++i) part[i] += part[i - k];
    std::vector<long> theta(up_to + 1, 0);
    Rational hh = lattice_.norm(s.h);
    for (const auto& beta : short_vectors(lattice_, s.h, 2 * Rational(up_to) + hh)) {
      Rational w = lattice_.norm(beta) / 2 - lattice_.inner(beta, s.h);
      if (w < 0 || !is_integer(w) || w > up_to) continue;
      ++theta[w.get_num().get_si()];
    }
    std::vector<long> dims(up_to + 1, 0);
    for (long i = 0; i <= up_to; ++i)
      for (long j = 0; j + i <= up_to; ++j) dims[i + j] += theta[i] * part[j];
    return dims;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  /// Pure contraction part of gamma(n) (n >= 1) on a single state.
  void annihilate(const Vec& gamma, int n, const FockState& s, const Rational& c,
                  FockVector& out) const {
    for (std::size_t idx = 0; idx < s.heis.size(); ++idx) {
      const auto& [fn, fdir] = s.heis[idx];
      if (fn != n) continue;
      Rational pair = 0;  // (gamma, e_dir)
      for (std::size_t i = 0; i < rank(); ++i)
        if (gamma[i] != 0) pair += gamma[i] * lattice_.gram(i, fdir);
      if (pair == 0) continue;
      out.add_term(s.without_factor(idx), c * pair * n);
    }
  }

  /// P_k(alpha) applied to vec, with k P_k = sum_{n<=k} alpha(-n) P_{k-n}.
  FockVector creation_series_term(const Vec& alpha, int k, const FockVector& vec) const {
    std::vector<FockVector> w(k + 1);
    w[0] = vec;
    for (int kk = 1; kk <= k; ++kk) {
      FockVector acc;
      for (int n = 1; n <= kk; ++n) {
        // alpha(-n) applied to w[kk-n]
        for (const auto& [s, c] : w[kk - n].terms())
          for (std::size_t i = 0; i < rank(); ++i)
            if (alpha[i] != 0)
              acc.add_term(s.with_factor(n, static_cast<int>(i)), c * alpha[i]);
      }
      w[kk] = acc * (Rational(1) / Rational(kk));
    }
    return w[k];
  }

  FockVector state_mode(const FockState& a, int m, const FockState& v) {
    auto key = std::make_tuple(a, m, v);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (++depth_ > kMaxDepth) {
      --depth_;
      throw error("iterate recursion depth exceeded");  // cannot happen on graded inputs
    }

    FockVector result;
    if (a.heis.empty()) {
      bool is_vac = true;
      for (long x : a.point)
        if (x != 0) is_vac = false;
      if (is_vac) {
        if (m == -1) result = FockVector(v);
      } else {
        result = exp_mode(a.point, m, FockVector(v));
      }
    } else {
      auto [n0, dir] = a.heis.front();
      FockState b = a.without_factor(0);
      Vec gamma = unit_vec(rank(), static_cast<std::size_t>(dir));
      long p = -n0;
      Rational wt_b = unshifted_weight(b);
      Rational wt_v = unshifted_weight(v);
      // first sum: u(p-i) (b(m+i) v); b(k)w = 0 once k exceeds the grading bound
      Rational bound = wt_b + wt_v - 1 - m;
      if (bound >= 0) {
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), bound.get_num().get_mpz_t(),
                   bound.get_den().get_mpz_t());
        long imax = fl.get_si();
        for (long i = 0; i <= imax; ++i) {
          FockVector inner = state_mode(b, m + static_cast<int>(i), v);
          if (inner.is_zero()) continue;
          Rational c = binom(p, i) * (i % 2 == 0 ? 1 : -1);
          result += heis_mode(gamma, static_cast<int>(p - i), inner) * c;
        }
      }
      // second sum: -(-1)^p b(p+m-i) (u(i) v), finite by annihilation
      int sign_p = (n0 % 2 == 0) ? 1 : -1;  // (-1)^p with p = -n0
      FockVector vvec(v);
      int imax2 = v.max_mode();
      for (int i = 0; i <= imax2; ++i) {
        FockVector ui = heis_mode(gamma, i, vvec);
        if (ui.is_zero()) continue;
        Rational c = binom(p, i) * (i % 2 == 0 ? 1 : -1) * sign_p * Rational(-1);
        FockVector term;
        for (const auto& [ws, wc] : ui.terms())
          term += state_mode(b, static_cast<int>(p) + m - i, ws) * wc;
        result += term * c;
      }
    }
    --depth_;
    memo_.emplace(std::move(key), result);
    return result;
  }

  /// All sorted multisets of (n, dir) factors with total n equal to k.
  std::vector<std::vector<std::pair<int, int>>> colored_partitions(int k) const {
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> cur;
    auto rec = [&](auto&& self, int remaining, std::pair<int, int> min_part) -> void {
      if (remaining == 0) {
        out.push_back(cur);
        return;
      }
      for (int n = min_part.first; n <= remaining; ++n)
        for (int d = (n == min_part.first ? min_part.second : 0);
             d < static_cast<int>(rank()); ++d) {
          cur.emplace_back(n, d);
          self(self, remaining - n, {n, d});
          cur.pop_back();
        }
    };
    rec(rec, k, {1, 0});
    return out;
  }

  static constexpr int kMaxDepth = 4096;

  EvenLattice lattice_;
  Cocycle eps_;
  int depth_ = 0;
  std::map<std::tuple<FockState, int, FockState>, FockVector> memo_;
};

}  // namespace voaforge

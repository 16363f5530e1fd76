#pragma once

#include "voaforge/io.hpp"
#include "voaforge/selfcheck.hpp"

namespace voaforge {

constexpr const char* kSchemaTag = "voa-forge/1";

/// Full report for the finite shifted affine-sl2 model.
inline Json full_report(const Sl2ShiftModel& m) {
  Json out;
  out["schema"] = kSchemaTag;
  out["kind"] = "sl2-shift";
  out["level"] = m.level;
  out["v0_dim"] = m.v0.dim;
  out["v1_dim"] = m.v1_labels.size();
  out["v1_labels"] = m.v1_labels;
  out["de_rham"] = json_of(m.de_rham);
  bool selfdual = check_sl2_selfdual(m);
  out["self_dual"] = selfdual;
  out["lowering_map"] = json_of(m.lh1);
  // anti-diagonal pairing (x^p, x^q) = [p + q = k]
  bool pairing_ok = true;
  for (std::size_t p = 0; p < m.v0.dim; ++p)
    for (std::size_t q = 0; q < m.v0.dim; ++q) {
      Rational expect = (p + q == m.v0.dim - 1) ? Rational(1) : Rational(0);
      if (m.v0.form(unit_vec(m.v0.dim, p), unit_vec(m.v0.dim, q)) != expect)
        pairing_ok = false;
    }
  out["antidiagonal_pairing"] = pairing_ok;
  out["pass"] = m.de_rham.all_pass() && selfdual && pairing_ok;
  return out;
}

/// Full report for a computed lattice-shift bundle: the sphere A, the
/// degree-zero table, the grading checks, the degree-one structure theory,
/// and the identity suites.
inline Json full_report(const LatticeShiftBundle& b, long weight_cap = 4) {
  Json out;
  out["schema"] = kSchemaTag;
  out["kind"] = "lattice-shift";
  out["gram"] = json_of(b.shift.lattice.gram);
  out["h"] = json_of(b.shift.h);
  Json pts = Json::array();
  for (const auto& p : b.v0.points) pts.push_back(json_of(p));
  out["A"] = std::move(pts);
  out["nu"] = json_of(b.nu);
  out["v0_dim"] = b.v0.algebra.dim;
  out["v1_dim"] = b.v1_states.size();
  out["v0_table"] = json_of(b.v0.algebra);
  out["central_charge"] = Json{{"unshifted", json_of(b.central_charge_unshifted)},
                               {"shifted", json_of(b.central_charge_shifted)}};

  DeRhamReport dr = de_rham_check(b.v0.algebra, b.v0.grading);
  out["de_rham"] = json_of(dr);

  FockContext ctx(b.shift.lattice, b.eps);
  auto dims = ctx.graded_dimension_series(b.shift, weight_cap);
  bool dims_ok = true;
  Json dims_json = Json::array();
  for (long n = 0; n < static_cast<long>(dims.size()); ++n) {
    dims_json.push_back(dims[static_cast<std::size_t>(n)]);
    if (dims[static_cast<std::size_t>(n)] !=
        static_cast<long>(ctx.weight_space(b.shift, n).size()))
      dims_ok = false;
  }
  out["graded_dims"] = std::move(dims_json);
  out["graded_dims_match_state_counts"] = dims_ok;

  Json fock_checks = Json::array();
  bool fock_ok = true;
  for (const auto& c : b.fock_checks) {
    fock_checks.push_back(json_of(c));
    fock_ok = fock_ok && c.pass;
  }
  out["fock_checks"] = std::move(fock_checks);

  bool axioms_ok = true;
  Json axioms = Json::array();
  for (const auto& c : verify_axioms(b.datum)) {
    axioms.push_back(json_of(c));
    axioms_ok = axioms_ok && c.pass;
  }
  out["axiom_checks"] = std::move(axioms);

  bool structure_ok = true;
  if (b.datum.dim0() >= 2) {
    TrichotomyReport tri = classify_trichotomy(b.datum);
    out["trichotomy"] = json_of(tri);
    ShiftedStructureReport srep =
        shifted_structure_check(b.datum, b.lprime_weights, b.w1_reductive);
    Json sj;
    sj["higher_dim"] = srep.higher.dim();
    sj["higher_in_ann"] = srep.higher_in_ann;
    sj["higher_in_rad"] = srep.higher_in_rad;
    sj["rad_equals_ann"] = srep.rad_equals_ann;
    sj["chain_equalities"] = srep.chain_equalities;
    sj["nilpotent_radical_equals_rad"] = srep.nilp_equals_rad;
    out["shifted_structure"] = std::move(sj);
    structure_ok = srep.higher_in_ann && srep.higher_in_rad &&
                   srep.rad_equals_ann &&
                   (!b.w1_reductive || (srep.chain_equalities && srep.nilp_equals_rad));
  } else {
    ClassicalReport rep = classical_analysis(b.datum);
    Json cj;
    cj["gram"] = json_of(rep.gram);
    cj["rad_dim"] = rep.rad.dim();
    cj["pair_in_unit_line"] = rep.pair_in_unit_line;
    out["classical"] = std::move(cj);
    structure_ok = rep.pair_in_unit_line;
  }

  RadicalTower tower = radical_tower(b.datum.v1);
  Json tj;
  tj["kernel_dim"] = tower.kernel_N.dim();
  tj["annihilator_dim"] = tower.annihilator_F.dim();
  tj["nilpotent_radical_dim"] = tower.nilpotent_N1.dim();
  tj["nil_radical_dim"] = tower.nil_N0.dim();
  tj["solvable_radical_dim"] = tower.solvable_B.dim();
  tj["levi_dim"] = levi_subalgebra(b.datum.v1).dim();
  out["v1_structure"] = std::move(tj);

  out["pass"] = dr.all_pass() && dims_ok && fock_ok && axioms_ok && structure_ok;
  return out;
}

/// Report for an abstract Leibniz table.
inline Json analyze_leibniz_report(const LeibnizAlgebra& l) {
  Json out;
  out["schema"] = kSchemaTag;
  out["kind"] = "analyze-leibniz";
  out["dim"] = l.dim;
  auto violation = leibniz_violation(l);
  out["leibniz_identity"] = !violation.has_value();
  if (violation) {
    auto [a, b, c] = *violation;
    out["violating_triple"] = Json::array({a, b, c});
    out["pass"] = false;
    return out;
  }
  out["is_lie"] = is_antisymmetric(l);
  RadicalTower t = radical_tower(l);
  out["kernel"] = json_of(t.kernel_N);
  out["kernel_annihilator"] = json_of(t.annihilator_F);
  out["solvable_radical"] = json_of(t.solvable_B);
  out["nilpotent_radical"] = json_of(t.nilpotent_N1);
  out["nil_radical"] = json_of(t.nil_N0);
  Subspace s = levi_subalgebra(l);
  out["levi"] = json_of(s);
  out["is_solvable"] = is_solvable(l);
  out["is_nilpotent"] = is_nilpotent(l);
  out["derived_series_dims"] = Json::array();
  for (const auto& d : derived_series(l)) out["derived_series_dims"].push_back(d.dim());
  out["lower_central_series_dims"] = Json::array();
  for (const auto& d : lower_central_series(l))
    out["lower_central_series_dims"].push_back(d.dim());
  out["pass"] = true;
  return out;
}

/// Report for an abstract commutative table with optional grading.
inline Json analyze_frobenius_report(const FrobeniusAlgebra& a,
                                     const std::optional<GradingOperator>& grading) {
  Json out;
  out["schema"] = kSchemaTag;
  out["kind"] = "analyze-frobenius";
  out["dim"] = a.dim;
  bool commut = is_commutative(a), assoc = is_associative(a), unit = unit_law_holds(a);
  bool nondeg = commut && assoc && unit && rank(a.gram()) == a.dim;
  out["commutative"] = commut;
  out["associative"] = assoc;
  out["unit_law"] = unit;
  out["form_nondegenerate"] = nondeg;
  bool ok = commut && assoc && unit && nondeg;
  out["frobenius"] = ok;
  if (!ok) {
    out["pass"] = false;
    return out;
  }
  Subspace j = jacobson_radical(a);
  out["radical"] = json_of(j);
  bool local = is_local(a);
  out["local"] = local;
  if (local) out["minimal_ideal"] = json_of(minimal_ideal(a));
  if (grading) {
    DeRhamReport rep = de_rham_check(a, *grading);
    out["de_rham"] = json_of(rep);
    out["pass"] = rep.all_pass();
  } else {
    out["pass"] = true;
  }
  return out;
}

/// Deterministic seeded oracle suite (radical cross-checks, Levi
/// post-conditions); used by the report command and the acceptance tests.
struct SelfcheckSummary {
  int commutative_trials = 0, commutative_pass = 0;
  int lie_trials = 0, lie_pass = 0;
  int levi_trials = 0, levi_pass = 0;
  bool all_pass() const {
    return commutative_pass == commutative_trials && lie_pass == lie_trials &&
           levi_pass == levi_trials;
  }
};

inline SelfcheckSummary run_selfcheck(unsigned long seed, int commutative_trials,
                                      int lie_trials, int levi_trials) {
  SelfcheckSummary s;
  gen::Rng rng(seed);
  for (int i = 0; i < commutative_trials; ++i) {
    auto inst = gen::random_commutative_instance(rng);
    ++s.commutative_trials;
    bool ok = jacobson_radical(inst.algebra) == inst.known_radical;
    // spot-check nilpotency on the computed radical and beyond it
    Subspace j = inst.known_radical;
    for (std::size_t r = 0; r < j.dim() && ok; ++r)
      ok = oracle::element_is_nilpotent(inst.algebra, j.basis_vector(r));
    for (const auto& rep :
         quotient_basis(Subspace::full(inst.algebra.dim), j)) {
      if (!ok) break;
      ok = !oracle::element_is_nilpotent(inst.algebra, rep);
    }
    if (ok) ++s.commutative_pass;
  }
  for (int i = 0; i < lie_trials; ++i) {
    auto inst = gen::random_lie_instance(rng);
    ++s.lie_trials;
    Subspace rad = solvable_radical(inst.algebra);
    bool ok = rad == inst.known_radical && subspace_is_solvable(inst.algebra, rad) &&
              rad == oracle::max_solvable_ideal(inst.algebra, inst.radical_hints);
    if (ok) ++s.lie_pass;
  }
  for (int i = 0; i < levi_trials; ++i) {
    auto inst = gen::random_levi_instance(rng);
    ++s.levi_trials;
    Subspace lv = levi_subalgebra(inst.algebra);
    Subspace b = solvable_radical(inst.algebra);
    bool ok = lv.dim() == inst.levi_dim && intersect(lv, b).is_zero() &&
              sum(lv, b) == Subspace::full(inst.algebra.dim);
    if (ok) {
      LeibnizAlgebra sub = subalgebra_table(inst.algebra, lv);
      ok = is_lie(sub) && det(killing_form(sub)) != 0;
    }
    if (ok) ++s.levi_pass;
  }
  return s;
}

inline Json json_of(const SelfcheckSummary& s) {
  Json out;
  out["commutative_radical"] =
      Json{{"trials", s.commutative_trials}, {"pass", s.commutative_pass}};
  out["lie_radical"] = Json{{"trials", s.lie_trials}, {"pass", s.lie_pass}};
  out["levi"] = Json{{"trials", s.levi_trials}, {"pass", s.levi_pass}};
  out["pass"] = s.all_pass();
  return out;
}

/// The default lattice family exercised by reports and acceptance runs.
inline std::vector<std::pair<std::string, ShiftDatum>> default_shifts() {
  std::vector<std::pair<std::string, ShiftDatum>> out;
  EvenLattice a1 = EvenLattice::make(Matrix{{2}});
  EvenLattice a1a1 = EvenLattice::make(Matrix{{2, 0}, {0, 2}});
  out.emplace_back("a1_half", ShiftDatum::make(a1, Vec{rat(1, 2)}));
  out.emplace_back("a1a1_diag_half",
                   ShiftDatum::make(a1a1, Vec{rat(1, 2), rat(1, 2)}));
  out.emplace_back("a1a1_first_half",
                   ShiftDatum::make(a1a1, Vec{rat(1, 2), rat(0)}));
  for (long k = 2; k <= 3; ++k)
    out.emplace_back("norm" + std::to_string(2 * k) + "_half",
                     ShiftDatum::make(EvenLattice::make(Matrix{{2 * k}}),
                                      Vec{rat(1, 2)}));
  return out;
}

/// One document covering the whole example suite plus the oracle runs.
inline Json suite_report(unsigned long seed, long weight_cap) {
  Json out;
  out["schema"] = kSchemaTag;
  out["kind"] = "report";
  out["seed"] = seed;
  out["weight_cap"] = weight_cap;
  bool pass = true;

  Json sl2 = Json::array();
  for (long k = 1; k <= 5; ++k) {
    Json r = full_report(build_sl2(k));
    pass = pass && r.at("pass").get<bool>();
    sl2.push_back(std::move(r));
  }
  out["sl2"] = std::move(sl2);

  Json lattices = Json::array();
  for (const auto& [name, shift] : default_shifts()) {
    Json r = full_report(build_lattice_shift(shift), weight_cap);
    r["name"] = name;
    pass = pass && r.at("pass").get<bool>();
    lattices.push_back(std::move(r));
  }
  // the CFT-type boundary
  {
    Json r = full_report(
        build_lattice_shift(ShiftDatum::make(EvenLattice::make(Matrix{{2}}),
                                             Vec{rat(0)})),
        weight_cap);
    r["name"] = "a1_unshifted";
    pass = pass && r.at("pass").get<bool>();
    lattices.push_back(std::move(r));
  }
  out["lattice"] = std::move(lattices);

  SelfcheckSummary sc = run_selfcheck(seed, 25, 25, 10);
  out["selfcheck"] = json_of(sc);
  pass = pass && sc.all_pass();

  out["pass"] = pass;
  return out;
}

}  // namespace voaforge

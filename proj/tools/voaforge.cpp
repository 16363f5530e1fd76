// Command-line front end: parses input files, dispatches to the builders and
// analyzers, and emits JSON or text reports. Exit codes: 0 all checks pass,
// 1 a mathematical check failed, 2 unreadable/ill-formed input.

#include <CLI11.hpp>

#include <iostream>

#include "voaforge/report.hpp"

using namespace voaforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

struct Options {
  std::string input;
  std::string output = "json";
  unsigned long seed = 0;
  long weight_cap = 4;
  long level = 1;
};

void print_text_summary(const Json& j, std::ostream& os, int indent = 0) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << pad << key << ":\n";
      print_text_summary(value, os, indent + 2);
    } else if (value.is_array() && !value.empty() && value[0].is_object()) {
      os << pad << key << ":\n";
      for (const auto& e : value) {
        print_text_summary(e, os, indent + 2);
        os << pad << "  -\n";
      }
    } else {
      os << pad << key << " = " << value.dump() << "\n";
    }
  }
}

int emit(const Json& report, const Options& opt) {
  if (opt.output == "text")
    print_text_summary(report, std::cout);
  else
    std::cout << report.dump(2) << "\n";
  bool pass = !report.contains("pass") || report.at("pass").get<bool>();
  return pass ? kExitOk : kExitCheckFailed;
}

int run_analyze_leibniz(const Options& opt) {
  Json in = load_structured(opt.input);
  LeibnizAlgebra l = leibniz_of(in);
  return emit(analyze_leibniz_report(l), opt);
}

int run_analyze_frobenius(const Options& opt) {
  Json in = load_structured(opt.input);
  FrobeniusAlgebra a = frobenius_of(in);
  std::optional<GradingOperator> grading;
  if (in.contains("grading")) grading = GradingOperator{matrix_of(in.at("grading"))};
  return emit(analyze_frobenius_report(a, grading), opt);
}

int run_lattice_shift(const Options& opt) {
  Json in = load_structured(opt.input);
  ShiftDatum shift = shift_of(in);
  if (!shift_admissible(shift))
    throw parse_error("shift datum is not admissible (the grading inequality fails)");
  Json report = full_report(build_lattice_shift(shift), opt.weight_cap);
  return emit(report, opt);
}

int run_sl2_shift(const Options& opt) {
  return emit(full_report(build_sl2(opt.level)), opt);
}

int run_fock_eval(const Options& opt) {
  Json in = load_structured(opt.input);
  if (!in.contains("gram") || !in.contains("op") || !in.contains("vector"))
    throw parse_error("fock request: expected keys \"gram\", \"op\", \"vector\"");
  EvenLattice lat = EvenLattice::make(matrix_of(in.at("gram")));
  FockContext ctx(lat, build_cocycle(lat));
  FockVector v = fock_of(in.at("vector"), lat.rank);
  const Json& op = in.at("op");
  std::string kind = op.at("kind").get<std::string>();
  int n = op.at("n").get<int>();
  FockVector result;
  if (kind == "heis") {
    result = ctx.heis_mode(vec_of(op.at("dir")), n, v);
  } else if (kind == "exp") {
    IntVec alpha;
    for (const auto& x : op.at("alpha")) alpha.push_back(x.get<long>());
    if (alpha.size() != lat.rank) throw parse_error("fock request: alpha length");
    result = ctx.exp_mode(alpha, n, v);
  } else if (kind == "iterate") {
    result = ctx.iterate_mode(fock_of(op.at("state"), lat.rank), n, v);
  } else if (kind == "virasoro") {
    Vec h(lat.rank, Rational(0));
    if (op.contains("h")) h = vec_of(op.at("h"));
    if (h.size() != lat.rank) throw parse_error("fock request: h length");
    VirasoroDatum vd = ctx.make_virasoro(h);
    Conformal which = Conformal::shifted;
    if (op.contains("which"))
      which = op.at("which").get<std::string>() == "unshifted"
                  ? Conformal::unshifted
                  : Conformal::shifted;
    result = ctx.virasoro_mode(vd, n, v, which);
  } else {
    throw parse_error("fock request: unknown op kind '" + kind + "'");
  }
  Json report;
  report["schema"] = kSchemaTag;
  report["kind"] = "fock-eval";
  report["result"] = json_of(result);
  return emit(report, opt);
}

int run_report(const Options& opt) {
  return emit(suite_report(opt.seed, opt.weight_cap), opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computer algebra for graded vertex-algebra structures"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    cmd->add_option("--output", opt.output, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--seed", opt.seed, "seed for the randomized oracle suites");
    cmd->add_option("--weight-cap", opt.weight_cap,
                    "depth for graded-dimension cross-checks")
        ->check(CLI::NonNegativeNumber);
    if (needs_input) {
      cmd->add_option("file", opt.input, "input file");
      cmd->add_option("--input", opt.input, "input file (flag spelling)")
          ->excludes("file");
    }
  };

  CLI::App* leib =
      app.add_subcommand("analyze-leibniz", "structure theory of a bracket table");
  add_common(leib, true);
  CLI::App* frob = app.add_subcommand(
      "analyze-frobenius", "form, radical, locality and grading checks");
  add_common(frob, true);
  CLI::App* latt = app.add_subcommand(
      "lattice-shift", "full pipeline for a shifted lattice theory");
  add_common(latt, true);
  CLI::App* sl2 =
      app.add_subcommand("sl2-shift", "the finite shifted affine-sl2 model");
  add_common(sl2, false);
  sl2->add_option("--level", opt.level, "level k >= 1")->required();
  CLI::App* fock = app.add_subcommand("fock-eval", "evaluate one mode application");
  add_common(fock, true);
  CLI::App* rep = app.add_subcommand("report", "run the whole example suite");
  add_common(rep, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (leib->parsed()) {
      if (opt.input.empty()) throw parse_error("analyze-leibniz needs an input file");
      return run_analyze_leibniz(opt);
    }
    if (frob->parsed()) {
      if (opt.input.empty()) throw parse_error("analyze-frobenius needs an input file");
      return run_analyze_frobenius(opt);
    }
    if (latt->parsed()) {
      if (opt.input.empty()) throw parse_error("lattice-shift needs an input file");
      return run_lattice_shift(opt);
    }
    if (sl2->parsed()) return run_sl2_shift(opt);
    if (fock->parsed()) {
      if (opt.input.empty()) throw parse_error("fock-eval needs an input file");
      return run_fock_eval(opt);
    }
    if (rep->parsed()) return run_report(opt);
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const check_error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitBadInput;
}

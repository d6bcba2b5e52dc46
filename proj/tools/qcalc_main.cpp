#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/eval.hpp"
#include "qcalc/finite_model.hpp"
#include "qcalc/model_checks.hpp"
#include "qcalc/registry.hpp"

namespace {

using namespace qcalc;

constexpr int kOk = 0;
constexpr int kViolation = 1;  // undefined results, failed checks
constexpr int kUsage = 2;      // bad invocation, unreadable files

ScalarField carrier(bool use_float, bool use_complex) {
  if (use_float) return ScalarField::float64();
  if (use_complex) return ScalarField::complex_rational();
  return ScalarField::exact_rational();
}

UnitRegistry load_registry(const std::string& defs, const Paf& paf) {
  if (defs.empty()) return UnitRegistry(paf);
  return UnitRegistry::load_file(defs, paf);
}

/// Prints one evaluation outcome. Returns the process exit code.
int report(const EvalOutcome& out) {
  switch (out.status) {
    case EvalOutcome::Status::Defined:
      std::cout << out.rendered << "\n";
      return kOk;
    case EvalOutcome::Status::Undefined:
      std::cout << "undefined: " << out.diagnostic << "\n";
      return kViolation;
    case EvalOutcome::Status::Error:
      std::cout << "error (" << out.error_kind << "): " << out.message
                << "\n";
      return kViolation;
  }
  return kUsage;
}

int cmd_eval(const std::string& expr, const std::string& defs,
             bool use_float, bool use_complex) {
  UnitRegistry reg = load_registry(defs, Paf(carrier(use_float, use_complex)));
  try {
    return report(evaluate_text(expr, reg));
  } catch (const SyntaxError& e) {
    std::cout << "syntax error at " << e.line << ":" << e.col << ": "
              << e.what() << "\n";
    return kViolation;
  }
}

int cmd_repl(const std::string& defs, bool use_float, bool use_complex) {
  UnitRegistry reg = load_registry(defs, Paf(carrier(use_float, use_complex)));
  bool tty = isatty(fileno(stdin));
  std::string line;
  while (true) {
    if (tty) std::cout << "qcalc> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (line.empty()) continue;
    if (line == "exit" || line == "quit") break;
    try {
      report(evaluate_text(line, reg));
    } catch (const SyntaxError& e) {
      std::cout << "syntax error at " << e.line << ":" << e.col << ": "
                << e.what() << "\n";
    }
  }
  return kOk;
}

void print_report(const std::string& title, const CheckReport& rep) {
  if (rep.ok()) {
    std::cout << title << ": ok (" << rep.cases_checked
              << " cases checked)\n";
    return;
  }
  std::cout << title << ": " << rep.violations.size() << " violation"
            << (rep.violations.size() == 1 ? "" : "s") << " ("
            << rep.cases_checked << " cases checked)\n";
  std::cout << rep.to_string();
}

int cmd_check_model(const std::string& path, bool fieldoid) {
  FiniteModel m = FiniteModel::parse_file(path);
  CheckReport axioms = fieldoid ? check_fieldoid_axioms(m)
                                : check_paf_axioms(m);
  CheckReport lemmas = fieldoid ? check_fieldoid_lemmas(m)
                                : check_paf_lemmas(m);
  print_report("axioms", axioms);
  print_report("lemmas", lemmas);
  return axioms.ok() && lemmas.ok() ? kOk : kViolation;
}

int cmd_decompose(const std::string& path) {
  FiniteModel m = FiniteModel::parse_file(path);
  std::vector<FiniteModel> parts = decompose_fieldoid(m);
  std::cout << "multipliability classes: " << parts.size() << "\n";
  for (size_t i = 0; i < parts.size(); ++i) {
    std::cout << "class " << i + 1 << " (" << parts[i].n() << " elements):";
    for (const std::string& l : parts[i].labels) std::cout << " " << l;
    std::cout << "\n";
  }
  return kOk;
}

int cmd_find_coherent(const std::string& path) {
  FiniteModel m = FiniteModel::parse_file(path);
  CoherentSearchResult res = find_coherent_system(m);
  if (!res.units) {
    std::cout << "no coherent unit system exists (" << res.candidates_tested
              << " candidates exhausted)\n";
    return kOk;
  }
  std::cout << "coherent unit system:";
  for (int u : *res.units) std::cout << " " << m.label(u);
  std::cout << " (" << res.candidates_tested << " candidate"
            << (res.candidates_tested == 1 ? "" : "s") << " tested)\n";
  return kOk;
}

int cmd_check_conditions(const std::string& path) {
  FiniteModel m = FiniteModel::parse_file(path);
  CheckReport c1 = check_no_dimensionful_roots(m);
  CheckReport c2 = check_root_indistinguishability(m);
  print_report("condition 1 (no dimensionful roots)", c1);
  print_report("condition 2 (root indistinguishability)", c2);
  if (c1.ok() && c2.ok()) {
    std::cout << "both conditions hold: a coherent unit system exists\n";
    return kOk;
  }
  return kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantity calculus over partially additive fields"};
  app.require_subcommand(1);

  const char* env_defs = std::getenv("QCALC_DEFS");
  std::string default_defs = env_defs ? env_defs : "";

  std::string expr, defs = default_defs, path;
  bool use_float = false, use_complex = false, fieldoid = false;

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate one expression");
  eval_cmd->add_option("expr", expr, "expression to evaluate")->required();
  eval_cmd->add_option("--defs", defs, "unit definition file (.qdef)");
  CLI::Option* fopt = eval_cmd->add_flag("--float", use_float,
                                         "64-bit float scalars");
  eval_cmd->add_flag("--complex", use_complex, "complex rational scalars")
      ->excludes(fopt);

  CLI::App* repl_cmd = app.add_subcommand("repl", "interactive evaluation");
  repl_cmd->add_option("--defs", defs, "unit definition file (.qdef)");
  CLI::Option* rfopt = repl_cmd->add_flag("--float", use_float,
                                          "64-bit float scalars");
  repl_cmd->add_flag("--complex", use_complex, "complex rational scalars")
      ->excludes(rfopt);

  CLI::App* check_cmd =
      app.add_subcommand("check-model", "check axioms and derived laws");
  check_cmd->add_option("model", path, "model file")->required();
  check_cmd->add_flag("--fieldoid", fieldoid,
                      "check the weaker per-element-unity laws");

  CLI::App* dec_cmd = app.add_subcommand(
      "decompose-fieldoid", "split a fieldoid into multipliability classes");
  dec_cmd->add_option("model", path, "model file")->required();

  CLI::App* coh_cmd = app.add_subcommand(
      "find-coherent", "search for a coherent unit system");
  coh_cmd->add_option("model", path, "model file")->required();

  CLI::App* cond_cmd = app.add_subcommand(
      "check-conditions", "check the two root conditions for coherence");
  cond_cmd->add_option("model", path, "model file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(expr, defs, use_float, use_complex);
    if (repl_cmd->parsed()) return cmd_repl(defs, use_float, use_complex);
    if (check_cmd->parsed()) return cmd_check_model(path, fieldoid);
    if (dec_cmd->parsed()) return cmd_decompose(path);
    if (coh_cmd->parsed()) return cmd_find_coherent(path);
    if (cond_cmd->parsed()) return cmd_check_conditions(path);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const MalformedModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << " (line " << e.line << ", column "
              << e.col << ")\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}

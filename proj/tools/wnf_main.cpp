#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wnf/homotopy.hpp"
#include "wnf/parse.hpp"
#include "wnf/seminorms.hpp"
#include "wnf/suite.hpp"
#include "wnf/toeplitz_split.hpp"
#include "wnf/wprime.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitUnknownSystem = 2;
constexpr int kExitBudget = 3;
constexpr int kExitCheckFailed = 4;

const wnf::RewriteSystem* require_system(const std::string& name) {
  const wnf::RewriteSystem* sys = wnf::find_system(name);
  if (!sys) {
    std::cerr << "unknown system '" << name << "'\n";
    std::exit(kExitUnknownSystem);
  }
  return sys;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    std::exit(kExitParse);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_nf(const std::string& system, const std::string& expr, bool decompose) {
  const wnf::RewriteSystem* sys = require_system(system);
  try {
    wnf::NCPoly<wnf::Rational> p = wnf::parse(expr, sys->alphabet());
    wnf::NCPoly<wnf::Rational> nf = wnf::normal_form(p, *sys);
    std::cout << wnf::print(nf) << "\n";
    if (decompose && system == "wprime") {
      wnf::WPrimeDecomp d = wnf::wprime_decompose(nf);
      for (const auto& [kl, P] : d.i_part)
        std::cout << "ideal  (k=" << kl.first << ", l=" << kl.second << ")  P = " << P.str()
                  << "\n";
      for (const auto& [nm, c] : d.w_part)
        std::cout << "split  s(y^" << nm.first << " x^" << nm.second << ")  c = " << c.str()
                  << "\n";
    } else if (decompose && system == "toeplitz") {
      auto split = wnf::toeplitz_split(nf);
      for (const auto& [ij, c] : split.matrix)
        std::cout << "matrix (" << ij.first << ", " << ij.second << ")  " << c.str() << "\n";
      for (const auto& [k, c] : split.laurent)
        std::cout << "laurent z^" << k << "  " << c.str() << "\n";
    } else if (decompose) {
      std::cerr << "--decompose supports wprime and toeplitz\n";
      return kExitUnknownSystem;
    }
    return kExitOk;
  } catch (const wnf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const wnf::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const wnf::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

int cmd_verify(const std::string& system, const std::string& lhs, const std::string& rhs) {
  const wnf::RewriteSystem* sys = require_system(system);
  try {
    auto rep = wnf::verify_identity(wnf::parse(lhs, sys->alphabet()),
                                    wnf::parse(rhs, sys->alphabet()), *sys);
    if (rep.pass) {
      std::cout << "pass\n";
      return kExitOk;
    }
    std::cout << "fail: residual " << wnf::print(rep.residual) << "\n";
    return kExitCheckFailed;
  } catch (const wnf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const wnf::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  }
}

int cmd_suite(const std::string& suite, const wnf::SuiteConfig& cfg, const std::string& format,
              bool omit_timing, const std::string& out_path) {
  std::vector<wnf::Check> checks;
  try {
    if (suite == "builtin") {
      checks = wnf::builtin_suite(cfg);
    } else {
      checks = wnf::parse_suite_file(read_file(suite));
    }
  } catch (const std::exception& e) {
    std::cerr << "suite error: " << e.what() << "\n";
    return kExitParse;
  }
  wnf::SuiteReport report = wnf::run_suite(checks, cfg);
  std::string payload =
      format == "json" ? report.to_json(!omit_timing) : report.to_text();
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path);
    out << payload;
  }
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int cmd_seminorm_eval(const std::string& spec, unsigned n, const std::string& system,
                      const std::string& expr, const std::string& phi_name) {
  try {
    if (spec == "pn" || spec == "qn") {
      const wnf::RewriteSystem* sys = require_system(system.empty() ? "toeplitz" : system);
      if (sys != &wnf::toeplitz()) {
        std::cerr << "p_n/q_n evaluate Toeplitz elements\n";
        return kExitUnknownSystem;
      }
      auto split = wnf::toeplitz_split(wnf::parse(expr, sys->alphabet()));
      if (spec == "pn") {
        wnf::KMatrix m;
        for (const auto& [ij, c] : split.matrix) m.add(ij.first, ij.second, c);
        std::cout << wnf::eval_pn(n, m).str() << "\n";
      } else {
        std::cout << wnf::eval_qn(n, split.laurent).str() << "\n";
      }
      return kExitOk;
    }
    if (spec == "betaphi") {
      wnf::PhiSeq phi = phi_name == "one" ? wnf::PhiSeq::constant(wnf::Rational(1), "one")
                                          : wnf::PhiSeq::phi0();
      wnf::NCPoly<wnf::Rational> p = wnf::parse(expr, wnf::wprime().alphabet());
      wnf::WPrimeDecomp d = wnf::wprime_decompose(p);
      wnf::IdealElem ideal;
      for (const auto& [kl, P] : d.i_part) ideal.add(kl.first, kl.second, P);
      if (!d.w_part.empty()) {
        std::cerr << "element is not in the ideal I; beta_phi applies to I\n";
        return kExitParse;
      }
      std::cout << wnf::eval_beta_phi(phi, ideal).str() << "\n";
      return kExitOk;
    }
    std::cerr << "unknown spec '" << spec << "' (pn, qn, betaphi)\n";
    return kExitParse;
  } catch (const wnf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const wnf::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const wnf::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

int cmd_seminorm_fuzz(const std::string& spec, const wnf::SamplerConfig& cfg) {
  wnf::SubmultReport rep;
  if (spec == "pn") {
    rep = wnf::submult_check_pn(3, cfg);
  } else if (spec == "betaphi") {
    rep = wnf::submult_check_beta_phi(wnf::PhiSeq::phi0(), cfg);
  } else if (spec == "betaphi1") {
    rep = wnf::submult_check_beta_phi(wnf::PhiSeq::constant(wnf::Rational(1), "one"), cfg);
  } else if (spec == "mixed") {
    wnf::PhiSeq phi = wnf::PhiSeq::phi0();
    rep = wnf::mixed_check(phi, wnf::PhiSeq::phi_prime(phi), wnf::PhiSeq::psi(phi), cfg);
  } else if (spec == "hat_bound") {
    auto base = wnf::make_free({"a", "b", "g"}, false, "free3");
    wnf::TensorAlgebra T(base.get(), 6, 4);
    wnf::FormAlgebra F(&T);
    wnf::HatReport hat = wnf::hat_compare(T, F, wnf::Rational(1), cfg);
    std::cout << hat.trials << " trials, " << hat.violations.size() << " violations"
              << (hat.hypotheses_ok ? "" : ", hypotheses FAILED: " + hat.hypothesis_failure)
              << "\n";
    return hat.clean() ? kExitOk : kExitCheckFailed;
  } else {
    std::cerr << "unknown spec '" << spec << "' (pn, betaphi, betaphi1, mixed, hat_bound)\n";
    return kExitParse;
  }
  std::cout << rep.trials << " trials, " << rep.violations.size() << " violations\n";
  for (size_t i = 0; i < rep.violations.size() && i < 3; ++i) {
    const auto& v = rep.violations[i];
    std::cout << "violation: lhs " << v.lhs.str() << " > rhs " << v.rhs.str() << "\n  a = "
              << v.witness_a << "\n  b = " << v.witness_b << "\n";
  }
  return rep.clean() ? kExitOk : kExitCheckFailed;
}

int cmd_family(const std::string& name) {
  auto fam = wnf::family_from_cli_name(name);
  if (!fam) {
    std::cerr << "unknown family '" << name << "'; available:";
    for (wnf::FamilyName f : wnf::all_families())
      std::cerr << " " << wnf::family_cli_name(f);
    std::cerr << "\n";
    return kExitUnknownSystem;
  }
  wnf::FamilyReport rep = wnf::hom_relations_check(wnf::build_family(*fam));
  for (const auto& c : rep.checks) {
    std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.relation;
    if (!c.pass) std::cout << "  -- residual " << wnf::print(c.residual);
    std::cout << "\n";
  }
  return rep.pass() ? kExitOk : kExitCheckFailed;
}

int cmd_report(const std::string& in_path, const std::string& format) {
  std::string text = read_file(in_path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    for (const char* key : {"schema_version", "seed", "summary", "checks"}) {
      if (!j.contains(key)) throw std::runtime_error(std::string("missing field ") + key);
    }
  } catch (const std::exception& e) {
    std::cerr << "invalid report: " << e.what() << "\n";
    return kExitParse;
  }
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : j["checks"]) {
      std::string status = c.value("status", "?");
      std::cout << (status == "pass" ? "[pass] " : "[FAIL] ") << c.value("id", "?");
      std::string residual = c.value("residual", "");
      if (!residual.empty()) std::cout << "  -- " << residual;
      std::cout << "\n";
    }
    auto s = j["summary"];
    std::cout << s.value("total", 0) << " checks: " << s.value("passed", 0) << " passed, "
              << s.value("failed", 0) << " failed, " << s.value("errors", 0) << " errors\n";
  }
  bool ok = j["summary"].value("failed", 1) == 0 && j["summary"].value("errors", 1) == 0;
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact normal-form calculus for Weyl-type operator algebras"};
  app.require_subcommand(1);

  // nf
  std::string system, expr;
  bool decompose = false;
  CLI::App* nf = app.add_subcommand("nf", "reduce an expression to its normal form");
  nf->add_option("--system", system, "presentation name")->required();
  nf->add_option("--expr", expr, "expression")->required();
  nf->add_flag("--decompose", decompose, "also print the W' or Toeplitz decomposition");

  // verify
  std::string lhs, rhs;
  CLI::App* verify = app.add_subcommand("verify", "check one identity");
  verify->add_option("--system", system, "presentation name")->required();
  verify->add_option("--lhs", lhs, "left-hand side")->required();
  verify->add_option("--rhs", rhs, "right-hand side")->required();

  // suite
  wnf::SuiteConfig cfg;
  std::string suite_name = "builtin", format = "text", out_path;
  bool omit_timing = false;
  CLI::App* suite = app.add_subcommand("suite", "run an identity suite");
  suite->add_option("--suite", suite_name, "builtin or a suite file path");
  suite->add_option("--seed", cfg.seed, "sampler seed");
  suite->add_option("--trials", cfg.trials, "trials per randomized check");
  suite->add_option("--jobs", cfg.jobs, "concurrent checks");
  suite->add_option("--max-degree", cfg.max_degree, "sampler degree bound");
  suite->add_option("--max-kl", cfg.max_kl, "sampler index bound");
  suite->add_option("--max-entry", cfg.max_entry, "sampler entry bound");
  suite->add_option("--format", format, "text or json");
  suite->add_flag("--omit-timing", omit_timing, "drop elapsed_ms fields from JSON");
  suite->add_option("--out", out_path, "write the report to a file");

  // seminorm
  std::string spec, phi_name = "phi0";
  unsigned n = 0;
  wnf::SamplerConfig scfg;
  CLI::App* seminorm = app.add_subcommand("seminorm", "evaluate or fuzz seminorms");
  CLI::App* sem_eval = seminorm->add_subcommand("eval", "evaluate a seminorm exactly");
  sem_eval->add_option("--spec", spec, "pn, qn or betaphi")->required();
  sem_eval->add_option("--n", n, "weight exponent for pn/qn");
  sem_eval->add_option("--system", system, "presentation (toeplitz for pn/qn)");
  sem_eval->add_option("--expr", expr, "expression")->required();
  sem_eval->add_option("--phi", phi_name, "phi0 or one");
  CLI::App* sem_fuzz = seminorm->add_subcommand("fuzz", "randomized submultiplicativity runs");
  sem_fuzz->add_option("--spec", spec, "pn, betaphi, betaphi1, mixed or hat_bound")->required();
  sem_fuzz->add_option("--trials", scfg.trials, "number of sampled pairs");
  sem_fuzz->add_option("--seed", scfg.seed, "sampler seed");
  sem_fuzz->add_option("--max-degree", scfg.max_degree, "polynomial degree bound");
  sem_fuzz->add_option("--max-kl", scfg.max_kl, "index bound");
  sem_fuzz->add_option("--max-entry", scfg.max_entry, "entry magnitude bound");
  sem_fuzz->add_option("--dim", scfg.matrix_dim, "matrix dimension for pn");
  seminorm->require_subcommand(1);

  // family
  std::string family_name;
  CLI::App* family = app.add_subcommand("family", "check one homotopy family's relations");
  family->add_option("--name", family_name, "family name")->required();

  // report
  std::string in_path;
  CLI::App* report = app.add_subcommand("report", "validate and re-emit a JSON report");
  report->add_option("--in", in_path, "report file")->required();
  report->add_option("--format", format, "text or json");

  CLI11_PARSE(app, argc, argv);

  if (nf->parsed()) return cmd_nf(system, expr, decompose);
  if (verify->parsed()) return cmd_verify(system, lhs, rhs);
  if (suite->parsed()) return cmd_suite(suite_name, cfg, format, omit_timing, out_path);
  if (seminorm->parsed()) {
    if (sem_eval->parsed()) return cmd_seminorm_eval(spec, n, system, expr, phi_name);
    return cmd_seminorm_fuzz(spec, scfg);
  }
  if (family->parsed()) return cmd_family(family_name);
  if (report->parsed()) return cmd_report(in_path, format);
  return kExitOk;
}

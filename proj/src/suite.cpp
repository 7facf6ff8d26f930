#include "wnf/suite.hpp"
#include <algorithm>

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "wnf/forms.hpp"
#include "wnf/homotopy.hpp"
#include "wnf/models.hpp"
#include "wnf/parse.hpp"
#include "wnf/seminorms.hpp"
#include "wnf/tensor.hpp"
#include "wnf/toeplitz_split.hpp"
#include "wnf/wprime.hpp"

namespace wnf {

namespace {

CheckOutcome identity_outcome(const std::string& lhs, const std::string& rhs,
                              const RewriteSystem& sys) {
  auto rep = verify_identity(parse(lhs, sys.alphabet()), parse(rhs, sys.alphabet()), sys);
  return {rep.pass, rep.pass ? "" : print(rep.residual)};
}

std::string pow_str(const std::string& g, unsigned n) {
  if (n == 0) return "1";
  return g + "^" + std::to_string(n);
}

void add_identity(std::vector<Check>& out, const std::string& id, const RewriteSystem& sys,
                  const std::string& lhs, const std::string& rhs) {
  out.push_back({id, sys.name(), [lhs, rhs, &sys] { return identity_outcome(lhs, rhs, sys); }});
}

std::string zero_pad(unsigned v, unsigned width = 2) {
  std::string s = std::to_string(v);
  while (s.size() < width) s = "0" + s;
  return s;
}

}  // namespace

std::vector<Check> builtin_suite(const SuiteConfig& cfg) {
  std::vector<Check> out;

  // fundamental W' identities
  add_identity(out, "wprime/fy", wprime(), "f*y'", "0");
  add_identity(out, "wprime/xf", wprime(), "x'*f", "0");
  add_identity(out, "wprime/fxy", wprime(), "f*x'*y'", "f + f^2");
  add_identity(out, "wprime/xyf", wprime(), "x'*y'*f", "f + f^2");
  add_identity(out, "wprime/rel_y", wprime(), "(x'*y' - y'*x')*y'", "y'");
  add_identity(out, "wprime/rel_x", wprime(), "x'*(x'*y' - y'*x')", "x'");

  // shift commutation for m <= 8
  for (unsigned m = 0; m <= 8; ++m) {
    add_identity(out, "shift_comm/m" + zero_pad(m), wprime(),
                 pow_str("x'", m) + "*(x'*y')",
                 "(" + std::to_string(m) + " + x'*y')*" + pow_str("x'", m));
  }
  add_identity(out, "shift_comm/commutator", wprime(), "x'*(x'*y') - (x'*y')*x'", "x'");

  // f-sandwich identities: off-diagonal, recursion, closed form
  for (unsigned k = 0; k <= 6; ++k)
    for (unsigned l = 0; l <= 6; ++l) {
      if (k == l) continue;
      add_identity(out, "fsandwich_offdiag/k" + zero_pad(k) + "l" + zero_pad(l), wprime(),
                   "f*" + pow_str("x'", k) + "*" + pow_str("y'", l) + "*f", "0");
    }
  for (unsigned n = 0; n <= 8; ++n) {
    add_identity(out, "fsandwich_step/n" + zero_pad(n), wprime(),
                 "f*" + pow_str("x'", n + 1) + "*" + pow_str("y'", n + 1) + "*f",
                 "(" + std::to_string(n + 1) + " + f)*f*" + pow_str("x'", n) + "*" +
                     pow_str("y'", n) + "*f");
    std::string rhs = "f^2";
    for (unsigned r = 1; r <= n; ++r) rhs = "(" + std::to_string(r) + " + f)*" + rhs;
    add_identity(out, "fsandwich_closed/n" + zero_pad(n), wprime(),
                 "f*" + pow_str("x'", n) + "*" + pow_str("y'", n) + "*f", rhs);
  }

  // f-collapse of f x'^k y'^l for k, l <= 6
  for (unsigned k = 0; k <= 6; ++k)
    for (unsigned l = 0; l <= 6; ++l) {
      std::string lhs = "f*" + pow_str("x'", k) + "*" + pow_str("y'", l);
      std::string rhs;
      if (k < l) {
        rhs = "0";
      } else {
        rhs = "f*" + pow_str("x'", k - l);
        for (unsigned r = k + 1 - l; r <= k; ++r) rhs = "(" + std::to_string(r) + " + f)*" + rhs;
      }
      add_identity(out, "fcollapse/k" + zero_pad(k) + "l" + zero_pad(l), wprime(), lhs, rhs);
    }

  // x^n y^n = f_n(xy) in W for n <= 8
  for (unsigned n = 0; n <= 8; ++n) {
    out.push_back({"weyl/fn/n" + zero_pad(n), "weyl", [n] {
                     Poly fn = rising_factorial(n);
                     const Alphabet* W = weyl().alphabet();
                     NCPoly<Rational> xy = parse("x*y", W);
                     NCPoly<Rational> rhs(W);
                     for (const auto& [d, c] : fn.coeffs()) {
                       NCPoly<Rational> mono = NCPoly<Rational>::unit(W);
                       for (unsigned i = 0; i < d; ++i) mono *= xy;
                       rhs += mono * c;
                     }
                     NCPoly<Rational> lhs =
                         parse(pow_str("x", n) + "*" + pow_str("y", n), W);
                     auto rep = verify_identity(lhs, rhs, weyl());
                     return CheckOutcome{rep.pass, rep.pass ? "" : print(rep.residual)};
                   }});
  }
  add_identity(out, "weyl/heisenberg", weyl(), "x*y - y*x", "1");

  // Toeplitz relations and matrix-unit calculus
  add_identity(out, "toeplitz/vsv", toeplitz(), "vstar*v", "1");
  add_identity(out, "toeplitz/vvs", toeplitz(), "v*vstar", "1 - e");
  add_identity(out, "toeplitz/ev", toeplitz(), "e*v", "0");
  add_identity(out, "toeplitz/vse", toeplitz(), "vstar*e", "0");
  add_identity(out, "toeplitz/ee", toeplitz(), "e*e", "e");
  for (unsigned i = 0; i <= 4; ++i)
    for (unsigned j = 0; j <= 4; ++j) {
      out.push_back({"toeplitz/units/e" + zero_pad(i) + zero_pad(j), "toeplitz", [i, j] {
                       for (unsigned k = 0; k <= 4; ++k)
                         for (unsigned l = 0; l <= 4; ++l) {
                           NCPoly<Rational> prod = normal_form(
                               toeplitz_unit<Rational>(i, j) * toeplitz_unit<Rational>(k, l),
                               toeplitz());
                           NCPoly<Rational> expect =
                               j == k ? normal_form(toeplitz_unit<Rational>(i, l), toeplitz())
                                      : NCPoly<Rational>::zero(toeplitz().alphabet());
                           if (!(prod == expect))
                             return CheckOutcome{false, "e_ij e_kl mismatch at k=" +
                                                            std::to_string(k) + " l=" +
                                                            std::to_string(l)};
                         }
                       return CheckOutcome{true, ""};
                     }});
    }

  // skew-Laurent commutation
  add_identity(out, "skew/ud", skew(), "u*D", "D*u - u");
  add_identity(out, "skew/uinvd", skew(), "uinv*D", "D*uinv + uinv");
  add_identity(out, "skew/udu", skew(), "u*D*uinv", "D - 1");
  add_identity(out, "skew/square", skew(), "(D*u)*(D*u)", "D*(D - 1)*u^2");

  // confluence audits
  for (const RewriteSystem* sys : {&weyl(), &weyl(2), &wprime(), &toeplitz(), &skew(),
                                   &laurent(), &wprime_toeplitz(), &toeplitz_sq()}) {
    out.push_back({"confluence/" + sys->name(), sys->name(), [sys] {
                     ConfluenceReport rep = critical_pairs(*sys, 8);
                     if (rep.all_joinable()) return CheckOutcome{true, ""};
                     for (const auto& o : rep.overlaps)
                       if (!o.joinable)
                         return CheckOutcome{false, "unjoinable overlap " +
                                                        sys->alphabet()->word_str(o.word)};
                     return CheckOutcome{false, "unreachable"};
                   }});
  }

  // Fedosov calibration: exactly one sign is multiplicative
  out.push_back({"fedosov/calibration", "tensor", [] {
                   std::string witness;
                   bool plus = FormAlgebra::sign_is_multiplicative(+1, &witness);
                   bool minus = FormAlgebra::sign_is_multiplicative(-1);
                   if (minus && !plus)
                     return CheckOutcome{true, ""};
                   return CheckOutcome{false, "calibration ambiguous: +1=" +
                                                  std::to_string(plus) + " -1=" +
                                                  std::to_string(minus)};
                 }});

  // classifying maps
  out.push_back({"classifying/fundamental", "wprime", [] {
                   TensorAlgebra T(&weyl(), 8, 6);
                   const Alphabet* W = weyl().alphabet();
                   NCPoly<Rational> curv = T.curvature(W->word_of({"x"}), W->word_of({"y"}));
                   NCPoly<Rational> gamma = classifying_map(fundamental_extension(), T, curv);
                   NCPoly<Rational> expect = normal_form(
                       parse("y'*f*x' - 2*f - 3*f^2 - f^3", wprime().alphabet()), wprime());
                   bool ok = gamma == expect;
                   return CheckOutcome{ok, ok ? "" : print(gamma)};
                 }});
  out.push_back({"classifying/toeplitz", "toeplitz", [] {
                   TensorAlgebra TL(&laurent(), 6, 4);
                   const Alphabet* L = laurent().alphabet();
                   NCPoly<Rational> curv = TL.curvature(L->word_of({"z"}), L->word_of({"zinv"}));
                   NCPoly<Rational> gamma = classifying_map(toeplitz_extension(), TL, curv);
                   bool ok = gamma == parse("e", toeplitz().alphabet());
                   return CheckOutcome{ok, ok ? "" : print(gamma)};
                 }});

  // homotopy families
  out.push_back({"homotopy/invert/pair_ut", "toeplitz_sq", [] {
                   auto rep = invert_check(pair_ut(), parameter_negate(pair_ut()), toeplitz_sq());
                   return CheckOutcome{rep.pass, rep.pass ? "" : print(rep.residual_left)};
                 }});
  out.push_back({"homotopy/invert/pair_ut_prime", "toeplitz_sq", [] {
                   auto rep = invert_check(pair_ut_prime(), parameter_negate(pair_ut_prime()),
                                           toeplitz_sq());
                   return CheckOutcome{rep.pass, rep.pass ? "" : print(rep.residual_left)};
                 }});
  out.push_back({"homotopy/invert/wprime_ut", "wprime_toeplitz", [] {
                   auto rep =
                       invert_check(wprime_ut(), parameter_negate(wprime_ut()), wprime_toeplitz());
                   return CheckOutcome{rep.pass, rep.pass ? "" : print(rep.residual_left)};
                 }});
  for (FamilyName name : all_families()) {
    out.push_back({std::string("homotopy/relations/") + family_cli_name(name),
                   "homotopy", [name] {
                     FamilyReport rep = hom_relations_check(build_family(name));
                     for (const auto& c : rep.checks)
                       if (!c.pass)
                         return CheckOutcome{false, c.relation + ": " + print(c.residual)};
                     return CheckOutcome{true, ""};
                   }});
  }
  out.push_back({"homotopy/psi_interpolation", "toeplitz_sq", [] {
                   HomFamily psi = build_family(FamilyName::kPairPsi);
                   HomFamily phi = build_family(FamilyName::kPairPhi);
                   HomFamily phip = build_family(FamilyName::kPairPhiPrime);
                   const RewriteSystem& sys = toeplitz_sq();
                   for (const char* g : {"v", "vstar"}) {
                     int gi = toeplitz().alphabet()->find(g);
                     auto at0 = normal_form(
                         at_parameter(psi.images[gi], Rational(1), Rational(0)), sys);
                     auto at1 = normal_form(
                         at_parameter(psi.images[gi], Rational(0), Rational(1)), sys);
                     if (!(at0 == normal_form(
                               at_parameter(phi.images[gi], Rational(1), Rational(0)), sys)))
                       return CheckOutcome{false, std::string("psi_0 != phi on ") + g};
                     if (!(at1 == normal_form(
                               at_parameter(phip.images[gi], Rational(1), Rational(0)), sys)))
                       return CheckOutcome{false, std::string("psi_{pi/2} != phi' on ") + g};
                     TrigPoly diff = normal_form<Trig>(psi.images[gi] - phi.images[gi], sys);
                     if (!every_word_contains_trig(diff, sys, "e1"))
                       return CheckOutcome{false,
                                           std::string("psi_t - phi escapes K (x) T on ") + g};
                   }
                   return CheckOutcome{true, ""};
                 }});
  out.push_back({"homotopy/corner_embedding", "wprime_toeplitz", [] {
                   HomFamily phit = build_family(FamilyName::kWprimePhiT);
                   HomFamily phibar = build_family(FamilyName::kWprimePhiBar);
                   const RewriteSystem& sys = wprime_toeplitz();
                   for (const char* g : {"x'", "y'"}) {
                     int gi = wprime().alphabet()->find(g);
                     auto at_half = normal_form(
                         at_parameter(phit.images[gi], Rational(0), Rational(1)), sys);
                     auto bar = normal_form(
                         at_parameter(phibar.images[gi], Rational(1), Rational(0)), sys);
                     auto expect =
                         normal_form(parse(std::string(g) + "*e", sys.alphabet()), sys);
                     if (!(normal_form(at_half - bar, sys) == expect))
                       return CheckOutcome{false, std::string("difference on ") + g};
                   }
                   return CheckOutcome{true, ""};
                 }});

  // quasihomomorphisms and Morita contexts
  out.push_back({"quasihom/phi0", "wprime_toeplitz", [] {
                   QuasiHomReport rep = quasihom_check(quasihom_phi0_spec());
                   for (const auto& i : rep.items)
                     if (!i.pass) return CheckOutcome{false, i.what};
                   return CheckOutcome{true, ""};
                 }});
  out.push_back({"quasihom/phi_half", "wprime_toeplitz", [] {
                   QuasiHomReport rep = quasihom_check(quasihom_phi_half_spec());
                   for (const auto& i : rep.items)
                     if (!i.pass) return CheckOutcome{false, i.what};
                   return CheckOutcome{true, ""};
                 }});
  out.push_back({"quasihom/difference_hom", "wprime_toeplitz", [cfg] {
                   QuasiHomReport rep =
                       difference_hom_check(quasihom_phi_half_spec(), cfg.trials / 10 + 5, cfg.seed);
                   for (const auto& i : rep.items)
                     if (!i.pass) return CheckOutcome{false, i.what};
                   return CheckOutcome{true, ""};
                 }});
  out.push_back({"morita/corner", "toeplitz", [cfg] {
                   MoritaReport rep = morita_corner_check(4, cfg.trials / 10 + 5, cfg.seed);
                   for (const auto& i : rep.items)
                     if (!i.pass) return CheckOutcome{false, i.what};
                   return CheckOutcome{true, ""};
                 }});
  out.push_back({"morita/interval", "models", [cfg] {
                   MoritaReport rep =
                       morita_interval_check(Rational(1, 2), 10, cfg.trials / 10 + 5, cfg.seed);
                   for (const auto& i : rep.items)
                     if (!i.pass) return CheckOutcome{false, i.what};
                   return CheckOutcome{true, ""};
                 }});
  out.push_back({"morita/empty", "models", [] {
                   MoritaReport rep = morita_empty_check();
                   return CheckOutcome{rep.pass(), ""};
                 }});

  // B-injection examples
  out.push_back({"binjection/examples", "wprime_toeplitz", [] {
                   const RewriteSystem& sys = wprime_toeplitz();
                   BElem b1 = b_membership(parse("x'*y'*e", sys.alphabet()));
                   if (!(b_injection(b1).at({0, 0}) == Poly::variable("t")))
                     return CheckOutcome{false, "(x'y') (x) e00 image"};
                   BElem b2 = b_membership(parse("y'*x'*v*e*vstar", sys.alphabet()));
                   if (!(b_injection(b2).at({1, 1}) == Poly::variable("t")))
                     return CheckOutcome{false, "y'x' (x) e11 image"};
                   return CheckOutcome{true, ""};
                 }});

  // seminorm checks (trial counts from the config)
  out.push_back({"seminorm/pn_submult", "seminorms", [cfg] {
                   SamplerConfig sc;
                   sc.trials = cfg.trials;
                   sc.seed = cfg.seed;
                   sc.matrix_dim = 16;
                   sc.max_entry = cfg.max_entry;
                   SubmultReport rep = submult_check_pn(3, sc);
                   return CheckOutcome{rep.clean(),
                                       rep.clean() ? ""
                                                   : rep.violations.front().witness_a};
                 }});
  out.push_back({"seminorm/beta_phi0_submult", "seminorms", [cfg] {
                   SamplerConfig sc;
                   sc.trials = cfg.trials;
                   sc.seed = cfg.seed;
                   sc.max_kl = cfg.max_kl;
                   sc.max_degree = cfg.max_degree;
                   sc.max_entry = cfg.max_entry;
                   SubmultReport rep = submult_check_beta_phi(PhiSeq::phi0(), sc);
                   return CheckOutcome{rep.clean(),
                                       rep.clean() ? ""
                                                   : rep.violations.front().witness_a};
                 }});
  out.push_back({"seminorm/phi1_witness", "seminorms", [cfg] {
                   SamplerConfig sc;
                   sc.trials = cfg.trials;
                   sc.seed = cfg.seed;
                   sc.max_kl = cfg.max_kl;
                   sc.max_degree = cfg.max_degree;
                   sc.max_entry = cfg.max_entry;
                   SubmultReport rep =
                       submult_check_beta_phi(PhiSeq::constant(Rational(1), "one"), sc);
                   // this check PASSES when a violation witness is found
                   bool ok = !rep.clean();
                   return CheckOutcome{
                       ok, ok ? "witness: " + rep.violations.front().witness_a : ""};
                 }});
  out.push_back({"seminorm/mixed", "seminorms", [cfg] {
                   PhiSeq phi = PhiSeq::phi0();
                   SamplerConfig sc;
                   sc.trials = cfg.trials;
                   sc.seed = cfg.seed;
                   sc.max_kl = 3;
                   sc.max_degree = 3;
                   sc.max_entry = 3;
                   SubmultReport rep =
                       mixed_check(phi, PhiSeq::phi_prime(phi), PhiSeq::psi(phi), sc);
                   return CheckOutcome{rep.clean(),
                                       rep.clean() ? ""
                                                   : rep.violations.front().witness_a};
                 }});
  out.push_back({"seminorm/hat_bound", "seminorms", [cfg] {
                   auto base = make_free({"a", "b", "g"}, false, "free3");
                   TensorAlgebra T(base.get(), 6, 4);
                   FormAlgebra F(&T);
                   SamplerConfig sc;
                   sc.trials = cfg.trials / 5 + 10;
                   sc.seed = cfg.seed;
                   sc.max_degree = 4;
                   sc.max_entry = cfg.max_entry;
                   HatReport rep = hat_compare(T, F, Rational(1), sc);
                   if (!rep.hypotheses_ok) return CheckOutcome{false, rep.hypothesis_failure};
                   return CheckOutcome{rep.clean(),
                                       rep.clean() ? "" : rep.violations.front().witness_a};
                 }});
  out.push_back({"seminorm/phi0_certificate", "seminorms", [] {
                   PhiSeq phi0 = PhiSeq::phi0();
                   for (unsigned l = 0; l <= 64; ++l) {
                     mpz_class bound = 2 * factorial(l + 2);
                     Rational v = phi0(l);
                     if (!(v * v >= Rational(bound)))
                       return CheckOutcome{false, "phi0 bound fails at l=" + std::to_string(l)};
                   }
                   return CheckOutcome{true, ""};
                 }});

  return out;
}

std::vector<Check> parse_suite_file(const std::string& text) {
  std::vector<Check> out;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  unsigned index = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto notspace = line.find_first_not_of(" \t\r");
    if (notspace == std::string::npos) continue;
    line = line.substr(notspace);
    if (line.rfind("CHECK", 0) != 0)
      throw DomainError("suite file line " + std::to_string(lineno) + ": expected CHECK");
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw DomainError("suite file line " + std::to_string(lineno) + ": missing ':'");
    std::string system = line.substr(5, colon - 5);
    auto trim = [](std::string s) {
      size_t b = s.find_first_not_of(" \t");
      size_t e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    system = trim(system);
    std::string rest = line.substr(colon + 1);
    auto eq = rest.find("==");
    if (eq == std::string::npos)
      throw DomainError("suite file line " + std::to_string(lineno) + ": missing '=='");
    std::string lhs = trim(rest.substr(0, eq));
    std::string rhs = trim(rest.substr(eq + 2));
    const RewriteSystem* sys = find_system(system);
    if (!sys) throw DomainError("suite file line " + std::to_string(lineno) +
                                ": unknown system '" + system + "'");
    std::string id = "file/" + zero_pad(index++, 4) + "/" + system;
    out.push_back({id, system, [lhs, rhs, sys] { return identity_outcome(lhs, rhs, *sys); }});
  }
  return out;
}

SuiteReport run_suite(const std::vector<Check>& checks, const SuiteConfig& cfg) {
  SuiteReport report;
  report.config = cfg;
  report.checks.resize(checks.size());

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= checks.size()) return;
      CheckResult& res = report.checks[i];
      res.id = checks[i].id;
      res.system = checks[i].system;
      auto start = std::chrono::steady_clock::now();
      try {
        CheckOutcome out = checks[i].run();
        res.status = out.pass ? "pass" : "fail";
        res.residual = out.residual;
      } catch (const std::exception& e) {
        res.status = "error";
        res.residual = e.what();
      }
      auto stop = std::chrono::steady_clock::now();
      res.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    }
  };
  unsigned jobs = cfg.jobs == 0 ? 1 : cfg.jobs;
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  for (const auto& c : report.checks) {
    if (c.status == "pass") ++report.passed;
    else if (c.status == "fail") ++report.failed;
    else ++report.errors;
  }
  return report;
}

std::string SuiteReport::to_json(bool include_timing) const {
  nlohmann::ordered_json j;
  j["schema_version"] = "1.0";
  j["seed"] = config.seed;
  j["trials"] = config.trials;
  j["jobs"] = config.jobs;
  j["summary"] = nlohmann::ordered_json{{"total", checks.size()},
                                        {"passed", passed},
                                        {"failed", failed},
                                        {"errors", errors}};
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["system"] = c.system;
    jc["status"] = c.status;
    jc["residual"] = c.residual;
    if (include_timing) jc["elapsed_ms"] = c.elapsed_ms;
    arr.push_back(std::move(jc));
  }
  j["checks"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.status == "pass" ? "[pass] " : c.status == "fail" ? "[FAIL] " : "[ERROR] ")
        << c.id;
    if (!c.residual.empty()) out << "  -- " << c.residual;
    out << "\n";
  }
  out << checks.size() << " checks: " << passed << " passed, " << failed << " failed, "
      << errors << " errors\n";
  return out.str();
}

}  // namespace wnf

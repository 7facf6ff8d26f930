#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wnf/presentations.hpp"

namespace wnf {

struct SuiteConfig {
  uint64_t seed = 1;
  unsigned trials = 200;
  unsigned jobs = 1;
  unsigned max_degree = 4;
  unsigned max_kl = 4;
  unsigned max_entry = 4;
};

struct CheckOutcome {
  bool pass = false;
  std::string residual;  // printable residual or witness; empty when passing
};

struct Check {
  std::string id;
  std::string system;
  std::function<CheckOutcome()> run;
};

struct CheckResult {
  std::string id;
  std::string system;
  std::string status;  // pass | fail | error
  std::string residual;
  double elapsed_ms = 0;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckResult> checks;  // sorted by id
  unsigned passed = 0;
  unsigned failed = 0;
  unsigned errors = 0;

  bool all_passed() const { return failed == 0 && errors == 0; }
  // Stable key order; timing fields are excluded from the determinism
  // guarantee and can be omitted entirely.
  std::string to_json(bool include_timing) const;
  std::string to_text() const;
};

// Every identity and verification the modules expose, with trial counts
// taken from the config.
std::vector<Check> builtin_suite(const SuiteConfig& cfg);

// Identity-suite file: `CHECK <system>: <expr> == <expr>` per line, '#'
// comments.
std::vector<Check> parse_suite_file(const std::string& text);

// Run checks (optionally on cfg.jobs threads; checks are pure) and collect
// into a report sorted by id.
SuiteReport run_suite(const std::vector<Check>& checks, const SuiteConfig& cfg);

}  // namespace wnf

#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "wnf/suite.hpp"

using namespace wnf;

namespace {

SuiteConfig small_config() {
  SuiteConfig cfg;
  cfg.trials = 40;
  cfg.seed = 3;
  return cfg;
}

// Minimal structural validator for the shipped schema: required keys,
// types, the status enum, and the additionalProperties clauses.
void validate_against_schema(const nlohmann::json& j) {
  for (const char* key : {"schema_version", "seed", "trials", "jobs", "summary", "checks"})
    REQUIRE(j.contains(key));
  CHECK(j["schema_version"] == "1.0");
  CHECK(j["seed"].is_number_integer());
  CHECK(j["trials"].is_number_integer());
  CHECK(j["jobs"].is_number_integer());
  const auto& summary = j["summary"];
  for (const char* key : {"total", "passed", "failed", "errors"}) {
    REQUIRE(summary.contains(key));
    CHECK(summary[key].is_number_integer());
  }
  CHECK(summary.size() == 4);
  REQUIRE(j["checks"].is_array());
  std::set<std::string> statuses{"pass", "fail", "error"};
  for (const auto& c : j["checks"]) {
    for (const char* key : {"id", "system", "status", "residual"}) REQUIRE(c.contains(key));
    CHECK(c["id"].is_string());
    CHECK(c["system"].is_string());
    CHECK(statuses.count(c["status"].get<std::string>()) == 1);
    CHECK(c["residual"].is_string());
    for (const auto& [key, value] : c.items()) {
      bool known = key == "id" || key == "system" || key == "status" || key == "residual" ||
                   key == "elapsed_ms";
      CHECK(known);
      if (key == "elapsed_ms") CHECK(value.is_number());
    }
  }
  CHECK(size_t(j["summary"]["total"].get<unsigned>()) == j["checks"].size());
}

}  // namespace

TEST_CASE("builtin suite passes and has unique sorted ids") {
  SuiteConfig cfg = small_config();
  std::vector<Check> checks = builtin_suite(cfg);
  SuiteReport rep = run_suite(checks, cfg);
  CHECK(rep.all_passed());
  CHECK(rep.passed == checks.size());
  std::set<std::string> ids;
  for (const auto& c : rep.checks) ids.insert(c.id);
  CHECK(ids.size() == rep.checks.size());
  for (size_t i = 1; i < rep.checks.size(); ++i) CHECK(rep.checks[i - 1].id < rep.checks[i].id);
}

TEST_CASE("json report validates against the shipped schema") {
  SuiteConfig cfg = small_config();
  SuiteReport rep = run_suite(builtin_suite(cfg), cfg);
  nlohmann::json with_timing = nlohmann::json::parse(rep.to_json(true));
  nlohmann::json without = nlohmann::json::parse(rep.to_json(false));
  validate_against_schema(with_timing);
  validate_against_schema(without);
  // with timing every check carries elapsed_ms, without none does
  for (const auto& c : with_timing["checks"]) CHECK(c.contains("elapsed_ms"));
  for (const auto& c : without["checks"]) CHECK(!c.contains("elapsed_ms"));
}

TEST_CASE("identical seeds reproduce identical reports") {
  SuiteConfig cfg = small_config();
  SuiteReport a = run_suite(builtin_suite(cfg), cfg);
  SuiteReport b = run_suite(builtin_suite(cfg), cfg);
  CHECK(a.to_json(false) == b.to_json(false));
  // concurrent execution does not change the payload
  SuiteConfig par = cfg;
  par.jobs = 3;
  SuiteReport c = run_suite(builtin_suite(par), par);
  nlohmann::json ja = nlohmann::json::parse(a.to_json(false));
  nlohmann::json jc = nlohmann::json::parse(c.to_json(false));
  ja.erase("jobs");
  jc.erase("jobs");
  CHECK(ja == jc);
}

TEST_CASE("suite files run and report residuals") {
  std::vector<Check> checks = parse_suite_file(
      "# identities\n"
      "CHECK weyl: x*y == y*x + 1\n"
      "CHECK wprime: f*y' == 0\n"
      "CHECK weyl: x*y == y*x\n");
  SuiteConfig cfg;
  SuiteReport rep = run_suite(checks, cfg);
  CHECK(rep.passed == 2);
  CHECK(rep.failed == 1);
  bool found = false;
  for (const auto& c : rep.checks) {
    if (c.status == "fail") {
      found = true;
      CHECK(c.residual == "1");
    }
  }
  CHECK(found);
}

TEST_CASE("suite file errors") {
  CHECK_THROWS_AS(parse_suite_file("CHECK nosuch: x == x\n"), DomainError);
  CHECK_THROWS_AS(parse_suite_file("VERIFY weyl: x == x\n"), DomainError);
  CHECK_THROWS_AS(parse_suite_file("CHECK weyl: x*y\n"), DomainError);
  // parse errors inside expressions surface as check errors, not crashes
  std::vector<Check> checks = parse_suite_file("CHECK weyl: x*( == 0\n");
  SuiteConfig cfg;
  SuiteReport rep = run_suite(checks, cfg);
  CHECK(rep.errors == 1);
}

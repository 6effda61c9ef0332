#include <set>
#include <string>

#include "doctest.h"
#include "duet/validate.hpp"

using namespace duet;

TEST_SUITE("validate") {

TEST_CASE("the full consistency suite passes") {
  const ValidationReport report = run_validation_suite(2);
  REQUIRE(report.checks.size() == 8);

  std::set<std::string> names;
  for (const CheckResult& check : report.checks) {
    INFO(check.name, ": measured ", check.measured, " vs bound ", check.bound,
         " (", check.detail, ")");
    CHECK(check.pass);
    CHECK_FALSE(check.name.empty());
    names.insert(check.name);
  }
  CHECK(names.size() == report.checks.size());  // distinct check names
  CHECK(report.all_pass());

  // Same verdicts regardless of worker count.
  const ValidationReport serial = run_validation_suite(1);
  REQUIRE(serial.checks.size() == report.checks.size());
  for (size_t i = 0; i < serial.checks.size(); ++i) {
    CHECK(serial.checks[i].name == report.checks[i].name);
    CHECK(serial.checks[i].measured == report.checks[i].measured);
    CHECK(serial.checks[i].pass == report.checks[i].pass);
  }
}

}  // TEST_SUITE

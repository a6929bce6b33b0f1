#include <doctest.h>

#include <set>

#include "errors.hpp"
#include "verify.hpp"

using namespace qtk;
using namespace qtk::verify;

TEST_CASE("suite registry") {
  std::set<std::string> names;
  for (const auto& s : suites()) names.insert(s.name);
  for (const char* n : {"kostka4", "hsmall", "nabla-en", "nabla-shat", "superpoly", "families", "table5", "table1",
                        "crosscheck", "crosscheck-n5", "properties", "scans", "identity-dnl", "xk-dk"})
    CHECK_MESSAGE(names.count(n), n);
  CHECK_THROWS_AS(run_suite("no-such-suite"), InvalidInput);
}

TEST_CASE("small suites pass") {
  for (const char* name : {"hsmall", "table1", "kostka4", "crosscheck-n3"}) {
    auto checks = run_suite(name, 2);
    CHECK_FALSE(checks.empty());
    for (const auto& c : checks) CHECK_MESSAGE((c.pass || !c.gating), format_line(c));
    CHECK(all_passed(checks));
  }
}

TEST_CASE("line format") {
  Check c{"x.y", false, true, "detail", 0.5};
  CHECK(format_line(c) == "FAIL x.y 0.500s detail");
  c.gating = false;
  CHECK(format_line(c) == "REPORT-NO x.y 0.500s detail");
  CHECK(all_passed({c}));
  c.gating = true;
  CHECK_FALSE(all_passed({c}));
}

TEST_CASE("report suites never gate") {
  auto checks = run_suite("xk-dk");
  CHECK(checks.size() == 4);
  CHECK(all_passed(checks));
  for (const auto& c : checks) CHECK_FALSE(c.gating);
}

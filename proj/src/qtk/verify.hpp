#pragma once

#include <string>
#include <vector>

namespace qtk::verify {

struct Check {
  std::string name;
  bool pass = false;
  // Report-only checks never count as failures.
  bool gating = true;
  std::string detail;
  double seconds = 0;
};

struct SuiteInfo {
  std::string name;
  std::string description;
  bool gating = true;
};

// Every suite name accepted by run_suite, in display order.
const std::vector<SuiteInfo>& suites();

// Runs the checks of one suite on up to `jobs` threads. Results keep the
// suite's check order. Throws InvalidInput for an unknown suite.
std::vector<Check> run_suite(const std::string& name, int jobs = 1);

// True when no gating check failed.
bool all_passed(const std::vector<Check>& checks);

// "PASS kostka4.entries 0.012s 25 cases"; report-only checks print
// "REPORT-YES" or "REPORT-NO".
std::string format_line(const Check& c);

}  // namespace qtk::verify

#pragma once

#include <string>
#include <vector>

namespace latcov {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // deterministic: exact values only, no timings
};

struct SuiteReport {
  std::string suite;
  bool pass = true;
  std::vector<CheckResult> checks;
  std::string csv;  // census table when the suite produces one
};

// remark1, halasz-ball, theorem2-coverage, theorem3-scaling, corollary-sr
std::vector<std::string> repro_suite_names();

// Runs one named reproduction bundle. Output is byte-identical for any
// thread count. Unknown names throw ParseError.
SuiteReport run_repro_suite(const std::string& name, int threads = 1);

std::string suite_to_json(const SuiteReport& report);

}  // namespace latcov

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wg {

// Randomized identity suites behind `check` and the acceptance runner. Every
// assertion is an exact equality of canonical forms; failures carry a printed
// counterexample. All randomness is seeded and size-bounded.
struct CheckOptions {
  uint64_t seed = 0;
  int max_len = 4;
  int max_deg = 3;
  int cases = 0;  // 0 = per-suite default
  std::vector<int> dims = {2, 3};
};

struct CheckProperty {
  std::string id;
  bool pass = true;
  int cases = 0;
  double seconds = 0;
  std::string counterexample;  // first failure, if any
};

struct CheckReport {
  std::string suite;
  std::vector<CheckProperty> properties;
  bool pass = true;
  double seconds = 0;
};

std::vector<std::string> suite_names();  // excludes "all"
CheckReport run_suite(const std::string& name, const CheckOptions& opt);

}  // namespace wg

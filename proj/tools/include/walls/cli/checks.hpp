#pragma once

#include <functional>
#include <string>
#include <vector>

namespace walls::cli {

struct CheckBounds {
  long nmax = 0;
  long kmax = 0;
  long order = 0;
};

struct CheckResult {
  bool passed = true;
  long cases = 0;
  std::string counterexample;  // first failure only
};

struct Check {
  std::string name;
  std::string summary;
  CheckBounds defaults;
  std::function<CheckResult(const CheckBounds&)> run;
};

const std::vector<Check>& check_registry();
// nullptr when absent.
const Check* find_check(const std::string& name);

}  // namespace walls::cli

#pragma once

// Identity suites run by `cyclothue verify` for a single prime.

#include <cstdint>
#include <string>
#include <vector>

namespace cyclothue {

struct SuiteCheck {
  std::string suite;
  std::string check;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::int64_t skipped = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

std::vector<SuiteCheck> stickelberger_suite(int n);
std::vector<SuiteCheck> cyclotomic_suite(int n, int max_order);

}  // namespace cyclothue

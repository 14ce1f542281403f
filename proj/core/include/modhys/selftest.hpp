#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace modhys {

struct SelftestOptions {
  // Test hook: negates the right-hand side fed to the solvers inside the
  // recovery checks, so a healthy build must report failures.
  bool inject_rhs_sign_fault = false;
  std::uint64_t seed = 1;
  int threads = 0;
};

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;
  bool all_passed() const;
};

// Runs the cross-module invariant suites: encoder range and fold values,
// separation/return oracles, DFT against a brute-force sum, the
// difference/anti-difference identity, OMP exact recovery, and no-fold
// neutrality of the pipeline.
SelftestReport run_selftest(const SelftestOptions& options = {});

}  // namespace modhys

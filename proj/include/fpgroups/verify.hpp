#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fpgroups {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Invariant suites behind the `verify` command. Randomized checks draw from
/// the given seed; exhaustive checks ignore it.
std::vector<CheckResult> verify_rewrite(std::uint64_t seed);
std::vector<CheckResult> verify_trees(std::uint64_t seed);
std::vector<CheckResult> verify_oriented(std::uint64_t seed);
std::vector<CheckResult> verify_moments(std::uint64_t seed);

}  // namespace fpgroups

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace braidforge {

inline constexpr std::uint64_t kDefaultSuiteSeed = 20261018;

struct CheckResult {
  int id = 0;
  std::string name;
  std::string description;
  bool passed = false;  // the check held and finished within the time limit
  std::string detail;
  double seconds = 0;
  std::optional<double> time_limit;
};

/// Runs every acceptance check in a fixed order. Randomized checks draw
/// from generators seeded with `seed`.
std::vector<CheckResult> run_acceptance_suite(std::uint64_t seed = kDefaultSuiteSeed);

}  // namespace braidforge

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jetinv::checks {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 11;

/// Runs one acceptance criterion (1..11) in exact arithmetic. Exceptions
/// raised inside a criterion are reported as failures.
CriterionResult run_criterion(int id, std::uint64_t seed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// "PASS  3  invariants vs closed form ... (200 velocities) 0.41s"
std::string format_result(const CriterionResult& result);

}  // namespace jetinv::checks

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qsw::cli {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 13;

/// Runs one of the library-level acceptance checks (ids 1..13).
CriterionResult run_criterion(int id, std::uint64_t seed);
std::vector<CriterionResult> run_criteria(std::uint64_t seed);

}  // namespace qsw::cli

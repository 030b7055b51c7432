#pragma once

// End-to-end acceptance checks, shared by the acceptance binary and the
// `verify-all` subcommand.

#include <cstdint>
#include <string>
#include <vector>

#include "krull/execution.hpp"

namespace krull::acceptance {

struct Criterion {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

inline constexpr int kCriterionCount = 11;

/// Runs criterion `id` (1..11). `bound` is the truncation used by the
/// Hausdorff and Krull-grid criteria (8 and 9); the others use fixed sizes.
/// Never throws: an exception inside a check is reported as a failure.
Criterion run_criterion(int id, std::uint64_t bound = 360, Execution exec = Execution::parallel);

std::vector<Criterion> run_all(std::uint64_t bound = 360, Execution exec = Execution::parallel);

}  // namespace krull::acceptance

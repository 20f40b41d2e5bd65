#pragma once

// The fixed acceptance suite: fifteen numbered criteria, each with its
// tolerance and wall-clock budget pinned here. Shared by the acceptance test
// binary and `gaussrom verify all`.

#include "gaussrom/factor.hpp"
#include "gaussrom/factor_cache.hpp"

#include <functional>
#include <string>
#include <vector>

namespace gaussrom {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double elapsed_seconds = 0;
  double budget_seconds = 0;
};

struct AcceptanceOptions {
  unsigned long romanov_e_max = 72;
  unsigned threads = 1;
  Effort effort;
  FactorCache* cache = nullptr;
};

inline constexpr int kCriterionCount = 15;

/// Runs one criterion. An exception inside it is a failure, never propagated.
/// Throws std::out_of_range for an id outside 1..15.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

/// Runs every criterion in order; `on_result` sees each as it finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] 01 name: detail (0.012 s, budget 1 s)".
std::string format_result(const CriterionResult& result);

}  // namespace gaussrom

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ltqdiag/search_options.hpp"

namespace ltqdiag {

// One row of the verification table printed by the acceptance suite and the
// CLI `verify-all` subcommand.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  // The cut searches at n = 5 enumerate a few hundred million subsets, so the
  // verification default is far above the CLI solver default.
  uint64_t budget = 10'000'000'000ull;
  unsigned workers = 0;
  std::vector<int> criteria;  // empty means all
};

inline constexpr int kCriterionCount = 11;

// Run the selected verification criteria (all by default) and return one
// result per criterion, in id order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

// Render results as the standard pass/fail table.
std::string acceptance_table(const std::vector<CriterionResult>& results);

// Render results as a JSON array.
std::string acceptance_json(const std::vector<CriterionResult>& results);

}  // namespace ltqdiag

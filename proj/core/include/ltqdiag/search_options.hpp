#pragma once

#include <cstdint>

namespace ltqdiag {

inline constexpr uint64_t kDefaultCandidateBudget = 100'000'000;

// Knobs shared by the bounded exhaustive searches. budget caps the number of
// candidate subsets a search may enumerate; workers = 0 means hardware
// concurrency. Results never depend on the worker count.
struct SearchOptions {
  uint64_t budget = kDefaultCandidateBudget;
  unsigned workers = 0;
};

}  // namespace ltqdiag

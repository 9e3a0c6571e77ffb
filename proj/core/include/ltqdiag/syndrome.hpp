#pragma once

#include <cstdint>
#include <vector>

#include "ltqdiag/graph.hpp"
#include "ltqdiag/vertex_set.hpp"

namespace ltqdiag {

inline constexpr uint64_t kDefaultSeed = 20240001;

enum class Model { Pmc, MmStar };

// How faulty units fill in their free "0 or 1" outcomes. The same (kind,
// seed, graph, fault set) always reproduces the identical syndrome; the seed
// only matters for Random.
struct FaultyUnitPolicy {
  enum class Kind { AllZero, AllOne, Random };
  Kind kind = Kind::Random;
  uint64_t seed = kDefaultSeed;

  static FaultyUnitPolicy all_zero() { return {Kind::AllZero, 0}; }
  static FaultyUnitPolicy all_one() { return {Kind::AllOne, 0}; }
  static FaultyUnitPolicy random(uint64_t seed = kDefaultSeed) { return {Kind::Random, seed}; }
};

// Complete PMC syndrome: one bit per ordered adjacent pair (tester, testee),
// 2|E| entries. Tests are indexed by tester label and the testee's rank in
// the tester's ascending neighbor list.
struct PmcSyndrome {
  int n = 0;
  std::vector<uint8_t> outcomes;  // size n * 2^n

  bool operator==(const PmcSyndrome&) const = default;
};

// Complete MM* syndrome: one bit per (comparator w, unordered pair {u, v})
// with u, v distinct neighbors of w. Every comparator owns C(n, 2) tests.
struct MmSyndrome {
  int n = 0;
  std::vector<uint8_t> outcomes;  // size 2^n * n*(n-1)/2

  bool operator==(const MmSyndrome&) const = default;
};

PmcSyndrome make_empty_pmc_syndrome(const LtqGraph& g);
MmSyndrome make_empty_mm_syndrome(const LtqGraph& g);

int pmc_outcome(const LtqGraph& g, const PmcSyndrome& s, uint32_t tester, uint32_t testee);
void set_pmc_outcome(const LtqGraph& g, PmcSyndrome& s, uint32_t tester, uint32_t testee,
                     int outcome);

int mm_outcome(const LtqGraph& g, const MmSyndrome& s, uint32_t comparator, uint32_t u,
               uint32_t v);
void set_mm_outcome(const LtqGraph& g, MmSyndrome& s, uint32_t comparator, uint32_t u, uint32_t v,
                    int outcome);

// Generate the syndrome produced by fault set F: fault-free testers and
// comparators answer per the outcome tables, faulty units answer per the
// policy. One deterministic pass in canonical test order.
PmcSyndrome pmc_syndrome(const LtqGraph& g, const VertexSet& fault, const FaultyUnitPolicy& policy);
MmSyndrome mm_syndrome(const LtqGraph& g, const VertexSet& fault, const FaultyUnitPolicy& policy);

// Could fault set F have produced s? Only outcomes owned by fault-free
// units constrain the answer.
bool pmc_consistent(const LtqGraph& g, const VertexSet& fault, const PmcSyndrome& s);
bool mm_consistent(const LtqGraph& g, const VertexSet& fault, const MmSyndrome& s);

}  // namespace ltqdiag

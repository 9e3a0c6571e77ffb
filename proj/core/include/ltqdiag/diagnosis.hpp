#pragma once

#include <cstdint>
#include <vector>

#include "ltqdiag/graph.hpp"
#include "ltqdiag/search_options.hpp"
#include "ltqdiag/syndrome.hpp"
#include "ltqdiag/vertex_set.hpp"

namespace ltqdiag {

// Structural distinguishability: some fault-free vertex tests a vertex of
// the symmetric difference. Requires f1 != f2.
bool distinguishable_pmc(const LtqGraph& g, const VertexSet& f1, const VertexSet& f2);

// Structural distinguishability under MM*: one of the three witness
// configurations (free comparator seeing the symmetric difference next to
// another free vertex, or a free comparator with two neighbors on one side
// of the difference) exists. Requires f1 != f2.
bool distinguishable_mm(const LtqGraph& g, const VertexSet& f1, const VertexSet& f2);

// Semantic joint consistency, computed per test: a single syndrome can be
// produced by both fault sets iff every test owned by a unit outside
// f1 ∪ f2 is forced to the same outcome under both hypotheses. Always equals
// the negation of the structural predicate; the two are kept as independent
// routes and tested against each other.
bool jointly_consistent_pmc(const LtqGraph& g, const VertexSet& f1, const VertexSet& f2);
bool jointly_consistent_mm(const LtqGraph& g, const VertexSet& f1, const VertexSet& f2);

struct DiagnosisResult {
  enum class Kind { Unique, Ambiguous, NoCandidate };
  Kind kind = Kind::NoCandidate;
  // Consistent g-good-neighbor candidates of size <= t, in ascending (size,
  // canonical) order. One entry when unique, two or more when ambiguous.
  std::vector<VertexSet> candidates;
  uint64_t sets_enumerated = 0;

  const VertexSet& unique() const { return candidates.front(); }
};

// Syndrome-driven diagnosis: enumerate every g-good-neighbor conditional
// faulty set of size <= t consistent with the syndrome.
DiagnosisResult diagnose(const LtqGraph& g, const PmcSyndrome& s, int good, int t,
                         const SearchOptions& opts = {});
DiagnosisResult diagnose(const LtqGraph& g, const MmSyndrome& s, int good, int t,
                         const SearchOptions& opts = {});

}  // namespace ltqdiag

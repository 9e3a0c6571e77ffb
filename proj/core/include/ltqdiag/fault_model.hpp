#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ltqdiag/graph.hpp"
#include "ltqdiag/search_options.hpp"
#include "ltqdiag/vertex_set.hpp"

namespace ltqdiag {

// Outcome of the g-good-neighbor predicate. When the set fails, the smallest
// violating vertex is reported together with how many fault-free neighbors it
// kept.
struct GoodNeighborReport {
  bool is_gng = false;
  std::optional<uint32_t> violating_vertex;
  std::optional<int> free_neighbor_count;
};

struct CutReport {
  int size = 0;
  VertexSet cut;
  int component_count = 0;
  std::vector<uint64_t> component_sizes;  // ascending, matching components() order
};

struct KappaResult {
  std::optional<CutReport> cut;  // empty: no qualifying cut of size <= size_bound
  int size_bound = 0;
  // Candidates enumerated in canonical order up to and including the returned
  // cut (or the whole bounded space when none was found).
  uint64_t subsets_checked = 0;
};

// N(A): every vertex outside A adjacent to some vertex of A. A must be
// nonempty.
VertexSet neighborhood_of_set(const LtqGraph& g, const VertexSet& a);

// Definition of a g-good-neighbor conditional faulty set: every vertex
// outside F keeps at least g neighbors outside F. 0 <= g <= n.
GoodNeighborReport is_g_good_neighbor_set(const LtqGraph& g, const VertexSet& fault, int good);

// Connected components of G - F, sorted by (size, smallest label).
std::vector<VertexSet> components(const LtqGraph& g, const VertexSet& fault);

// Bounded exhaustive search for a minimum g-good-neighbor conditional cut:
// scans all vertex subsets of size <= size_bound in ascending (size,
// canonical) order and returns the first one that is a g-good-neighbor
// faulty set and disconnects the graph. Requires 0 <= g <= n-2.
KappaResult kappa_g(const LtqGraph& g, int good, int size_bound, const SearchOptions& opts = {});

// True iff no nonempty vertex subset of size < order_bound induces a
// subgraph of minimum degree >= g (exhaustive over all smaller sizes).
// Requires order_bound <= 2^g.
bool verify_min_subgraph_order(const LtqGraph& g, int good, uint64_t order_bound,
                               const SearchOptions& opts = {});

}  // namespace ltqdiag

#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ltqdiag/graph.hpp"
#include "ltqdiag/search_options.hpp"
#include "ltqdiag/syndrome.hpp"
#include "ltqdiag/vertex_set.hpp"

namespace ltqdiag {

enum class Method { Formula, BruteForce, Witness };

// Result of a diagnosability computation. `exact` means the stated value was
// verified exhaustively over the relevant bound; otherwise the value is the
// closed form with its upper bound certified by the witness pair and the
// lower-bound ingredients checked at bounded scale (see notes).
struct DiagReport {
  int n = 0;
  int g = 0;
  Model model = Model::Pmc;
  Method method = Method::Formula;
  int value = 0;
  bool exact = false;
  std::optional<std::pair<VertexSet, VertexSet>> witness;
  uint64_t pairs_checked = 0;
  std::chrono::milliseconds elapsed{0};
  std::vector<std::string> notes;  // text output only, not part of the JSON schema
};

// Closed-form conditional diagnosability: 2^g(n-g+1)-1 for 1 <= g <= n-3,
// 2^(n-1)-1 for n-2 <= g <= n-1. PMC requires n >= 4, MM* requires n >= 5.
int tg_formula(int n, int g, Model model);

// Expand a fixed/free bit pattern over {'0','1','X'} written most significant
// bit first (the same notation the witness families use) into the vertex set
// of all completions of the X positions.
VertexSet expand_pattern(const LtqGraph& g, const std::string& pattern);

// The extremal indistinguishable pair certifying the t_g upper bound:
// for g <= n-3, F1 = N(A) and F2 = N(A) ∪ A with A = 0^(n-g-1) X^g 0;
// for g >= n-2, the two half-cube vertex sets. Requires 1 <= g <= n-1.
std::pair<VertexSet, VertexSet> witness_pair(const LtqGraph& g, int good);

// Streams every g-good-neighbor conditional faulty set of size <= max_size
// exactly once, in ascending (size, canonical) order. next() throws
// BudgetError once the enumeration passes the candidate budget.
class GngSetStream {
 public:
  GngSetStream(const LtqGraph& g, int good, int max_size, const SearchOptions& opts = {});
  ~GngSetStream();
  GngSetStream(GngSetStream&&) noexcept;
  GngSetStream& operator=(GngSetStream&&) noexcept;

  std::optional<VertexSet> next();
  uint64_t enumerated() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Exhaustive t_g: over all unordered pairs of distinct g-good-neighbor sets
// with both sizes <= size_bound, the minimum of max(|F1|, |F2|) over
// indistinguishable pairs, minus one. exact=false (value = size_bound, a
// lower bound on t_g) when every pair in range is distinguishable. Pair
// enumeration is desk scale for n <= 4 only.
DiagReport tg_bruteforce(const LtqGraph& g, int good, Model model, int size_bound,
                         const SearchOptions& opts = {});

// Check the closed form: full brute-force equality at n = 4 (PMC), witness
// upper bound plus bounded lower-bound ingredients (minimum conditional cut
// size, minimum subgraph order) for n >= 5. Throws if any certified fact
// fails; compare `value` against tg_formula for the verdict.
DiagReport verify_theorem(int n, int g, Model model, const SearchOptions& opts = {});

}  // namespace ltqdiag

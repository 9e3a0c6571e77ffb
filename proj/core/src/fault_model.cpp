#include "ltqdiag/fault_model.hpp"

#include <algorithm>
#include <string>

#include "exhaustive.hpp"
#include "ltqdiag/errors.hpp"

namespace ltqdiag {

namespace {

void check_universe(const LtqGraph& g, const VertexSet& s, const char* what) {
  if (s.universe() != g.vertex_count()) {
    throw ArgumentError(std::string(what) + " has universe " + std::to_string(s.universe()) +
                        ", expected " + std::to_string(g.vertex_count()));
  }
}

}  // namespace

VertexSet neighborhood_of_set(const LtqGraph& g, const VertexSet& a) {
  check_universe(g, a, "vertex set");
  if (a.empty()) throw ArgumentError("neighborhood_of_set requires a nonempty set");
  VertexSet out(g.vertex_count());
  for (uint32_t v : a.members()) {
    for (uint32_t w : g.neighbor_labels(v)) out.add(w);
  }
  return out.difference(a);
}

GoodNeighborReport is_g_good_neighbor_set(const LtqGraph& g, const VertexSet& fault, int good) {
  check_universe(g, fault, "fault set");
  if (good < 0 || good > g.dimension()) {
    throw ArgumentError("g out of range: g = " + std::to_string(good) + ", expected 0 <= g <= " +
                        std::to_string(g.dimension()));
  }
  GoodNeighborReport report;
  report.is_gng = true;
  if (good == 0) return report;
  // members() ascends, so the first violator found has the smallest label.
  for (uint32_t v : fault.complement().members()) {
    int free_neighbors = 0;
    for (uint32_t w : g.neighbor_labels(v)) {
      if (!fault.contains(w)) ++free_neighbors;
    }
    if (free_neighbors < good) {
      report.is_gng = false;
      report.violating_vertex = v;
      report.free_neighbor_count = free_neighbors;
      return report;
    }
  }
  return report;
}

std::vector<VertexSet> components(const LtqGraph& g, const VertexSet& fault) {
  check_universe(g, fault, "fault set");
  const uint64_t count = g.vertex_count();
  VertexSet seen = fault;
  std::vector<VertexSet> comps;
  std::vector<uint32_t> stack;
  for (uint64_t v = 0; v < count; ++v) {
    if (seen.contains(v)) continue;
    VertexSet comp(count);
    stack.push_back(static_cast<uint32_t>(v));
    seen.add(v);
    comp.add(v);
    while (!stack.empty()) {
      const uint32_t u = stack.back();
      stack.pop_back();
      for (uint32_t w : g.neighbor_labels(u)) {
        if (!seen.contains(w)) {
          seen.add(w);
          comp.add(w);
          stack.push_back(w);
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(), [](const VertexSet& a, const VertexSet& b) {
    const uint64_t sa = a.size();
    const uint64_t sb = b.size();
    if (sa != sb) return sa < sb;
    return a.smallest() < b.smallest();
  });
  return comps;
}

namespace {

template <int W>
KappaResult kappa_impl(const LtqGraph& g, int good, int size_bound, const SearchOptions& opts) {
  using detail::BitMask;
  const int m = static_cast<int>(g.vertex_count());
  const auto nbr = detail::neighbor_masks<W>(g);
  const auto universe = BitMask<W>::universe(static_cast<unsigned>(m));
  const unsigned workers = detail::resolve_workers(opts.workers);

  KappaResult result;
  result.size_bound = size_bound;
  uint64_t enumerated_before = 0;
  for (int k = 1; k <= size_bound; ++k) {
    auto pred = [&](const BitMask<W>& fault) {
      const BitMask<W> free = universe.andnot(fault);
      if (free.none()) return false;
      if (detail::is_connected_mask<W>(nbr, free)) return false;
      return detail::is_gng_mask<W>(nbr, free, good);
    };
    const auto level =
        detail::scan_level<W>(m, k, pred, enumerated_before, opts.budget, workers);
    if (level.hit) {
      const auto& [rank, mask] = *level.hit;
      VertexSet cut(g.vertex_count());
      mask.for_each([&](unsigned v) { cut.add(v); });
      CutReport report;
      report.size = k;
      report.cut = cut;
      for (const VertexSet& comp : components(g, cut)) {
        report.component_sizes.push_back(comp.size());
      }
      report.component_count = static_cast<int>(report.component_sizes.size());
      result.cut = std::move(report);
      result.subsets_checked = enumerated_before + rank + 1;
      return result;
    }
    if (level.budget_blocked) {
      throw BudgetError("kappa_g search for size " + std::to_string(k) +
                        " exceeds the candidate budget of " + std::to_string(opts.budget));
    }
    enumerated_before = detail::sat_add(enumerated_before, detail::binom(m, k));
  }
  result.subsets_checked = enumerated_before;
  return result;
}

template <int W>
bool verify_min_subgraph_order_impl(const LtqGraph& g, int good, uint64_t order_bound,
                                    const SearchOptions& opts) {
  using detail::BitMask;
  const int m = static_cast<int>(g.vertex_count());
  const auto nbr = detail::neighbor_masks<W>(g);
  const unsigned workers = detail::resolve_workers(opts.workers);

  uint64_t enumerated_before = 0;
  for (uint64_t k = 1; k < order_bound; ++k) {
    // A hit is a subset all of whose vertices keep >= g neighbors inside it.
    auto pred = [&](const BitMask<W>& subset) {
      return subset.find_bit([&](unsigned v) {
               return (nbr[v] & subset).count() < static_cast<unsigned>(good);
             }) < 0;
    };
    const auto level = detail::scan_level<W>(m, static_cast<int>(k), pred, enumerated_before,
                                             opts.budget, workers);
    if (level.hit) return false;
    if (level.budget_blocked) {
      throw BudgetError("minimum-order search for size " + std::to_string(k) +
                        " exceeds the candidate budget of " + std::to_string(opts.budget));
    }
    enumerated_before =
        detail::sat_add(enumerated_before, detail::binom(m, static_cast<int>(k)));
  }
  return true;
}

}  // namespace

KappaResult kappa_g(const LtqGraph& g, int good, int size_bound, const SearchOptions& opts) {
  if (good < 0 || good > g.dimension() - 2) {
    throw ArgumentError("kappa_g requires 0 <= g <= n-2, got g = " + std::to_string(good) +
                        " for n = " + std::to_string(g.dimension()));
  }
  if (size_bound < 1) throw ArgumentError("kappa_g requires size_bound >= 1");
  if (g.dimension() <= 6) return kappa_impl<1>(g, good, size_bound, opts);
  if (g.dimension() <= 8) return kappa_impl<4>(g, good, size_bound, opts);
  throw BudgetError("exhaustive cut search is desk-scale only (n <= 8), got n = " +
                    std::to_string(g.dimension()));
}

bool verify_min_subgraph_order(const LtqGraph& g, int good, uint64_t order_bound,
                               const SearchOptions& opts) {
  if (good < 0 || good > g.dimension()) {
    throw ArgumentError("verify_min_subgraph_order requires 0 <= g <= n");
  }
  if (good < 63 && order_bound > (uint64_t{1} << good)) {
    throw ArgumentError("order_bound " + std::to_string(order_bound) + " exceeds 2^g = " +
                        std::to_string(uint64_t{1} << good));
  }
  if (order_bound <= 1) return true;
  if (g.dimension() <= 6) return verify_min_subgraph_order_impl<1>(g, good, order_bound, opts);
  if (g.dimension() <= 8) return verify_min_subgraph_order_impl<4>(g, good, order_bound, opts);
  throw BudgetError("exhaustive minimum-order search is desk-scale only (n <= 8), got n = " +
                    std::to_string(g.dimension()));
}

}  // namespace ltqdiag

#pragma once

// Shared machinery for the bounded exhaustive searches (conditional cuts,
// minimum-order subgraphs, good-neighbor set enumeration, indistinguishable
// pair search). Candidate subsets are enumerated level by level (by
// cardinality) and, within a level, in lexicographic order of the ascending
// member sequence — the canonical order used for every determinism
// tie-break. Parallel scans split a level into fixed rank ranges ("chunks")
// claimed in ascending order; the combined result is always the canonically
// first hit, independent of worker scheduling.

#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "bitmask.hpp"
#include "comb.hpp"
#include "ltqdiag/errors.hpp"
#include "ltqdiag/graph.hpp"
#include "ltqdiag/search_options.hpp"

namespace ltqdiag::detail {

inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

template <int W>
std::vector<BitMask<W>> neighbor_masks(const LtqGraph& g) {
  const uint64_t count = g.vertex_count();
  std::vector<BitMask<W>> out(count);
  for (uint64_t v = 0; v < count; ++v) {
    for (uint32_t u : g.neighbor_labels(static_cast<uint32_t>(v))) out[v].set(u);
  }
  return out;
}

// Lexicographic k-combination enumerator over [0, m) with the subset mask
// maintained incrementally.
template <int W>
struct MaskCombo {
  int m = 0;
  int k = 0;
  std::vector<int> idx;
  BitMask<W> mask;

  void init_first(int m_, int k_) {
    m = m_;
    k = k_;
    idx.assign(static_cast<size_t>(k), 0);
    mask = {};
    for (int i = 0; i < k; ++i) {
      idx[static_cast<size_t>(i)] = i;
      mask.set(static_cast<unsigned>(i));
    }
  }

  // Start at the combination with the given lexicographic rank.
  void init_rank(int m_, int k_, uint64_t rank) {
    m = m_;
    k = k_;
    idx.assign(static_cast<size_t>(k), 0);
    mask = {};
    int a = 0;
    for (int p = 0; p < k; ++p) {
      for (;;) {
        const uint64_t block = binom(m - 1 - a, k - 1 - p);
        if (rank < block) break;
        rank -= block;
        ++a;
      }
      idx[static_cast<size_t>(p)] = a;
      mask.set(static_cast<unsigned>(a));
      ++a;
    }
  }

  bool advance() {
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == m - k + i) --i;
    if (i < 0) return false;
    for (int j = i; j < k; ++j) mask.reset(static_cast<unsigned>(idx[static_cast<size_t>(j)]));
    const int base = idx[static_cast<size_t>(i)] + 1;
    for (int j = i; j < k; ++j) {
      idx[static_cast<size_t>(j)] = base + (j - i);
      mask.set(static_cast<unsigned>(idx[static_cast<size_t>(j)]));
    }
    return true;
  }
};

// Is the subgraph induced by `free` (nonempty) connected?
template <int W>
bool is_connected_mask(const std::vector<BitMask<W>>& nbr, const BitMask<W>& free) {
  BitMask<W> reach{};
  reach.set(static_cast<unsigned>(free.first()));
  BitMask<W> frontier = reach;
  for (;;) {
    BitMask<W> grown{};
    frontier.for_each([&](unsigned v) { grown |= nbr[v]; });
    grown &= free;
    const BitMask<W> fresh = grown.andnot(reach);
    if (fresh.none()) break;
    reach |= fresh;
    frontier = fresh;
  }
  return reach == free;
}

// Does every vertex outside `fault` keep at least g neighbors outside it?
template <int W>
bool is_gng_mask(const std::vector<BitMask<W>>& nbr, const BitMask<W>& free, int g) {
  if (g <= 0) return true;
  return free.find_bit([&](unsigned v) {
           return (nbr[v] & free).count() < static_cast<unsigned>(g);
         }) < 0;
}

// Structural distinguishability on raw masks; U is the vertex universe.
// PMC: some free vertex is adjacent to the symmetric difference.
template <int W>
bool distinguishable_pmc_mask(const std::vector<BitMask<W>>& nbr, const BitMask<W>& U,
                              const BitMask<W>& f1, const BitMask<W>& f2) {
  const BitMask<W> rest = U.andnot(f1 | f2);
  if (rest.none()) return false;
  const BitMask<W> diff = f1 ^ f2;
  return diff.find_bit([&](unsigned v) { return nbr[v].intersects(rest); }) >= 0;
}

// MM*: one of the three witness configurations exists.
template <int W>
bool distinguishable_mm_mask(const std::vector<BitMask<W>>& nbr, const BitMask<W>& U,
                             const BitMask<W>& f1, const BitMask<W>& f2) {
  const BitMask<W> rest = U.andnot(f1 | f2);
  if (rest.none()) return false;
  const BitMask<W> diff = f1 ^ f2;
  const BitMask<W> only1 = f1.andnot(f2);
  const BitMask<W> only2 = f2.andnot(f1);
  return rest.find_bit([&](unsigned u) {
           const BitMask<W>& nb = nbr[u];
           if (nb.intersects(diff) && nb.intersects(rest)) return true;
           if ((nb & only1).two_or_more()) return true;
           if ((nb & only2).two_or_more()) return true;
           return false;
         }) >= 0;
}

// Deterministic parallel first-hit over chunks 0..nchunks-1. chunk_fn(c,
// cancelled) scans chunk c in its own ascending order and returns its first
// hit; cancelled() turning true means a strictly earlier chunk already hit
// and the scan may stop. The combined result comes from the lowest-numbered
// chunk with a hit, so the outcome is schedule independent.
template <typename Hit, typename ChunkFn>
std::optional<Hit> run_chunks_first_hit(uint64_t nchunks, unsigned workers,
                                        const ChunkFn& chunk_fn) {
  if (nchunks == 0) return std::nullopt;
  workers = std::min<uint64_t>(workers, nchunks);
  std::vector<std::optional<Hit>> hits(nchunks);
  std::atomic<uint64_t> next{0};
  std::atomic<uint64_t> first_hit{UINT64_MAX};

  auto body = [&] {
    for (;;) {
      const uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= nchunks) return;
      if (c > first_hit.load(std::memory_order_acquire)) return;
      auto cancelled = [&first_hit, c] {
        return first_hit.load(std::memory_order_relaxed) < c;
      };
      auto h = chunk_fn(c, cancelled);
      if (h) {
        hits[c] = std::move(h);
        uint64_t cur = first_hit.load(std::memory_order_relaxed);
        while (c < cur && !first_hit.compare_exchange_weak(cur, c)) {
        }
      }
    }
  };

  if (workers <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }

  for (uint64_t c = 0; c < nchunks; ++c) {
    if (hits[c]) return hits[c];
  }
  return std::nullopt;
}

template <int W>
struct LevelScanResult {
  // Lex rank within the level and the matching subset.
  std::optional<std::pair<uint64_t, BitMask<W>>> hit;
  // True when part of the level fell beyond the candidate budget and was not
  // scanned (only reported when no hit precedes the blocked part).
  bool budget_blocked = false;
};

// Scan a whole level (all k-subsets of [0, m)) for the canonically first
// subset matching pred. `offset` is the number of candidates enumerated
// before this level; enumeration stops at the candidate budget.
template <int W, typename Pred>
LevelScanResult<W> scan_level(int m, int k, const Pred& pred, uint64_t offset,
                              uint64_t budget, unsigned workers) {
  const uint64_t total = binom(m, k);
  LevelScanResult<W> result;
  if (total == 0) return result;
  const uint64_t allowed = offset >= budget ? 0 : std::min(total, budget - offset);
  result.budget_blocked = allowed < total;
  if (allowed == 0) return result;

  constexpr uint64_t kChunk = uint64_t{1} << 20;
  constexpr uint64_t kBlock = 8192;
  const uint64_t nchunks = (allowed + kChunk - 1) / kChunk;

  auto scan_range = [&](uint64_t start, uint64_t len)
      -> std::optional<std::pair<uint64_t, BitMask<W>>> {
    MaskCombo<W> combo;
    if (start == 0) {
      combo.init_first(m, k);
    } else {
      combo.init_rank(m, k, start);
    }
    for (uint64_t i = 0;;) {
      if (pred(combo.mask)) return std::make_pair(start + i, combo.mask);
      if (++i >= len) return std::nullopt;
      combo.advance();
    }
  };

  using Hit = std::pair<uint64_t, BitMask<W>>;
  auto chunk_fn = [&](uint64_t c, const auto& cancelled) -> std::optional<Hit> {
    const uint64_t start = c * kChunk;
    const uint64_t len = std::min(kChunk, allowed - start);
    for (uint64_t off = 0; off < len; off += kBlock) {
      if (cancelled()) return std::nullopt;
      auto h = scan_range(start + off, std::min(kBlock, len - off));
      if (h) return h;
    }
    return std::nullopt;
  };

  result.hit = run_chunks_first_hit<Hit>(nchunks, resolve_workers(workers), chunk_fn);
  if (result.hit) result.budget_blocked = false;
  return result;
}

// Pull-style enumerator of g-good-neighbor conditional faulty sets in
// ascending (size, lexicographic) order. Budget counts every candidate
// subset examined, matches or not.
template <int W>
struct GngEnumerator {
  std::vector<BitMask<W>> nbr;
  BitMask<W> universe;
  int m = 0;
  int g = 0;
  int max_size = 0;
  uint64_t budget = 0;
  uint64_t enumerated = 0;

  int k = 0;
  bool level_active = false;
  bool done = false;
  MaskCombo<W> combo;

  GngEnumerator(const LtqGraph& graph, int g_, int max_size_, uint64_t budget_)
      : nbr(neighbor_masks<W>(graph)),
        universe(BitMask<W>::universe(static_cast<unsigned>(graph.vertex_count()))),
        m(static_cast<int>(graph.vertex_count())),
        g(g_),
        max_size(max_size_),
        budget(budget_) {}

  std::optional<BitMask<W>> next() {
    while (!done) {
      if (!level_active) {
        if (k > max_size) {
          done = true;
          break;
        }
        combo.init_first(m, k);
        level_active = true;
      } else if (!combo.advance()) {
        level_active = false;
        ++k;
        continue;
      }
      if (++enumerated > budget) {
        throw BudgetError("good-neighbor set enumeration exceeded the candidate budget of " +
                          std::to_string(budget));
      }
      const BitMask<W> free = universe.andnot(combo.mask);
      if (is_gng_mask<W>(nbr, free, g)) return combo.mask;
    }
    return std::nullopt;
  }
};

}  // namespace ltqdiag::detail

#include "ltqdiag/diagnosability.hpp"

#include <algorithm>
#include <chrono>
#include <variant>

#include "exhaustive.hpp"
#include "ltqdiag/diagnosis.hpp"
#include "ltqdiag/errors.hpp"
#include "ltqdiag/fault_model.hpp"

namespace ltqdiag {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

}  // namespace

int tg_formula(int n, int g, Model model) {
  const int min_n = model == Model::Pmc ? 4 : 5;
  if (n < min_n) {
    throw ArgumentError("closed form requires n >= " + std::to_string(min_n) + " under " +
                        (model == Model::Pmc ? "PMC" : "MM*") + ", got n = " + std::to_string(n));
  }
  if (g < 1 || g > n - 1) {
    throw ArgumentError("closed form requires 1 <= g <= n-1, got g = " + std::to_string(g));
  }
  if (g <= n - 3) return (1 << g) * (n - g + 1) - 1;
  return (1 << (n - 1)) - 1;
}

VertexSet expand_pattern(const LtqGraph& g, const std::string& pattern) {
  const int n = g.dimension();
  if (static_cast<int>(pattern.size()) != n) {
    throw ArgumentError("pattern width " + std::to_string(pattern.size()) +
                        " does not match n = " + std::to_string(n));
  }
  uint32_t base = 0;
  std::vector<int> free_bits;
  for (int pos = 0; pos < n; ++pos) {
    const int bit = n - 1 - pos;  // pattern is written most significant bit first
    switch (pattern[static_cast<size_t>(pos)]) {
      case '1':
        base |= uint32_t{1} << bit;
        break;
      case '0':
        break;
      case 'X':
      case 'x':
        free_bits.push_back(bit);
        break;
      default:
        throw ArgumentError("pattern characters must be one of 0, 1, X");
    }
  }
  VertexSet out(g.vertex_count());
  for (uint64_t m = 0; m < (uint64_t{1} << free_bits.size()); ++m) {
    uint32_t v = base;
    for (size_t i = 0; i < free_bits.size(); ++i) {
      if ((m >> i) & 1) v |= uint32_t{1} << free_bits[i];
    }
    out.add(v);
  }
  return out;
}

std::pair<VertexSet, VertexSet> witness_pair(const LtqGraph& g, int good) {
  const int n = g.dimension();
  if (good < 1 || good > n - 1) {
    throw ArgumentError("witness_pair requires 1 <= g <= n-1, got g = " + std::to_string(good));
  }
  if (good >= n - 2) {
    // Half-cube pair: everything with top bit 0 versus everything with top
    // bit 1. Removing either side leaves a copy of LTQ_{n-1}.
    std::string zero_half(static_cast<size_t>(n), 'X');
    std::string one_half(static_cast<size_t>(n), 'X');
    zero_half[0] = '0';
    one_half[0] = '1';
    return {expand_pattern(g, zero_half), expand_pattern(g, one_half)};
  }
  // A = 0^(n-g-1) X^g 0; F1 = N(A) assembled from its pattern family,
  // one term per zero-block bit that can flip plus the bit-0 term.
  auto family_pattern = [&](int one_bit) {
    std::string p(static_cast<size_t>(n), '0');
    for (int b = 1; b <= good; ++b) p[static_cast<size_t>(n - 1 - b)] = 'X';
    if (one_bit >= 0) p[static_cast<size_t>(n - 1 - one_bit)] = '1';
    return p;
  };
  const VertexSet a = expand_pattern(g, family_pattern(-1));
  VertexSet f1(g.vertex_count());
  for (int k = good + 1; k <= n - 1; ++k) f1 |= expand_pattern(g, family_pattern(k));
  f1 |= expand_pattern(g, family_pattern(0));
  return {f1, f1 | a};
}

// ---------------------------------------------------------------------------
// Good-neighbor set stream

struct GngSetStream::Impl {
  std::variant<detail::GngEnumerator<1>, detail::GngEnumerator<4>> en;
  uint64_t universe = 0;
};

GngSetStream::GngSetStream(const LtqGraph& g, int good, int max_size, const SearchOptions& opts) {
  if (good < 0 || good > g.dimension()) {
    throw ArgumentError("g out of range: " + std::to_string(good));
  }
  if (max_size < 0 || static_cast<uint64_t>(max_size) > g.vertex_count()) {
    throw ArgumentError("max_size must lie in [0, 2^n]");
  }
  using Variant = std::variant<detail::GngEnumerator<1>, detail::GngEnumerator<4>>;
  if (g.dimension() <= 6) {
    impl_.reset(new Impl{Variant(std::in_place_index<0>, g, good, max_size, opts.budget),
                         g.vertex_count()});
  } else if (g.dimension() <= 8) {
    impl_.reset(new Impl{Variant(std::in_place_index<1>, g, good, max_size, opts.budget),
                         g.vertex_count()});
  } else {
    throw BudgetError("good-neighbor set enumeration is desk-scale only (n <= 8)");
  }
}

GngSetStream::~GngSetStream() = default;
GngSetStream::GngSetStream(GngSetStream&&) noexcept = default;
GngSetStream& GngSetStream::operator=(GngSetStream&&) noexcept = default;

std::optional<VertexSet> GngSetStream::next() {
  return std::visit(
      [&](auto& en) -> std::optional<VertexSet> {
        auto mask = en.next();
        if (!mask) return std::nullopt;
        VertexSet out(impl_->universe);
        auto& words = out.mutable_words();
        for (size_t i = 0; i < words.size() && i < mask->w.size(); ++i) words[i] = mask->w[i];
        return out;
      },
      impl_->en);
}

uint64_t GngSetStream::enumerated() const {
  return std::visit([](const auto& en) { return en.enumerated; }, impl_->en);
}

// ---------------------------------------------------------------------------
// Exhaustive pair search

namespace {

template <int W>
DiagReport tg_brute_impl(const LtqGraph& g, int good, Model model, int size_bound,
                         const SearchOptions& opts) {
  using detail::BitMask;
  const auto start = Clock::now();
  const int m = static_cast<int>(g.vertex_count());
  const auto nbr = detail::neighbor_masks<W>(g);
  const auto universe = BitMask<W>::universe(static_cast<unsigned>(m));
  const unsigned workers = detail::resolve_workers(opts.workers);

  DiagReport report;
  report.n = g.dimension();
  report.g = good;
  report.model = model;
  report.method = Method::BruteForce;

  // All candidate sets in ascending (size, canonical) order, with the first
  // index of each size level.
  std::vector<BitMask<W>> sets;
  std::vector<size_t> level_begin(static_cast<size_t>(size_bound) + 2, 0);
  {
    detail::GngEnumerator<W> en(g, good, size_bound, opts.budget);
    int level = 0;
    while (auto mask = en.next()) {
      const int size = static_cast<int>(mask->count());
      while (level < size) level_begin[static_cast<size_t>(++level)] = sets.size();
      sets.push_back(*mask);
    }
    while (level <= size_bound) level_begin[static_cast<size_t>(++level)] = sets.size();
  }

  const bool mm = model == Model::MmStar;
  auto indistinguishable = [&](const BitMask<W>& a, const BitMask<W>& b) {
    return mm ? !detail::distinguishable_mm_mask<W>(nbr, universe, a, b)
              : !detail::distinguishable_pmc_mask<W>(nbr, universe, a, b);
  };

  uint64_t pairs_in_full_levels = 0;
  for (int level = 1; level <= size_bound; ++level) {
    const size_t begin = level_begin[static_cast<size_t>(level)];
    const size_t end = level_begin[static_cast<size_t>(level) + 1];
    const uint64_t count = end - begin;
    if (count == 0) continue;

    // Pair (i, j): F2 = sets[begin + j], F1 = any earlier set, so
    // max(|F1|, |F2|) = level. Scanned in canonical pair order.
    constexpr uint64_t kPerChunk = 64;
    const uint64_t nchunks = (count + kPerChunk - 1) / kPerChunk;
    using Hit = std::pair<uint64_t, uint64_t>;  // (j, i)
    auto chunk_fn = [&](uint64_t c, const auto& cancelled) -> std::optional<Hit> {
      const uint64_t j_end = std::min(count, (c + 1) * kPerChunk);
      for (uint64_t j = c * kPerChunk; j < j_end; ++j) {
        if (cancelled()) return std::nullopt;
        const BitMask<W>& f2 = sets[begin + j];
        const size_t limit = begin + j;
        for (size_t i = 0; i < limit; ++i) {
          if (indistinguishable(sets[i], f2)) return Hit{j, i};
        }
      }
      return std::nullopt;
    };
    const auto hit = detail::run_chunks_first_hit<Hit>(nchunks, workers, chunk_fn);
    if (hit) {
      const auto [j, i] = *hit;
      VertexSet f1(g.vertex_count());
      VertexSet f2(g.vertex_count());
      sets[i].for_each([&](unsigned v) { f1.add(v); });
      sets[begin + j].for_each([&](unsigned v) { f2.add(v); });
      report.value = level - 1;
      report.exact = true;
      report.witness = {std::move(f1), std::move(f2)};
      report.pairs_checked =
          pairs_in_full_levels + j * static_cast<uint64_t>(begin) + j * (j - 1) / 2 + i + 1;
      report.elapsed = since(start);
      return report;
    }
    pairs_in_full_levels +=
        count * static_cast<uint64_t>(begin) + count * (count - 1) / 2;
  }

  // Every pair in range distinguishable: t_g is at least size_bound.
  report.value = size_bound;
  report.exact = false;
  report.pairs_checked = pairs_in_full_levels;
  report.elapsed = since(start);
  report.notes.push_back("no indistinguishable pair with both sizes <= " +
                         std::to_string(size_bound) + "; value is a lower bound");
  return report;
}

}  // namespace

DiagReport tg_bruteforce(const LtqGraph& g, int good, Model model, int size_bound,
                         const SearchOptions& opts) {
  const int n = g.dimension();
  if (good < 0 || good > n) throw ArgumentError("g out of range: " + std::to_string(good));
  if (size_bound < 1 || static_cast<uint64_t>(size_bound) > (g.vertex_count() >> 1)) {
    throw ArgumentError("size_bound must lie in [1, 2^(n-1)]");
  }
  if (n > 4) {
    throw BudgetError("exhaustive pair search is desk scale only for n <= 4, got n = " +
                      std::to_string(n));
  }
  return tg_brute_impl<1>(g, good, model, size_bound, opts);
}

// ---------------------------------------------------------------------------
// Theorem verification

namespace {

// Largest bound whose full subset space (sizes 1..bound) fits the budget.
int affordable_bound(int m, int want, uint64_t budget) {
  int bound = 0;
  while (bound < want && detail::binom_cumulative(m, bound + 1) - 1 <= budget) ++bound;
  return bound;
}

}  // namespace

DiagReport verify_theorem(int n, int g, Model model, const SearchOptions& opts) {
  const int formula = tg_formula(n, g, model);  // also validates the hypotheses
  const LtqGraph graph = LtqGraph::build(n);

  if (n == 4) {
    // PMC only (the MM* closed form starts at n = 5): full brute force.
    DiagReport report = tg_bruteforce(graph, g, model, 8, opts);
    report.notes.push_back("exhaustive over all pairs with both sizes <= 8");
    return report;
  }

  const auto start = Clock::now();
  DiagReport report;
  report.n = n;
  report.g = g;
  report.model = model;
  report.method = Method::Witness;
  report.value = formula;
  report.exact = false;

  // Upper bound: the witness pair must be a pair of indistinguishable
  // g-good-neighbor sets of the extremal sizes.
  auto [f1, f2] = witness_pair(graph, g);
  const uint64_t expected_f1 =
      g <= n - 3 ? (uint64_t{1} << g) * static_cast<uint64_t>(n - g) : graph.vertex_count() / 2;
  const uint64_t expected_f2 = g <= n - 3 ? (uint64_t{1} << g) * static_cast<uint64_t>(n - g + 1)
                                          : graph.vertex_count() / 2;
  if (f1.size() != expected_f1 || f2.size() != expected_f2 ||
      !is_g_good_neighbor_set(graph, f1, g).is_gng ||
      !is_g_good_neighbor_set(graph, f2, g).is_gng || distinguishable_pmc(graph, f1, f2) ||
      distinguishable_mm(graph, f1, f2)) {
    throw Error("witness pair failed validation for n = " + std::to_string(n) +
                ", g = " + std::to_string(g));
  }
  report.notes.push_back("upper bound certified by an indistinguishable pair of sizes " +
                         std::to_string(f1.size()) + " and " + std::to_string(f2.size()));
  report.witness = {std::move(f1), std::move(f2)};

  // Lower-bound ingredients, checked at the g the bound argument uses (the
  // plateau branch inherits its lower bound from g = n-3 by monotonicity).
  const int gi = std::min(g, n - 3);
  const int m = static_cast<int>(graph.vertex_count());

  const int kappa_target = (1 << gi) * (n - gi);
  const int kappa_bound = affordable_bound(m, kappa_target + 1, opts.budget);
  if (kappa_bound == kappa_target + 1) {
    const KappaResult kr = kappa_g(graph, gi, kappa_bound, opts);
    if (!kr.cut || kr.cut->size != kappa_target) {
      throw Error("minimum conditional cut size disagrees with the closed form");
    }
    report.notes.push_back("minimum " + std::to_string(gi) +
                           "-good-neighbor cut verified exhaustively: size " +
                           std::to_string(kappa_target));
  } else if (kappa_bound >= 1) {
    const KappaResult kr = kappa_g(graph, gi, kappa_bound, opts);
    if (kr.cut) {
      throw Error("found a " + std::to_string(gi) + "-good-neighbor cut of size " +
                  std::to_string(kr.cut->size) + ", below the closed-form minimum");
    }
    report.notes.push_back("no " + std::to_string(gi) + "-good-neighbor cut of size <= " +
                           std::to_string(kappa_bound) + " (full bound " +
                           std::to_string(kappa_target + 1) + " exceeds the budget)");
  } else {
    report.notes.push_back("cut-size ingredient skipped: budget too small");
  }

  const uint64_t order_target = uint64_t{1} << gi;
  const uint64_t order_bound = static_cast<uint64_t>(
      affordable_bound(m, static_cast<int>(order_target), opts.budget));
  if (order_bound >= 2) {
    if (!verify_min_subgraph_order(graph, gi, order_bound, opts)) {
      throw Error("a subgraph of minimum degree " + std::to_string(gi) +
                  " with fewer than 2^g vertices exists");
    }
    report.notes.push_back(
        order_bound == order_target
            ? "minimum subgraph order verified exhaustively: no candidate below " +
                  std::to_string(order_target)
            : "minimum subgraph order checked through size " + std::to_string(order_bound - 1) +
                  " (full bound exceeds the budget)");
  } else {
    report.notes.push_back("subgraph-order ingredient skipped: budget too small");
  }

  report.elapsed = since(start);
  return report;
}

}  // namespace ltqdiag

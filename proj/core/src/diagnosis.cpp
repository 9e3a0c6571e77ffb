#include "ltqdiag/diagnosis.hpp"

#include <string>
#include <utility>

#include "ltqdiag/diagnosability.hpp"
#include "ltqdiag/errors.hpp"

namespace ltqdiag {

namespace {

void check_pair(const LtqGraph& g, const VertexSet& f1, const VertexSet& f2) {
  if (f1.universe() != g.vertex_count() || f2.universe() != g.vertex_count()) {
    throw ArgumentError("fault set universe does not match the graph");
  }
  if (f1 == f2) throw ArgumentError("distinguishability requires two distinct fault sets");
}

}  // namespace

bool distinguishable_pmc(const LtqGraph& g, const VertexSet& f1, const VertexSet& f2) {
  check_pair(g, f1, f2);
  const VertexSet rest = (f1 | f2).complement();
  if (rest.empty()) return false;
  for (uint32_t v : (f1 ^ f2).members()) {
    for (uint32_t w : g.neighbor_labels(v)) {
      if (rest.contains(w)) return true;
    }
  }
  return false;
}

bool distinguishable_mm(const LtqGraph& g, const VertexSet& f1, const VertexSet& f2) {
  check_pair(g, f1, f2);
  const VertexSet rest = (f1 | f2).complement();
  if (rest.empty()) return false;
  const VertexSet diff = f1 ^ f2;
  const VertexSet only1 = f1.difference(f2);
  const VertexSet only2 = f2.difference(f1);
  for (uint32_t u : rest.members()) {
    bool sees_diff = false;
    bool sees_rest = false;
    int in_only1 = 0;
    int in_only2 = 0;
    for (uint32_t w : g.neighbor_labels(u)) {
      sees_diff |= diff.contains(w);
      sees_rest |= rest.contains(w);
      in_only1 += only1.contains(w) ? 1 : 0;
      in_only2 += only2.contains(w) ? 1 : 0;
    }
    if ((sees_diff && sees_rest) || in_only1 >= 2 || in_only2 >= 2) return true;
  }
  return false;
}

bool jointly_consistent_pmc(const LtqGraph& g, const VertexSet& f1, const VertexSet& f2) {
  check_pair(g, f1, f2);
  // Every test (u, v) with a fault-free tester under both hypotheses must be
  // forced to the same outcome; other tests are free on at least one side.
  const VertexSet rest = (f1 | f2).complement();
  for (uint32_t u : rest.members()) {
    for (uint32_t v : g.neighbor_labels(u)) {
      if (f1.contains(v) != f2.contains(v)) return false;
    }
  }
  return true;
}

bool jointly_consistent_mm(const LtqGraph& g, const VertexSet& f1, const VertexSet& f2) {
  check_pair(g, f1, f2);
  const VertexSet rest = (f1 | f2).complement();
  for (uint32_t w : rest.members()) {
    const auto labels = g.neighbor_labels(w);
    for (size_t i = 0; i < labels.size(); ++i) {
      for (size_t j = i + 1; j < labels.size(); ++j) {
        const bool hit1 = f1.contains(labels[i]) || f1.contains(labels[j]);
        const bool hit2 = f2.contains(labels[i]) || f2.contains(labels[j]);
        if (hit1 != hit2) return false;
      }
    }
  }
  return true;
}

namespace {

template <typename ConsistencyFn>
DiagnosisResult diagnose_common(const LtqGraph& g, int good, int t, const SearchOptions& opts,
                                const ConsistencyFn& consistent) {
  if (t < 0) throw ArgumentError("diagnose requires t >= 0");
  const int max_size = static_cast<int>(
      std::min<uint64_t>(static_cast<uint64_t>(t), g.vertex_count()));
  DiagnosisResult result;
  GngSetStream stream(g, good, max_size, opts);
  while (auto candidate = stream.next()) {
    if (consistent(*candidate)) result.candidates.push_back(std::move(*candidate));
  }
  result.sets_enumerated = stream.enumerated();
  if (result.candidates.empty()) {
    result.kind = DiagnosisResult::Kind::NoCandidate;
  } else if (result.candidates.size() == 1) {
    result.kind = DiagnosisResult::Kind::Unique;
  } else {
    result.kind = DiagnosisResult::Kind::Ambiguous;
  }
  return result;
}

}  // namespace

DiagnosisResult diagnose(const LtqGraph& g, const PmcSyndrome& s, int good, int t,
                         const SearchOptions& opts) {
  const uint64_t count = g.vertex_count();
  if (s.n != g.dimension() ||
      s.outcomes.size() != count * static_cast<uint64_t>(g.dimension())) {
    throw ArgumentError("PMC syndrome domain does not match the graph");
  }
  // Forced-outcome view of the syndrome: for a fault-free tester u, every
  // 1-outcome neighbor must be faulty and every 0-outcome neighbor fault
  // free.
  std::vector<VertexSet> ones(count, VertexSet(count));
  std::vector<VertexSet> zeros(count, VertexSet(count));
  uint64_t idx = 0;
  for (uint64_t u = 0; u < count; ++u) {
    for (uint32_t v : g.neighbor_labels(static_cast<uint32_t>(u))) {
      if (s.outcomes[idx++]) {
        ones[u].add(v);
      } else {
        zeros[u].add(v);
      }
    }
  }
  auto consistent = [&](const VertexSet& fault) {
    for (uint64_t u = 0; u < count; ++u) {
      if (fault.contains(u)) continue;
      if (!ones[u].is_subset_of(fault)) return false;
      if (zeros[u].intersects(fault)) return false;
    }
    return true;
  };
  return diagnose_common(g, good, t, opts, consistent);
}

DiagnosisResult diagnose(const LtqGraph& g, const MmSyndrome& s, int good, int t,
                         const SearchOptions& opts) {
  const uint64_t count = g.vertex_count();
  const int n = g.dimension();
  if (s.n != n ||
      s.outcomes.size() != count * (static_cast<uint64_t>(n) * (n - 1) / 2)) {
    throw ArgumentError("MM* syndrome domain does not match the graph");
  }
  // Per comparator: the union of all pairs compared with outcome 0 (must stay
  // fault free), and the list of pairs with outcome 1 (each must touch F).
  std::vector<VertexSet> zero_union(count, VertexSet(count));
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> one_pairs(count);
  uint64_t idx = 0;
  for (uint64_t w = 0; w < count; ++w) {
    const auto labels = g.neighbor_labels(static_cast<uint32_t>(w));
    for (size_t i = 0; i < labels.size(); ++i) {
      for (size_t j = i + 1; j < labels.size(); ++j) {
        if (s.outcomes[idx++]) {
          one_pairs[w].emplace_back(labels[i], labels[j]);
        } else {
          zero_union[w].add(labels[i]);
          zero_union[w].add(labels[j]);
        }
      }
    }
  }
  auto consistent = [&](const VertexSet& fault) {
    for (uint64_t w = 0; w < count; ++w) {
      if (fault.contains(w)) continue;
      if (zero_union[w].intersects(fault)) return false;
      for (const auto& [u, v] : one_pairs[w]) {
        if (!fault.contains(u) && !fault.contains(v)) return false;
      }
    }
    return true;
  };
  return diagnose_common(g, good, t, opts, consistent);
}

}  // namespace ltqdiag

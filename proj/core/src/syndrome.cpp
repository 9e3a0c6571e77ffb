#include "ltqdiag/syndrome.hpp"

#include <random>
#include <string>

#include "ltqdiag/errors.hpp"

namespace ltqdiag {

namespace {

void check_fault_universe(const LtqGraph& g, const VertexSet& fault) {
  if (fault.universe() != g.vertex_count()) {
    throw ArgumentError("fault set universe " + std::to_string(fault.universe()) +
                        " does not match 2^n = " + std::to_string(g.vertex_count()));
  }
}

void check_pmc_domain(const LtqGraph& g, const PmcSyndrome& s) {
  const uint64_t expected = g.vertex_count() * static_cast<uint64_t>(g.dimension());
  if (s.n != g.dimension() || s.outcomes.size() != expected) {
    throw ArgumentError("PMC syndrome domain mismatch: syndrome n = " + std::to_string(s.n) +
                        ", graph n = " + std::to_string(g.dimension()));
  }
}

void check_mm_domain(const LtqGraph& g, const MmSyndrome& s) {
  const int n = g.dimension();
  const uint64_t expected = g.vertex_count() * (static_cast<uint64_t>(n) * (n - 1) / 2);
  if (s.n != n || s.outcomes.size() != expected) {
    throw ArgumentError("MM* syndrome domain mismatch: syndrome n = " + std::to_string(s.n) +
                        ", graph n = " + std::to_string(n));
  }
}

// Rank of `target` in the ascending neighbor list of `of`.
int neighbor_rank(const LtqGraph& g, uint32_t of, uint32_t target) {
  const auto labels = g.neighbor_labels(of);
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == target) return static_cast<int>(i);
  }
  throw ArgumentError("vertices " + std::to_string(of) + " and " + std::to_string(target) +
                      " are not adjacent");
}

uint64_t pmc_index(const LtqGraph& g, uint32_t tester, uint32_t testee) {
  return static_cast<uint64_t>(tester) * g.dimension() + neighbor_rank(g, tester, testee);
}

uint64_t pair_rank(int n, int i, int j) {
  // (i, j) with i < j among n ranks, row-major.
  return static_cast<uint64_t>(i) * n - static_cast<uint64_t>(i) * (i + 1) / 2 + (j - i - 1);
}

uint64_t mm_index(const LtqGraph& g, uint32_t comparator, uint32_t u, uint32_t v) {
  if (u == v) throw ArgumentError("MM* comparison requires two distinct neighbors");
  const int n = g.dimension();
  int i = neighbor_rank(g, comparator, u);
  int j = neighbor_rank(g, comparator, v);
  if (i > j) std::swap(i, j);
  const uint64_t per = static_cast<uint64_t>(n) * (n - 1) / 2;
  return comparator * per + pair_rank(n, i, j);
}

void check_bit(int outcome) {
  if (outcome != 0 && outcome != 1) {
    throw ArgumentError("test outcome must be 0 or 1, got " + std::to_string(outcome));
  }
}

struct PolicyBits {
  const FaultyUnitPolicy& policy;
  std::mt19937_64 rng;

  explicit PolicyBits(const FaultyUnitPolicy& p) : policy(p), rng(p.seed) {}

  uint8_t next() {
    switch (policy.kind) {
      case FaultyUnitPolicy::Kind::AllZero:
        return 0;
      case FaultyUnitPolicy::Kind::AllOne:
        return 1;
      case FaultyUnitPolicy::Kind::Random:
        return static_cast<uint8_t>(rng() & 1);
    }
    return 0;
  }
};

}  // namespace

PmcSyndrome make_empty_pmc_syndrome(const LtqGraph& g) {
  PmcSyndrome s;
  s.n = g.dimension();
  s.outcomes.assign(g.vertex_count() * static_cast<uint64_t>(g.dimension()), 0);
  return s;
}

MmSyndrome make_empty_mm_syndrome(const LtqGraph& g) {
  MmSyndrome s;
  s.n = g.dimension();
  const int n = g.dimension();
  s.outcomes.assign(g.vertex_count() * (static_cast<uint64_t>(n) * (n - 1) / 2), 0);
  return s;
}

int pmc_outcome(const LtqGraph& g, const PmcSyndrome& s, uint32_t tester, uint32_t testee) {
  check_pmc_domain(g, s);
  return s.outcomes[pmc_index(g, tester, testee)];
}

void set_pmc_outcome(const LtqGraph& g, PmcSyndrome& s, uint32_t tester, uint32_t testee,
                     int outcome) {
  check_pmc_domain(g, s);
  check_bit(outcome);
  s.outcomes[pmc_index(g, tester, testee)] = static_cast<uint8_t>(outcome);
}

int mm_outcome(const LtqGraph& g, const MmSyndrome& s, uint32_t comparator, uint32_t u,
               uint32_t v) {
  check_mm_domain(g, s);
  return s.outcomes[mm_index(g, comparator, u, v)];
}

void set_mm_outcome(const LtqGraph& g, MmSyndrome& s, uint32_t comparator, uint32_t u, uint32_t v,
                    int outcome) {
  check_mm_domain(g, s);
  check_bit(outcome);
  s.outcomes[mm_index(g, comparator, u, v)] = static_cast<uint8_t>(outcome);
}

PmcSyndrome pmc_syndrome(const LtqGraph& g, const VertexSet& fault,
                         const FaultyUnitPolicy& policy) {
  check_fault_universe(g, fault);
  PmcSyndrome s = make_empty_pmc_syndrome(g);
  PolicyBits bits(policy);
  const uint64_t count = g.vertex_count();
  uint64_t idx = 0;
  for (uint64_t u = 0; u < count; ++u) {
    const bool tester_faulty = fault.contains(u);
    for (uint32_t v : g.neighbor_labels(static_cast<uint32_t>(u))) {
      s.outcomes[idx++] =
          tester_faulty ? bits.next() : static_cast<uint8_t>(fault.contains(v) ? 1 : 0);
    }
  }
  return s;
}

MmSyndrome mm_syndrome(const LtqGraph& g, const VertexSet& fault, const FaultyUnitPolicy& policy) {
  check_fault_universe(g, fault);
  MmSyndrome s = make_empty_mm_syndrome(g);
  PolicyBits bits(policy);
  const uint64_t count = g.vertex_count();
  uint64_t idx = 0;
  for (uint64_t w = 0; w < count; ++w) {
    const bool comparator_faulty = fault.contains(w);
    const auto labels = g.neighbor_labels(static_cast<uint32_t>(w));
    for (size_t i = 0; i < labels.size(); ++i) {
      for (size_t j = i + 1; j < labels.size(); ++j) {
        uint8_t bit;
        if (comparator_faulty) {
          bit = bits.next();
        } else {
          bit = (fault.contains(labels[i]) || fault.contains(labels[j])) ? 1 : 0;
        }
        s.outcomes[idx++] = bit;
      }
    }
  }
  return s;
}

bool pmc_consistent(const LtqGraph& g, const VertexSet& fault, const PmcSyndrome& s) {
  check_fault_universe(g, fault);
  check_pmc_domain(g, s);
  const uint64_t count = g.vertex_count();
  uint64_t idx = 0;
  for (uint64_t u = 0; u < count; ++u) {
    if (fault.contains(u)) {
      idx += g.dimension();
      continue;
    }
    for (uint32_t v : g.neighbor_labels(static_cast<uint32_t>(u))) {
      if (s.outcomes[idx++] != (fault.contains(v) ? 1 : 0)) return false;
    }
  }
  return true;
}

bool mm_consistent(const LtqGraph& g, const VertexSet& fault, const MmSyndrome& s) {
  check_fault_universe(g, fault);
  check_mm_domain(g, s);
  const int n = g.dimension();
  const uint64_t per = static_cast<uint64_t>(n) * (n - 1) / 2;
  const uint64_t count = g.vertex_count();
  uint64_t idx = 0;
  for (uint64_t w = 0; w < count; ++w) {
    if (fault.contains(w)) {
      idx += per;
      continue;
    }
    const auto labels = g.neighbor_labels(static_cast<uint32_t>(w));
    for (size_t i = 0; i < labels.size(); ++i) {
      for (size_t j = i + 1; j < labels.size(); ++j) {
        const uint8_t expected =
            (fault.contains(labels[i]) || fault.contains(labels[j])) ? 1 : 0;
        if (s.outcomes[idx++] != expected) return false;
      }
    }
  }
  return true;
}

}  // namespace ltqdiag

#include <doctest.h>

#include <random>

#include "ltqdiag/diagnosability.hpp"
#include "ltqdiag/diagnosis.hpp"
#include "ltqdiag/errors.hpp"
#include "ltqdiag/fault_model.hpp"
#include "ltqdiag/graph.hpp"

using namespace ltqdiag;

namespace {

VertexSet mask_to_set(uint64_t mask, uint64_t universe) {
  VertexSet out(universe);
  for (uint64_t v = 0; v < universe; ++v) {
    if ((mask >> v) & 1) out.add(v);
  }
  return out;
}

}  // namespace

TEST_CASE("distinguishability of the extremal pairs") {
  const LtqGraph g = LtqGraph::build(4);
  const auto [f1, f2] = witness_pair(g, 1);
  CHECK_FALSE(distinguishable_pmc(g, f1, f2));
  CHECK_FALSE(distinguishable_mm(g, f1, f2));
  CHECK(jointly_consistent_pmc(g, f1, f2));
  CHECK(jointly_consistent_mm(g, f1, f2));

  const auto [h1, h2] = witness_pair(g, 3);  // the two half cubes
  CHECK(h1.size() == 8);
  CHECK(h2.size() == 8);
  CHECK_FALSE(distinguishable_pmc(g, h1, h2));
  CHECK_FALSE(distinguishable_mm(g, h1, h2));
}

TEST_CASE("a single extra fault with free neighbors is visible") {
  const LtqGraph g = LtqGraph::build(4);
  const VertexSet none(16);
  const VertexSet one = VertexSet::of(16, {0b0101});
  CHECK(distinguishable_pmc(g, none, one));
  CHECK(distinguishable_mm(g, none, one));
  CHECK_FALSE(jointly_consistent_pmc(g, none, one));
  CHECK_FALSE(jointly_consistent_mm(g, none, one));
}

TEST_CASE("distinguishability rejects equal sets") {
  const LtqGraph g = LtqGraph::build(3);
  const VertexSet f = VertexSet::of(8, {1, 2});
  CHECK_THROWS_AS((void)distinguishable_pmc(g, f, f), ArgumentError);
  CHECK_THROWS_AS((void)jointly_consistent_mm(g, f, f), ArgumentError);
}

TEST_CASE("structural and semantic routes agree on every pair of LTQ_2") {
  const LtqGraph g = LtqGraph::build(2);
  for (uint64_t a = 0; a < 16; ++a) {
    for (uint64_t b = a + 1; b < 16; ++b) {
      const VertexSet f1 = mask_to_set(a, 4);
      const VertexSet f2 = mask_to_set(b, 4);
      REQUIRE(distinguishable_pmc(g, f1, f2) == !jointly_consistent_pmc(g, f1, f2));
      REQUIRE(distinguishable_mm(g, f1, f2) == !jointly_consistent_mm(g, f1, f2));
    }
  }
}

TEST_CASE("structural and semantic routes agree on seeded random pairs (n=4,5)") {
  std::mt19937_64 rng(2024);
  for (int n = 4; n <= 5; ++n) {
    const LtqGraph g = LtqGraph::build(n);
    const uint64_t full = (uint64_t{1} << g.vertex_count()) - 1;
    for (int trial = 0; trial < 2000; ++trial) {
      const uint64_t a = rng() & full;
      uint64_t b = rng() & full;
      while (b == a) b = rng() & full;
      const VertexSet f1 = mask_to_set(a, g.vertex_count());
      const VertexSet f2 = mask_to_set(b, g.vertex_count());
      REQUIRE(distinguishable_pmc(g, f1, f2) == !jointly_consistent_pmc(g, f1, f2));
      REQUIRE(distinguishable_mm(g, f1, f2) == !jointly_consistent_mm(g, f1, f2));
    }
  }
}

TEST_CASE("a nested pair with a doubly-free neighbor is MM*-distinguishable") {
  // If some v in F2-F1 has a free neighbor u that has another free neighbor,
  // condition (1) applies.
  std::mt19937_64 rng(31337);
  const LtqGraph g = LtqGraph::build(4);
  int hits = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const uint64_t m1 = rng() & rng() & 0xFFFF;
    uint64_t extra = rng() & 0xFFFF & ~m1;
    if (!extra) continue;
    const VertexSet f1 = mask_to_set(m1, 16);
    const VertexSet f2 = mask_to_set(m1 | extra, 16);
    const VertexSet rest = f2.complement();
    bool hypothesis = false;
    for (uint32_t v : f2.difference(f1).members()) {
      for (uint32_t u : g.neighbor_labels(v)) {
        if (!rest.contains(u)) continue;
        for (uint32_t w : g.neighbor_labels(u)) {
          if (w != v && rest.contains(w)) hypothesis = true;
        }
      }
    }
    if (hypothesis) {
      REQUIRE(distinguishable_mm(g, f1, f2));
      ++hits;
    }
  }
  CHECK(hits > 100);  // the hypothesis is common under this sampling
}

TEST_CASE("diagnose recovers a planted fault set under PMC") {
  const LtqGraph g = LtqGraph::build(4);
  const VertexSet fault = VertexSet::of(16, {0b0001});
  for (const auto& policy : {FaultyUnitPolicy::all_zero(), FaultyUnitPolicy::all_one(),
                             FaultyUnitPolicy::random(kDefaultSeed)}) {
    const DiagnosisResult r = diagnose(g, pmc_syndrome(g, fault, policy), 1, 7);
    REQUIRE(r.kind == DiagnosisResult::Kind::Unique);
    CHECK(r.unique() == fault);
  }
}

TEST_CASE("diagnose on an all-zero syndrome returns the empty set") {
  const LtqGraph g = LtqGraph::build(4);
  const DiagnosisResult r = diagnose(g, make_empty_pmc_syndrome(g), 1, 7);
  REQUIRE(r.kind == DiagnosisResult::Kind::Unique);
  CHECK(r.unique().empty());
}

TEST_CASE("diagnose reports an ambiguity beyond t_g") {
  const LtqGraph g = LtqGraph::build(4);
  const auto [f1, f2] = witness_pair(g, 1);
  // A syndrome consistent with both witness sets: every tester reports per
  // membership in F1. Free testers under F2 never see the difference.
  PmcSyndrome s = make_empty_pmc_syndrome(g);
  for (uint32_t u = 0; u < 16; ++u) {
    for (uint32_t v : g.neighbor_labels(u)) {
      set_pmc_outcome(g, s, u, v, f1.contains(v) ? 1 : 0);
    }
  }
  REQUIRE(pmc_consistent(g, f1, s));
  REQUIRE(pmc_consistent(g, f2, s));
  const DiagnosisResult r = diagnose(g, s, 1, 8);
  REQUIRE(r.kind == DiagnosisResult::Kind::Ambiguous);
  REQUIRE(r.candidates.size() >= 2);
  const auto found = [&](const VertexSet& f) {
    for (const auto& c : r.candidates) {
      if (c == f) return true;
    }
    return false;
  };
  CHECK(found(f1));
  CHECK(found(f2));
  // Candidates ascend in (size, canonical) order.
  for (size_t i = 1; i < r.candidates.size(); ++i) {
    const auto& prev = r.candidates[i - 1];
    const auto& cur = r.candidates[i];
    REQUIRE((prev.size() < cur.size() ||
             (prev.size() == cur.size() && VertexSet::canonical_less(prev, cur))));
  }
}

TEST_CASE("diagnose under MM* and the no-candidate case") {
  const LtqGraph g = LtqGraph::build(4);
  const VertexSet fault = VertexSet::of(16, {0b0001});
  const MmSyndrome s = mm_syndrome(g, fault, FaultyUnitPolicy::all_zero());
  const DiagnosisResult r = diagnose(g, s, 1, 1);
  REQUIRE(r.kind == DiagnosisResult::Kind::Unique);
  CHECK(r.unique() == fault);

  // t = 0 leaves only the empty set, which the syndrome contradicts.
  const DiagnosisResult none = diagnose(g, s, 1, 0);
  CHECK(none.kind == DiagnosisResult::Kind::NoCandidate);
  CHECK_THROWS_AS(diagnose(g, s, 1, -1), ArgumentError);
}

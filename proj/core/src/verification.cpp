#include "ltqdiag/verification.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>

#include "ltqdiag/diagnosability.hpp"
#include "ltqdiag/diagnosis.hpp"
#include "ltqdiag/errors.hpp"
#include "ltqdiag/fault_model.hpp"
#include "ltqdiag/graph.hpp"
#include "ltqdiag/serial.hpp"
#include "ltqdiag/syndrome.hpp"

namespace ltqdiag {

namespace {

using Clock = std::chrono::steady_clock;

// Shared state across criteria: graphs and the n=4 exhaustive reports are
// reused instead of recomputed.
class Context {
 public:
  explicit Context(const AcceptanceOptions& opts) : opts_(opts) {}

  const AcceptanceOptions& opts() const { return opts_; }

  SearchOptions search() const { return SearchOptions{opts_.budget, opts_.workers}; }

  const LtqGraph& graph(int n) {
    auto it = graphs_.find(n);
    if (it == graphs_.end()) it = graphs_.emplace(n, LtqGraph::build(n)).first;
    return it->second;
  }

  const DiagReport& brute4(int g, Model model) {
    const auto key = std::make_pair(g, model == Model::Pmc ? 0 : 1);
    auto it = brutes_.find(key);
    if (it == brutes_.end()) {
      it = brutes_.emplace(key, tg_bruteforce(graph(4), g, model, 8, search())).first;
    }
    return it->second;
  }

 private:
  AcceptanceOptions opts_;
  std::map<int, LtqGraph> graphs_;
  std::map<std::pair<int, int>, DiagReport> brutes_;
};

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

uint64_t mask_rand(std::mt19937_64& rng, int shape) {
  switch (shape % 3) {
    case 1:
      return rng() & rng();  // sparse
    case 2:
      return rng() | rng();  // dense
    default:
      return rng();
  }
}

VertexSet set_from_mask(uint64_t mask, uint64_t universe) {
  VertexSet out(universe);
  for (uint64_t v = 0; v < universe && v < 64; ++v) {
    if ((mask >> v) & 1) out.add(v);
  }
  return out;
}

// Deterministic k-subset sample (Fisher-Yates prefix).
VertexSet sample_subset(std::mt19937_64& rng, uint64_t universe, int k) {
  std::vector<uint32_t> pool(universe);
  for (uint64_t i = 0; i < universe; ++i) pool[i] = static_cast<uint32_t>(i);
  VertexSet out(universe);
  for (int i = 0; i < k; ++i) {
    const uint64_t j = i + rng() % (universe - i);
    std::swap(pool[i], pool[j]);
    out.add(pool[i]);
  }
  return out;
}

// --- criterion bodies -------------------------------------------------------

Verdict definition_equivalence(Context& ctx) {
  Verdict v;
  uint64_t vertices = 0;
  for (int n = 2; n <= 10; ++n) {
    const LtqGraph& g = ctx.graph(n);
    for (uint64_t x = 0; x < g.vertex_count(); ++x) {
      if (g.neighbors(static_cast<uint32_t>(x)) !=
          g.neighbors_recursive(static_cast<uint32_t>(x))) {
        v.fail("definitions disagree at n=" + std::to_string(n) + ", vertex " +
               std::to_string(x));
        return v;
      }
      ++vertices;
    }
  }
  v.note("recursive and non-recursive neighborhoods identical on " + std::to_string(vertices) +
         " vertices (n=2..10)");
  return v;
}

Verdict structural_invariants(Context& ctx) {
  Verdict v;
  for (int n = 2; n <= 10; ++n) {
    const LtqGraph& g = ctx.graph(n);
    const uint64_t count = g.vertex_count();
    if (count != (uint64_t{1} << n)) {
      v.fail("vertex count wrong at n=" + std::to_string(n));
      return v;
    }
    std::vector<VertexSet> nbr;
    nbr.reserve(count);
    for (uint64_t x = 0; x < count; ++x) nbr.push_back(g.neighbors(static_cast<uint32_t>(x)));
    for (uint64_t x = 0; x < count; ++x) {
      if (nbr[x].size() != static_cast<uint64_t>(n)) {
        v.fail("degree != n at n=" + std::to_string(n) + ", vertex " + std::to_string(x));
        return v;
      }
      if (nbr[x].contains(x)) {
        v.fail("self-loop at n=" + std::to_string(n));
        return v;
      }
      for (uint32_t y : nbr[x].members()) {
        if (!nbr[y].contains(x)) {
          v.fail("asymmetric adjacency at n=" + std::to_string(n));
          return v;
        }
      }
    }
    if (g.has_triangle()) {
      v.fail("triangle found at n=" + std::to_string(n));
      return v;
    }
    // Any two distinct vertices share at most two neighbors.
    for (uint64_t x = 0; x < count; ++x) {
      for (uint64_t y = x + 1; y < count; ++y) {
        uint64_t shared = 0;
        const auto& wx = nbr[x].words();
        const auto& wy = nbr[y].words();
        for (size_t i = 0; i < wx.size(); ++i) {
          shared += static_cast<uint64_t>(std::popcount(wx[i] & wy[i]));
        }
        if (shared > 2) {
          v.fail("more than two common neighbors at n=" + std::to_string(n));
          return v;
        }
      }
    }
  }
  v.note("n-regular, symmetric, triangle-free, <=2 common neighbors for n=2..10");
  return v;
}

Verdict kappa_values(Context& ctx) {
  Verdict v;
  const struct {
    int n, g, expected;
  } cases[] = {{4, 0, 4}, {4, 1, 6}, {4, 2, 8}, {5, 1, 8}, {5, 2, 12}};
  std::string seen;
  for (const auto& c : cases) {
    const LtqGraph& g = ctx.graph(c.n);
    const KappaResult result = kappa_g(g, c.g, c.expected + 1, ctx.search());
    if (!result.cut) {
      v.fail("no conditional cut found for (n=" + std::to_string(c.n) +
             ", g=" + std::to_string(c.g) + ")");
      continue;
    }
    const CutReport& cut = *result.cut;
    if (cut.size != c.expected) {
      v.fail("kappa(n=" + std::to_string(c.n) + ", g=" + std::to_string(c.g) + ") = " +
             std::to_string(cut.size) + ", expected " + std::to_string(c.expected));
      continue;
    }
    if (cut.component_count < 2 || !is_g_good_neighbor_set(g, cut.cut, c.g).is_gng) {
      v.fail("returned cut is not a valid conditional cut for (n=" + std::to_string(c.n) +
             ", g=" + std::to_string(c.g) + ")");
      continue;
    }
    if (!seen.empty()) seen += ", ";
    seen += "(" + std::to_string(c.n) + "," + std::to_string(c.g) + ")=" +
            std::to_string(cut.size);
  }
  if (v.pass) v.note("minimum conditional cut sizes exact: " + seen);
  return v;
}

Verdict min_subgraph_order(Context& ctx) {
  Verdict v;
  const LtqGraph& g = ctx.graph(4);
  for (int deg = 1; deg <= 3; ++deg) {
    if (!verify_min_subgraph_order(g, deg, uint64_t{1} << deg, ctx.search())) {
      v.fail("subgraph of minimum degree " + std::to_string(deg) +
             " with fewer than 2^g vertices exists at n=4");
    }
  }
  if (v.pass) v.note("no subset of size < 2^g induces min degree >= g, g=1..3, n=4");
  return v;
}

Verdict pmc_exact_n4(Context& ctx) {
  Verdict v;
  std::string seen;
  for (int g = 1; g <= 3; ++g) {
    const DiagReport& report = ctx.brute4(g, Model::Pmc);
    const int expected = tg_formula(4, g, Model::Pmc);
    if (!report.exact) {
      v.fail("g=" + std::to_string(g) + ": search not exhaustive");
      continue;
    }
    if (report.value != expected) {
      v.fail("g=" + std::to_string(g) + ": brute force " + std::to_string(report.value) +
             " != closed form " + std::to_string(expected));
      continue;
    }
    if (!seen.empty()) seen += ", ";
    seen += "t_" + std::to_string(g) + "=" + std::to_string(report.value);
  }
  if (v.pass) v.note("PMC exact at n=4: " + seen);
  return v;
}

Verdict witness_bounds(Context& ctx) {
  Verdict v;
  int pairs = 0;
  for (int n = 5; n <= 8; ++n) {
    const LtqGraph& g = ctx.graph(n);
    for (int good = 1; good <= n - 1; ++good) {
      const auto [f1, f2] = witness_pair(g, good);
      const uint64_t half = g.vertex_count() / 2;
      const uint64_t s1 = good <= n - 3
                              ? (uint64_t{1} << good) * static_cast<uint64_t>(n - good)
                              : half;
      const uint64_t s2 = good <= n - 3
                              ? (uint64_t{1} << good) * static_cast<uint64_t>(n - good + 1)
                              : half;
      const std::string where = "(n=" + std::to_string(n) + ", g=" + std::to_string(good) + ")";
      if (f1.size() != s1 || f2.size() != s2) {
        v.fail("witness sizes wrong at " + where);
        continue;
      }
      if (!is_g_good_neighbor_set(g, f1, good).is_gng ||
          !is_g_good_neighbor_set(g, f2, good).is_gng) {
        v.fail("witness set not g-good-neighbor at " + where);
        continue;
      }
      if (distinguishable_pmc(g, f1, f2) || distinguishable_mm(g, f1, f2)) {
        v.fail("witness pair distinguishable at " + where);
        continue;
      }
      ++pairs;
    }
  }
  if (v.pass) {
    v.note(std::to_string(pairs) + " witness pairs valid for n=5..8, every g in 1..n-1");
  }
  return v;
}

Verdict monotonicity(Context& ctx) {
  Verdict v;
  for (Model model : {Model::Pmc, Model::MmStar}) {
    int prev = -1;
    for (int g = 0; g <= 3; ++g) {
      const DiagReport& report = ctx.brute4(g, model);
      if (!report.exact) {
        v.fail("n=4 " + model_name(model) + " g=" + std::to_string(g) + " not exact");
        continue;
      }
      if (report.value < prev) {
        v.fail("t_g decreased at n=4 " + model_name(model) + " g=" + std::to_string(g));
      }
      prev = report.value;
    }
  }
  for (int n = 5; n <= 8; ++n) {
    for (Model model : {Model::Pmc, Model::MmStar}) {
      int prev = -1;
      for (int g = 1; g <= n - 1; ++g) {
        const int value = tg_formula(n, g, model);
        if (value < prev) {
          v.fail("closed form decreases at n=" + std::to_string(n) +
                 ", g=" + std::to_string(g));
        }
        prev = value;
      }
    }
  }
  if (v.pass) {
    v.note("t_g non-decreasing in g: n=4 exhaustive values (both models) and closed form "
           "n=5..8; full n>=5 values rest on criteria 3, 4, 6");
  }
  return v;
}

Verdict model_semantics_equivalence(Context& ctx) {
  Verdict v;
  uint64_t checked = 0;
  // Exhaustive over all distinct subset pairs of LTQ_2 and LTQ_3.
  for (int n = 2; n <= 3; ++n) {
    const LtqGraph& g = ctx.graph(n);
    const uint64_t subsets = uint64_t{1} << g.vertex_count();
    for (uint64_t a = 0; a < subsets; ++a) {
      const VertexSet f1 = set_from_mask(a, g.vertex_count());
      for (uint64_t b = a + 1; b < subsets; ++b) {
        const VertexSet f2 = set_from_mask(b, g.vertex_count());
        if (distinguishable_pmc(g, f1, f2) == jointly_consistent_pmc(g, f1, f2)) {
          v.fail("PMC semantics mismatch at n=" + std::to_string(n));
          return v;
        }
        if (distinguishable_mm(g, f1, f2) == jointly_consistent_mm(g, f1, f2)) {
          v.fail("MM* semantics mismatch at n=" + std::to_string(n));
          return v;
        }
        ++checked;
      }
    }
  }
  // Seeded random pairs at n = 4 and 5.
  for (int n = 4; n <= 5; ++n) {
    const LtqGraph& g = ctx.graph(n);
    std::mt19937_64 rng(kDefaultSeed + n);
    const uint64_t full = (n == 4) ? 0xFFFFull : 0xFFFFFFFFull;
    for (int i = 0; i < 10000; ++i) {
      const uint64_t a = mask_rand(rng, i) & full;
      uint64_t b = mask_rand(rng, i + 1) & full;
      while (b == a) b = rng() & full;
      const VertexSet f1 = set_from_mask(a, g.vertex_count());
      const VertexSet f2 = set_from_mask(b, g.vertex_count());
      if (distinguishable_pmc(g, f1, f2) == jointly_consistent_pmc(g, f1, f2) ||
          distinguishable_mm(g, f1, f2) == jointly_consistent_mm(g, f1, f2)) {
        v.fail("semantics mismatch on random pair at n=" + std::to_string(n));
        return v;
      }
      ++checked;
    }
  }
  v.note("structural == negated joint consistency on " + std::to_string(checked) +
         " pairs (exhaustive n=2,3; 10^4 random each n=4,5)");
  return v;
}

Verdict diagnoser_soundness(Context& ctx) {
  Verdict v;
  const LtqGraph& g = ctx.graph(4);
  const FaultyUnitPolicy policies[] = {FaultyUnitPolicy::all_zero(), FaultyUnitPolicy::all_one(),
                                       FaultyUnitPolicy::random(kDefaultSeed)};
  for (Model model : {Model::Pmc, Model::MmStar}) {
    const int t = model == Model::Pmc ? tg_formula(4, 1, Model::Pmc)
                                      : ctx.brute4(1, Model::MmStar).value;
    std::mt19937_64 rng(kDefaultSeed + (model == Model::Pmc ? 9 : 90));
    int trials = 0;
    for (int i = 0; i < 200; ++i) {
      VertexSet fault(g.vertex_count());
      for (;;) {
        const int k = static_cast<int>(rng() % static_cast<uint64_t>(t + 1));
        fault = sample_subset(rng, g.vertex_count(), k);
        if (is_g_good_neighbor_set(g, fault, 1).is_gng) break;
      }
      for (const auto& policy : policies) {
        DiagnosisResult result;
        if (model == Model::Pmc) {
          result = diagnose(g, pmc_syndrome(g, fault, policy), 1, t, ctx.search());
        } else {
          result = diagnose(g, mm_syndrome(g, fault, policy), 1, t, ctx.search());
        }
        if (result.kind != DiagnosisResult::Kind::Unique || result.unique() != fault) {
          v.fail(model_name(model) + " diagnosis wrong on trial " + std::to_string(i));
          return v;
        }
        ++trials;
      }
    }
    v.note(model_name(model) + ": " + std::to_string(trials) + " trials exact at t=" +
           std::to_string(t));
  }
  return v;
}

Verdict mm_derived_value(Context& ctx) {
  Verdict v;
  const DiagReport& report = ctx.brute4(1, Model::MmStar);
  if (!report.exact) {
    v.fail("MM* n=4 search did not produce a definite value");
    return v;
  }
  std::string witness_sizes;
  if (report.witness) {
    witness_sizes = " (witness sizes " + std::to_string(report.witness->first.size()) + "," +
                    std::to_string(report.witness->second.size()) + ")";
  }
  v.note("derived data, outside the closed form's hypotheses: t_1(LTQ_4) under MM* = " +
         std::to_string(report.value) + witness_sizes + ", " +
         std::to_string(report.pairs_checked) + " pairs checked");
  return v;
}

Verdict syndrome_round_trip(Context& ctx) {
  Verdict v;
  uint64_t checked = 0;
  for (int n = 4; n <= 5; ++n) {
    const LtqGraph& g = ctx.graph(n);
    std::mt19937_64 rng(kDefaultSeed + 11 * n);
    const uint64_t full = (n == 4) ? 0xFFFFull : 0xFFFFFFFFull;
    for (int i = 0; i < 1000; ++i) {
      const VertexSet fault = set_from_mask(mask_rand(rng, i) & full, g.vertex_count());
      FaultyUnitPolicy policy;
      switch (i % 3) {
        case 0:
          policy = FaultyUnitPolicy::all_zero();
          break;
        case 1:
          policy = FaultyUnitPolicy::all_one();
          break;
        default:
          policy = FaultyUnitPolicy::random(kDefaultSeed + static_cast<uint64_t>(i));
          break;
      }
      if (!pmc_consistent(g, fault, pmc_syndrome(g, fault, policy))) {
        v.fail("PMC round trip failed at n=" + std::to_string(n));
        return v;
      }
      if (!mm_consistent(g, fault, mm_syndrome(g, fault, policy))) {
        v.fail("MM* round trip failed at n=" + std::to_string(n));
        return v;
      }
      checked += 2;
    }
  }
  v.note(std::to_string(checked) + " generated syndromes consistent with their fault sets");
  return v;
}

struct CriterionSpec {
  int id;
  const char* name;
  Verdict (*run)(Context&);
};

const CriterionSpec kCriteria[] = {
    {1, "definition equivalence (n=2..10)", definition_equivalence},
    {2, "structural invariants (n=2..10)", structural_invariants},
    {3, "minimum conditional cut sizes", kappa_values},
    {4, "minimum subgraph order (n=4)", min_subgraph_order},
    {5, "PMC exact values at n=4", pmc_exact_n4},
    {6, "witness upper bounds (n=5..8)", witness_bounds},
    {7, "monotonicity of computed values", monotonicity},
    {8, "structural/semantic distinguishability equivalence", model_semantics_equivalence},
    {9, "diagnoser soundness (n=4, g=1)", diagnoser_soundness},
    {10, "MM* derived exact value at n=4", mm_derived_value},
    {11, "syndrome/consistency round trip", syndrome_round_trip},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  Context ctx(opts);
  std::vector<CriterionResult> results;
  for (const auto& spec : kCriteria) {
    if (!opts.criteria.empty() &&
        std::find(opts.criteria.begin(), opts.criteria.end(), spec.id) == opts.criteria.end()) {
      continue;
    }
    CriterionResult row;
    row.id = spec.id;
    row.name = spec.name;
    const auto start = Clock::now();
    try {
      Verdict verdict = spec.run(ctx);
      row.pass = verdict.pass;
      row.detail = verdict.detail;
    } catch (const Error& e) {
      row.pass = false;
      row.detail = std::string("error: ") + e.what();
    }
    row.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    results.push_back(std::move(row));
  }
  return results;
}

std::string acceptance_table(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  int passed = 0;
  for (const auto& row : results) {
    char line[64];
    std::snprintf(line, sizeof(line), "[%2d] %s  %7.2fs  ", row.id,
                  row.pass ? "PASS" : "FAIL", row.seconds);
    out << line << row.name;
    if (!row.detail.empty()) out << " — " << row.detail;
    out << '\n';
    passed += row.pass ? 1 : 0;
  }
  out << passed << " of " << results.size() << " criteria passed\n";
  return out.str();
}

std::string acceptance_json(const std::vector<CriterionResult>& results) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& row : results) {
    nlohmann::ordered_json item;
    item["id"] = row.id;
    item["name"] = row.name;
    item["pass"] = row.pass;
    item["detail"] = row.detail;
    item["seconds"] = row.seconds;
    doc.push_back(std::move(item));
  }
  return doc.dump();
}

}  // namespace ltqdiag

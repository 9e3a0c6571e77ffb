#include <doctest.h>

#include <set>
#include <utility>

#include "ltqdiag/errors.hpp"
#include "ltqdiag/graph.hpp"

using namespace ltqdiag;

namespace {

std::set<std::pair<uint32_t, uint32_t>> edge_set(const LtqGraph& g) {
  std::set<std::pair<uint32_t, uint32_t>> edges;
  for (uint64_t u = 0; u < g.vertex_count(); ++u) {
    for (uint32_t v : g.neighbor_labels(static_cast<uint32_t>(u))) {
      if (v > u) edges.emplace(static_cast<uint32_t>(u), v);
    }
  }
  return edges;
}

}  // namespace

TEST_CASE("LTQ_2 is the four-cycle 00-01-11-10") {
  const LtqGraph g = LtqGraph::build(2);
  CHECK(g.vertex_count() == 4);
  const std::set<std::pair<uint32_t, uint32_t>> expected = {
      {0b00, 0b01}, {0b01, 0b11}, {0b10, 0b11}, {0b00, 0b10}};
  CHECK(edge_set(g) == expected);
  CHECK(g.neighbors(0b11).members() == std::vector<uint32_t>{0b01, 0b10});
}

TEST_CASE("small neighborhoods match the adjacency rule worked by hand") {
  const LtqGraph g3 = LtqGraph::build(3);
  CHECK(g3.neighbors(0b000).members() == std::vector<uint32_t>{0b001, 0b010, 0b100});
  CHECK(g3.neighbors(0b001).members() == std::vector<uint32_t>{0b000, 0b011, 0b111});

  // Full LTQ_3 adjacency, derived once by hand from the rule.
  const std::vector<std::vector<uint32_t>> table = {
      {1, 2, 4}, {0, 3, 7}, {0, 3, 6}, {1, 2, 5}, {0, 5, 6}, {3, 4, 7}, {2, 4, 7}, {1, 5, 6}};
  for (uint32_t v = 0; v < 8; ++v) CHECK(g3.neighbor_labels(v) == table[v]);

  const LtqGraph g4 = LtqGraph::build(4);
  CHECK(g4.neighbors(0b0000).members() ==
        std::vector<uint32_t>{0b0001, 0b0010, 0b0100, 0b1000});
}

TEST_CASE("recursive construction gives the twisted cross edges") {
  const LtqGraph g3 = LtqGraph::build(3);
  CHECK(g3.neighbors_recursive(0b000).contains(0b100));  // x1 ^ x0 = 0
  CHECK(g3.neighbors_recursive(0b001).contains(0b111));  // x1 ^ x0 = 1
  const LtqGraph g2 = LtqGraph::build(2);
  CHECK(g2.neighbors_recursive(0b00).members() == std::vector<uint32_t>{0b01, 0b10});
}

TEST_CASE("the two definitions agree everywhere (n = 2..8)") {
  for (int n = 2; n <= 8; ++n) {
    const LtqGraph g = LtqGraph::build(n);
    for (uint64_t v = 0; v < g.vertex_count(); ++v) {
      REQUIRE(g.neighbors(static_cast<uint32_t>(v)) ==
              g.neighbors_recursive(static_cast<uint32_t>(v)));
    }
  }
}

TEST_CASE("regular, symmetric, irreflexive, triangle-free (n = 2..8)") {
  for (int n = 2; n <= 8; ++n) {
    const LtqGraph g = LtqGraph::build(n);
    REQUIRE(g.vertex_count() == uint64_t{1} << n);
    for (uint64_t v = 0; v < g.vertex_count(); ++v) {
      const auto nbr = g.neighbor_labels(static_cast<uint32_t>(v));
      REQUIRE(nbr.size() == static_cast<size_t>(n));
      for (uint32_t w : nbr) {
        REQUIRE(w != v);
        REQUIRE(g.adjacent(w, static_cast<uint32_t>(v)));
      }
    }
    REQUIRE_FALSE(g.has_triangle());
  }
}

TEST_CASE("any two vertices share at most two neighbors (n = 2..7)") {
  for (int n = 2; n <= 7; ++n) {
    const LtqGraph g = LtqGraph::build(n);
    for (uint64_t u = 0; u < g.vertex_count(); ++u) {
      for (uint64_t v = u + 1; v < g.vertex_count(); ++v) {
        REQUIRE(g.common_neighbors(static_cast<uint32_t>(u), static_cast<uint32_t>(v)).size() <=
                2);
      }
    }
  }
}

TEST_CASE("common neighbor examples") {
  const LtqGraph g2 = LtqGraph::build(2);
  CHECK(g2.common_neighbors(0b00, 0b11).members() == std::vector<uint32_t>{0b01, 0b10});
  const LtqGraph g3 = LtqGraph::build(3);
  CHECK(g3.common_neighbors(0b000, 0b001).empty());  // adjacent, and no triangles exist
  CHECK_THROWS_AS(g3.common_neighbors(5, 5), ArgumentError);
}

TEST_CASE("dimension limits and invalid vertices") {
  CHECK_THROWS_AS(LtqGraph::build(1), ArgumentError);
  CHECK_THROWS_AS(LtqGraph::build(0), ArgumentError);
  CHECK_THROWS_AS(LtqGraph::build(31), ArgumentError);
  const LtqGraph g = LtqGraph::build(3);
  CHECK_THROWS_AS(g.neighbors(8), ArgumentError);
  CHECK_THROWS_AS(g.neighbor_along(0, 3), ArgumentError);
}

TEST_CASE("large dimensions answer neighbor queries without a table") {
  const LtqGraph g = LtqGraph::build(30);
  const auto nbr0 = g.neighbor_labels(0);
  REQUIRE(nbr0.size() == 30);
  for (int d = 0; d < 30; ++d) CHECK(nbr0[static_cast<size_t>(d)] == uint32_t{1} << d);
  // Odd labels twist the lower bit of each flipped dimension.
  const auto nbr1 = g.neighbor_labels(1);
  CHECK(nbr1.front() == 0);
  for (uint32_t w : nbr1) CHECK(g.adjacent(w, 1));
}

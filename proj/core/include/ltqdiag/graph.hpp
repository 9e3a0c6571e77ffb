#pragma once

#include <cstdint>
#include <vector>

#include "ltqdiag/vertex_set.hpp"

namespace ltqdiag {

// The n-dimensional locally twisted cube LTQ_n: 2^n vertices labeled by
// n-bit strings u_{n-1}...u_1u_0, with u_0 the least significant bit of the
// integer label. Two labels are adjacent iff they differ in exactly bit 0,
// exactly bit 1, or in bit k (2 <= k <= n-1) together with bit k-1 xored by
// u_0. The equivalent recursive construction (two prefixed copies of
// LTQ_{n-1} plus twisted cross edges) is kept as an independent oracle.
class LtqGraph {
 public:
  static constexpr int kMinDimension = 2;
  static constexpr int kMaxDimension = 30;
  // Neighbor tables are materialized up to this dimension and computed on
  // demand above it.
  static constexpr int kTableDimensionCap = 20;

  static LtqGraph build(int n);

  int dimension() const { return n_; }
  uint64_t vertex_count() const { return uint64_t{1} << n_; }
  uint64_t edge_count() const { return static_cast<uint64_t>(n_) << (n_ - 1); }

  bool valid_vertex(uint64_t v) const { return v < vertex_count(); }

  // Neighbor reached by flipping dimension dim (0 <= dim < n). For dim >= 2
  // the twist also flips bit dim-1 when u_0 = 1.
  uint32_t neighbor_along(uint32_t v, int dim) const;

  // All n neighbors, ascending by label.
  std::vector<uint32_t> neighbor_labels(uint32_t v) const;

  bool adjacent(uint32_t u, uint32_t v) const;

  // Neighborhood N(v) per the non-recursive adjacency rule.
  VertexSet neighbors(uint32_t v) const;

  // Neighborhood computed by recursion on the two-copy construction; agrees
  // with neighbors() everywhere (tested, not assumed).
  VertexSet neighbors_recursive(uint32_t v) const;

  // N(u) ∩ N(v) for u != v. Never larger than 2 in a locally twisted cube.
  VertexSet common_neighbors(uint32_t u, uint32_t v) const;

  // True iff some triple of mutually adjacent vertices exists. False for
  // every LTQ_n.
  bool has_triangle() const;

 private:
  explicit LtqGraph(int n);

  void check_vertex(uint64_t v) const;
  void append_recursive_neighbors(int n, uint32_t v, std::vector<uint32_t>& out) const;

  int n_;
  std::vector<uint32_t> table_;  // 2^n rows of n ascending labels; empty when n > 20
};

}  // namespace ltqdiag

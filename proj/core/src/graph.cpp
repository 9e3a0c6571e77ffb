#include "ltqdiag/graph.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "ltqdiag/errors.hpp"

namespace ltqdiag {

namespace {

// Adjacency rule, bit form. dim 0 and 1 flip that bit alone; dim >= 2 flips
// bit dim and additionally bit dim-1 when u_0 = 1.
inline uint32_t ltq_neighbor(uint32_t v, int dim) {
  if (dim < 2) return v ^ (uint32_t{1} << dim);
  return v ^ (uint32_t{1} << dim) ^ ((v & 1u) << (dim - 1));
}

}  // namespace

LtqGraph::LtqGraph(int n) : n_(n) {}

LtqGraph LtqGraph::build(int n) {
  if (n < kMinDimension || n > kMaxDimension) {
    throw ArgumentError("dimension out of range: n = " + std::to_string(n) +
                        " (supported: 2..30)");
  }
  LtqGraph g(n);
  if (n <= kTableDimensionCap) {
    const uint64_t count = g.vertex_count();
    g.table_.resize(count * n);
    for (uint64_t v = 0; v < count; ++v) {
      uint32_t* row = g.table_.data() + v * n;
      for (int d = 0; d < n; ++d) row[d] = ltq_neighbor(static_cast<uint32_t>(v), d);
      std::sort(row, row + n);
    }
  }
  return g;
}

void LtqGraph::check_vertex(uint64_t v) const {
  if (!valid_vertex(v)) {
    throw ArgumentError("invalid vertex " + std::to_string(v) + " for LTQ_" +
                        std::to_string(n_));
  }
}

uint32_t LtqGraph::neighbor_along(uint32_t v, int dim) const {
  check_vertex(v);
  if (dim < 0 || dim >= n_) {
    throw ArgumentError("dimension index " + std::to_string(dim) + " out of [0, " +
                        std::to_string(n_) + ")");
  }
  return ltq_neighbor(v, dim);
}

std::vector<uint32_t> LtqGraph::neighbor_labels(uint32_t v) const {
  check_vertex(v);
  std::vector<uint32_t> out(static_cast<size_t>(n_));
  if (!table_.empty()) {
    const uint32_t* row = table_.data() + static_cast<uint64_t>(v) * n_;
    std::copy(row, row + n_, out.begin());
    return out;
  }
  for (int d = 0; d < n_; ++d) out[static_cast<size_t>(d)] = ltq_neighbor(v, d);
  std::sort(out.begin(), out.end());
  return out;
}

bool LtqGraph::adjacent(uint32_t u, uint32_t v) const {
  check_vertex(u);
  check_vertex(v);
  for (int d = 0; d < n_; ++d) {
    if (ltq_neighbor(u, d) == v) return true;
  }
  return false;
}

VertexSet LtqGraph::neighbors(uint32_t v) const {
  check_vertex(v);
  VertexSet out(vertex_count());
  for (int d = 0; d < n_; ++d) out.add(ltq_neighbor(v, d));
  return out;
}

void LtqGraph::append_recursive_neighbors(int n, uint32_t v, std::vector<uint32_t>& out) const {
  if (n == 2) {
    // Base case, the fixed edge list of LTQ_2: (00,01), (01,11), (11,10), (10,00).
    static constexpr std::array<std::pair<uint32_t, uint32_t>, 4> kEdges = {
        {{0b00, 0b01}, {0b01, 0b11}, {0b11, 0b10}, {0b10, 0b00}}};
    for (const auto& [a, b] : kEdges) {
      if (a == v) out.push_back(b);
      if (b == v) out.push_back(a);
    }
    return;
  }
  // Neighbors within this copy of LTQ_{n-1}, then the cross edge
  // 0 x_{n-2} ... x_0  <->  1 (x_{n-2} ^ x_0) x_{n-3} ... x_0.
  const uint32_t top = uint32_t{1} << (n - 1);
  const uint32_t prefix = v & top;
  const uint32_t low = v & (top - 1);
  const size_t before = out.size();
  append_recursive_neighbors(n - 1, low, out);
  for (size_t i = before; i < out.size(); ++i) out[i] |= prefix;
  out.push_back(v ^ top ^ ((v & 1u) << (n - 2)));
}

VertexSet LtqGraph::neighbors_recursive(uint32_t v) const {
  check_vertex(v);
  std::vector<uint32_t> labels;
  labels.reserve(static_cast<size_t>(n_));
  append_recursive_neighbors(n_, v, labels);
  VertexSet out(vertex_count());
  for (uint32_t w : labels) out.add(w);
  return out;
}

VertexSet LtqGraph::common_neighbors(uint32_t u, uint32_t v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw ArgumentError("common_neighbors requires two distinct vertices");
  }
  return neighbors(u) & neighbors(v);
}

bool LtqGraph::has_triangle() const {
  const uint64_t count = vertex_count();
  std::vector<uint32_t> nbr;
  for (uint64_t v = 0; v < count; ++v) {
    nbr = neighbor_labels(static_cast<uint32_t>(v));
    for (size_t i = 0; i < nbr.size(); ++i) {
      for (size_t j = i + 1; j < nbr.size(); ++j) {
        if (adjacent(nbr[i], nbr[j])) return true;
      }
    }
  }
  return false;
}

}  // namespace ltqdiag

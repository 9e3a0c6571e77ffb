#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ltqdiag {

// A set of vertices of a fixed universe [0, universe), stored as a packed
// membership bitmap. Fault sets, cuts, neighborhoods and components are all
// VertexSets. The canonical serialization lists members as fixed-width
// binary strings in ascending numeric order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(uint64_t universe);

  static VertexSet full(uint64_t universe);
  static VertexSet of(uint64_t universe, std::initializer_list<uint32_t> members);

  uint64_t universe() const { return universe_; }
  uint64_t size() const;
  bool empty() const;

  bool contains(uint64_t v) const;
  void add(uint64_t v);
  void remove(uint64_t v);

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator^=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  VertexSet complement() const;
  // Members of *this not in o.
  VertexSet difference(const VertexSet& o) const;

  bool intersects(const VertexSet& o) const;
  bool is_subset_of(const VertexSet& o) const;
  bool operator==(const VertexSet& o) const = default;

  // Ascending member labels.
  std::vector<uint32_t> members() const;
  // Smallest member; throws on the empty set.
  uint32_t smallest() const;

  // Lexicographic order on the ascending member sequences, the order used
  // for all determinism tie-breaks. Equivalent to: the smallest element of
  // the symmetric difference belongs to the smaller set.
  static bool canonical_less(const VertexSet& a, const VertexSet& b);

  const std::vector<uint64_t>& words() const { return words_; }
  std::vector<uint64_t>& mutable_words() { return words_; }

 private:
  void check_vertex(uint64_t v) const;
  void check_same_universe(const VertexSet& o) const;
  void trim();  // clear bits at and above universe_ in the top word

  uint64_t universe_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace ltqdiag

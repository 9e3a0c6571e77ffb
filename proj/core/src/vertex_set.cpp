#include "ltqdiag/vertex_set.hpp"

#include <algorithm>
#include <bit>

#include "ltqdiag/errors.hpp"

namespace ltqdiag {

namespace {
constexpr uint64_t kWordBits = 64;

uint64_t word_count(uint64_t universe) { return (universe + kWordBits - 1) / kWordBits; }
}  // namespace

VertexSet::VertexSet(uint64_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

VertexSet VertexSet::full(uint64_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~uint64_t{0});
  s.trim();
  return s;
}

VertexSet VertexSet::of(uint64_t universe, std::initializer_list<uint32_t> members) {
  VertexSet s(universe);
  for (uint32_t v : members) s.add(v);
  return s;
}

void VertexSet::check_vertex(uint64_t v) const {
  if (v >= universe_) {
    throw ArgumentError("vertex " + std::to_string(v) + " outside universe [0, " +
                        std::to_string(universe_) + ")");
  }
}

void VertexSet::check_same_universe(const VertexSet& o) const {
  if (universe_ != o.universe_) {
    throw ArgumentError("vertex sets over different universes (" +
                        std::to_string(universe_) + " vs " + std::to_string(o.universe_) + ")");
  }
}

void VertexSet::trim() {
  const uint64_t used = universe_ % kWordBits;
  if (!words_.empty() && used != 0) {
    words_.back() &= (uint64_t{1} << used) - 1;
  }
}

uint64_t VertexSet::size() const {
  uint64_t total = 0;
  for (uint64_t w : words_) total += static_cast<uint64_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

bool VertexSet::contains(uint64_t v) const {
  check_vertex(v);
  return (words_[v / kWordBits] >> (v % kWordBits)) & 1;
}

void VertexSet::add(uint64_t v) {
  check_vertex(v);
  words_[v / kWordBits] |= uint64_t{1} << (v % kWordBits);
}

void VertexSet::remove(uint64_t v) {
  check_vertex(v);
  words_[v / kWordBits] &= ~(uint64_t{1} << (v % kWordBits));
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_same_universe(o);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_same_universe(o);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& o) {
  check_same_universe(o);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe_);
  for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  out.trim();
  return out;
}

VertexSet VertexSet::difference(const VertexSet& o) const {
  check_same_universe(o);
  VertexSet out(universe_);
  for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & ~o.words_[i];
  return out;
}

bool VertexSet::intersects(const VertexSet& o) const {
  check_same_universe(o);
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & o.words_[i]) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  check_same_universe(o);
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~o.words_[i]) return false;
  }
  return true;
}

std::vector<uint32_t> VertexSet::members() const {
  std::vector<uint32_t> out;
  out.reserve(size());
  for (size_t i = 0; i < words_.size(); ++i) {
    uint64_t w = words_[i];
    while (w) {
      const int b = std::countr_zero(w);
      out.push_back(static_cast<uint32_t>(i * kWordBits + b));
      w &= w - 1;
    }
  }
  return out;
}

uint32_t VertexSet::smallest() const {
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i]) return static_cast<uint32_t>(i * kWordBits + std::countr_zero(words_[i]));
  }
  throw ArgumentError("smallest() on an empty vertex set");
}

bool VertexSet::canonical_less(const VertexSet& a, const VertexSet& b) {
  a.check_same_universe(b);
  // Let e be the smallest element the two sets disagree on; both sequences
  // share the members below e. If e is in a, then a precedes b exactly when b
  // still has a member above e (otherwise b is a proper prefix of a); when e
  // is in b, a precedes b exactly when a is exhausted above e.
  for (size_t i = 0; i < a.words_.size(); ++i) {
    const uint64_t diff = a.words_[i] ^ b.words_[i];
    if (!diff) continue;
    const int bit = std::countr_zero(diff);
    const uint64_t e_mask = uint64_t{1} << bit;
    const bool in_a = (a.words_[i] & e_mask) != 0;
    const VertexSet& tail = in_a ? b : a;
    uint64_t higher = tail.words_[i] & ~((e_mask << 1) - 1);
    bool has_higher = higher != 0;
    for (size_t j = i + 1; !has_higher && j < tail.words_.size(); ++j) {
      has_higher = tail.words_[j] != 0;
    }
    return in_a ? has_higher : !has_higher;
  }
  return false;
}

}  // namespace ltqdiag

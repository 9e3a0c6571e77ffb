#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace ltqdiag::detail {

// Fixed-width bitmask for the exhaustive-search inner loops. W=1 covers
// graphs up to 64 vertices (n <= 6), W=4 up to 256 (n <= 8). All operations
// compile down to straight-line word arithmetic.
template <int W>
struct BitMask {
  std::array<uint64_t, W> w{};

  static BitMask universe(unsigned m) {
    BitMask out;
    for (int i = 0; i < W; ++i) {
      if (m >= 64) {
        out.w[i] = ~uint64_t{0};
        m -= 64;
      } else {
        out.w[i] = (m == 0) ? 0 : ((uint64_t{1} << m) - 1);
        m = 0;
      }
    }
    return out;
  }

  bool test(unsigned i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(unsigned i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(unsigned i) { w[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  bool any() const {
    uint64_t acc = 0;
    for (int i = 0; i < W; ++i) acc |= w[i];
    return acc != 0;
  }
  bool none() const { return !any(); }

  unsigned count() const {
    unsigned c = 0;
    for (int i = 0; i < W; ++i) c += static_cast<unsigned>(std::popcount(w[i]));
    return c;
  }

  // True iff at least two bits are set.
  bool two_or_more() const {
    bool seen = false;
    for (int i = 0; i < W; ++i) {
      if (!w[i]) continue;
      if (seen || (w[i] & (w[i] - 1))) return true;
      seen = true;
    }
    return false;
  }

  int first() const {
    for (int i = 0; i < W; ++i) {
      if (w[i]) return i * 64 + std::countr_zero(w[i]);
    }
    return -1;
  }

  BitMask& operator|=(const BitMask& o) {
    for (int i = 0; i < W; ++i) w[i] |= o.w[i];
    return *this;
  }
  BitMask& operator&=(const BitMask& o) {
    for (int i = 0; i < W; ++i) w[i] &= o.w[i];
    return *this;
  }
  BitMask& operator^=(const BitMask& o) {
    for (int i = 0; i < W; ++i) w[i] ^= o.w[i];
    return *this;
  }
  friend BitMask operator|(BitMask a, const BitMask& b) { return a |= b; }
  friend BitMask operator&(BitMask a, const BitMask& b) { return a &= b; }
  friend BitMask operator^(BitMask a, const BitMask& b) { return a ^= b; }

  BitMask andnot(const BitMask& o) const {
    BitMask out;
    for (int i = 0; i < W; ++i) out.w[i] = w[i] & ~o.w[i];
    return out;
  }

  bool intersects(const BitMask& o) const {
    uint64_t acc = 0;
    for (int i = 0; i < W; ++i) acc |= w[i] & o.w[i];
    return acc != 0;
  }

  bool operator==(const BitMask& o) const = default;

  template <typename F>
  void for_each(F&& f) const {
    for (int i = 0; i < W; ++i) {
      uint64_t x = w[i];
      while (x) {
        f(static_cast<unsigned>(i * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  // First set bit for which f returns true, or -1.
  template <typename F>
  int find_bit(F&& f) const {
    for (int i = 0; i < W; ++i) {
      uint64_t x = w[i];
      while (x) {
        const unsigned v = static_cast<unsigned>(i * 64 + std::countr_zero(x));
        if (f(v)) return static_cast<int>(v);
        x &= x - 1;
      }
    }
    return -1;
  }
};

}  // namespace ltqdiag::detail

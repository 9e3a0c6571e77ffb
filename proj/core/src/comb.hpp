#pragma once

#include <array>
#include <cstdint>
#include <memory>

namespace ltqdiag::detail {

// Binomial coefficients saturate here; the cap sits far above any usable
// candidate budget so saturated values only ever mean "too many to search".
inline constexpr uint64_t kBinomCap = uint64_t{1} << 62;
inline constexpr int kBinomMaxN = 256;

inline uint64_t sat_add(uint64_t a, uint64_t b) {
  const uint64_t s = a + b;
  return (s < a || s > kBinomCap) ? kBinomCap : s;
}

inline uint64_t binom(int m, int k) {
  if (k < 0 || k > m) return 0;
  static const auto table = [] {
    using Row = std::array<uint64_t, kBinomMaxN + 1>;
    auto t = std::make_unique<std::array<Row, kBinomMaxN + 1>>();
    for (int i = 0; i <= kBinomMaxN; ++i) {
      (*t)[i][0] = 1;
      for (int j = 1; j <= i; ++j) {
        (*t)[i][j] = sat_add((*t)[i - 1][j - 1], j <= i - 1 ? (*t)[i - 1][j] : 0);
      }
      for (int j = i + 1; j <= kBinomMaxN; ++j) (*t)[i][j] = 0;
    }
    return t;
  }();
  return (*table)[m][k];
}

// Sum of binom(m, j) for j in [0, k], saturating.
inline uint64_t binom_cumulative(int m, int k) {
  uint64_t total = 0;
  for (int j = 0; j <= k && j <= m; ++j) total = sat_add(total, binom(m, j));
  return total;
}

}  // namespace ltqdiag::detail

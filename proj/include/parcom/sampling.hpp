#pragma once

#include <cstdint>
#include <random>

#include "parcom/linmap.hpp"

namespace parcom {

// All randomized checks draw from mt19937_64: the algorithm is pinned by the
// standard, so a given seed yields identical streams on every platform.
using Prng = std::mt19937_64;

inline Rational small_rational(Prng& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  return Rational(num(rng), den(rng));
}

inline LinMap random_linmap(Prng& rng, std::size_t rows, std::size_t cols) {
  LinMap m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = small_rational(rng);
  return m;
}

// Random invertible matrix by rejection; densities over small rationals make
// singular draws rare, so this terminates fast.
inline LinMap random_invertible(Prng& rng, std::size_t n) {
  for (;;) {
    LinMap m = random_linmap(rng, n, n);
    if (inverse(m).has_value()) return m;
  }
}

}  // namespace parcom

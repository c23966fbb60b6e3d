#pragma once

#include <cstdint>
#include <random>

#include "salsa/types.hpp"

namespace salsa {

/// splitmix64 step; used to derive independent sub-seeds from a master seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

using Rng = std::mt19937_64;

/// Standard circular complex Gaussian: unit variance per complex entry.
inline MatC complex_gaussian(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  MatC m(rows, cols);
  const double s = 1.0 / std::sqrt(2.0);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = Complex(n(rng) * s, n(rng) * s);
  return m;
}

/// Uniform phase on [0, 2*pi).
inline double uniform_phase(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
  return u(rng);
}

}  // namespace salsa

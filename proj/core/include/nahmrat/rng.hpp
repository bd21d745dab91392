#pragma once

#include <cstdint>

#include "nahmrat/gauss.hpp"

namespace nahmrat {

// Deterministic seeded generator (splitmix64); avoids std distributions so
// output streams are identical across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  // Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform integer in [lo, hi] inclusive.
  long integer(long lo, long hi);
  double real01();

  // Small random Gaussian rational: numerators in [-bound, bound],
  // denominator in {1, 2}; imaginary part present with probability 1/2.
  GaussScalar small_gauss(long bound = 3);
  // Same but never zero.
  GaussScalar small_gauss_nonzero(long bound = 3);

  // Derives an independent stream for item `index` (used to keep parallel
  // fan-out deterministic).
  Rng fork(std::uint64_t index) const;

private:
  std::uint64_t state_;
};

}  // namespace nahmrat

#pragma once

#include "nahmrat/normal_forms.hpp"
#include "nahmrat/rng.hpp"

namespace nahmrat {

// Random m x n coefficient grid with the derived sparsity applied.
Mat random_c_pattern(Rng& rng, const ChargeVector& k, long bound = 3);

// Random invertible matrix with small Gaussian-rational entries.
Mat random_invertible(Rng& rng, int m, long bound = 2);

// Valid pair for charge k: hurtubise_pair over a random patterned C,
// optionally conjugated by a random invertible g; resamples on the rare
// validity failure.
MatrixPair random_valid_pair(Rng& rng, const ChargeVector& k, bool conjugate = true);

// Random charge with positive entries, n <= max_n, m <= max_m.
ChargeVector random_charge(Rng& rng, int max_m, int max_n);

RationalMapData random_based_map(Rng& rng, const ChargeVector& k);

// All compositions (ordered tuples of nonnegative integers) of m into n parts.
std::vector<std::vector<int>> compositions_into(int m, int n);

}  // namespace nahmrat

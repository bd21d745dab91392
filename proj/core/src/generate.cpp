#include "nahmrat/generate.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace nahmrat {

Mat random_c_pattern(Rng& rng, const ChargeVector& k, long bound) {
  Mat c(k.m(), k.n());
  for (int i = 0; i < k.m(); ++i)
    for (int j = 0; j < k.n(); ++j) c(i, j) = rng.small_gauss(bound);
  return apply_c_pattern(std::move(c), k);
}

Mat random_invertible(Rng& rng, int m, long bound) {
  for (;;) {
    Mat g(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) g(i, j) = rng.small_gauss(bound);
    if (!det(g).is_zero()) return g;
  }
}

MatrixPair random_valid_pair(Rng& rng, const ChargeVector& k, bool conjugate) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    MatrixPair p = hurtubise_pair(random_c_pattern(rng, k), k);
    if (!validate_matrix_pair(p, k).valid()) continue;
    if (conjugate) p = p.conjugated(random_invertible(rng, k.m()));
    return p;
  }
  throw std::runtime_error("random_valid_pair: rejection sampling failed for k = " + k.str());
}

ChargeVector random_charge(Rng& rng, int max_m, int max_n) {
  int n = static_cast<int>(rng.integer(1, max_n));
  for (;;) {
    std::vector<int> k(static_cast<size_t>(n));
    int total = 0;
    for (auto& v : k) {
      v = static_cast<int>(rng.integer(1, std::max(1L, static_cast<long>(max_m / n))));
      total += v;
    }
    if (total > max_m) continue;
    std::sort(k.begin(), k.end(), std::greater<int>());
    return ChargeVector(k);
  }
}

RationalMapData random_based_map(Rng& rng, const ChargeVector& k) {
  return to_rational_map(random_valid_pair(rng, k, true));
}

std::vector<std::vector<int>> compositions_into(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc(static_cast<size_t>(n), 0);
  // odometer over nonnegative tuples summing to m
  std::function<void(int, int)> rec = [&](int pos, int rest) {
    if (pos == n - 1) {
      acc[static_cast<size_t>(pos)] = rest;
      out.push_back(acc);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      acc[static_cast<size_t>(pos)] = v;
      rec(pos + 1, rest - v);
    }
  };
  rec(0, m);
  return out;
}

}  // namespace nahmrat

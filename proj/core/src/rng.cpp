#include "nahmrat/rng.hpp"

#include <stdexcept>

namespace nahmrat {

std::uint64_t Rng::next_u64() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return v % n;
}

long Rng::integer(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("Rng::integer: empty range");
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::real01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

GaussScalar Rng::small_gauss(long bound) {
  long den = integer(1, 2);
  mpq_class re(integer(-bound, bound), den);
  re.canonicalize();
  mpq_class im(0);
  if (below(2) == 0) {
    im = mpq_class(integer(-bound, bound), den);
    im.canonicalize();
  }
  return GaussScalar(re, im);
}

GaussScalar Rng::small_gauss_nonzero(long bound) {
  for (;;) {
    GaussScalar v = small_gauss(bound);
    if (!v.is_zero()) return v;
  }
}

Rng Rng::fork(std::uint64_t index) const {
  Rng child(state_ ^ (0xd1342543de82ef95ULL * (index + 1)));
  child.next_u64();
  return child;
}

}  // namespace nahmrat

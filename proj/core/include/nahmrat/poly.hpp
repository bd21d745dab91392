#pragma once

#include <limits>
#include <string>
#include <vector>

#include "nahmrat/gauss.hpp"

namespace nahmrat {

struct PolyDivMod;

// Univariate polynomial over GaussScalar, coefficients ascending, never a
// trailing zero.  The zero polynomial has an empty coefficient list and
// degree() == neg_inf_degree; degree comparisons then behave as if the degree
// were -infinity.  Do not do arithmetic on the sentinel.
class Poly {
public:
  static constexpr int neg_inf_degree = std::numeric_limits<int>::min();

  Poly() = default;
  explicit Poly(std::vector<GaussScalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(GaussScalar v);
  // z^k with unit coefficient.
  static Poly monomial(int k, GaussScalar coeff = GaussScalar(1));

  int degree() const { return c_.empty() ? neg_inf_degree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  // Coefficient of z^k, zero outside the stored range.
  GaussScalar coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return GaussScalar(0);
    return c_[static_cast<size_t>(k)];
  }
  const std::vector<GaussScalar>& coeffs() const { return c_; }
  GaussScalar leading() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(const GaussScalar& s) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Multiply by z^k, k >= 0.
  Poly shifted(int k) const;
  GaussScalar eval(const GaussScalar& x) const;

  // Euclidean division; divisor must be nonzero.
  PolyDivMod divmod(const Poly& divisor) const;

  // Scales so the leading coefficient is 1; zero stays zero.
  Poly monic() const;

  std::string str(const std::string& var = "z") const;

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<GaussScalar> c_;
};

struct PolyDivMod {
  Poly quot, rem;
};

// Monic gcd by the Euclidean algorithm; gcd(0, p) = monic p.
Poly poly_gcd(const Poly& a, const Poly& b);
// Monic gcd of a list; throws if every entry is zero.
Poly poly_gcd_many(const std::vector<Poly>& ps);

}  // namespace nahmrat

#include "nahmrat/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace nahmrat {

Poly Poly::constant(GaussScalar v) {
  Poly p;
  if (!v.is_zero()) p.c_.push_back(std::move(v));
  return p;
}

Poly Poly::monomial(int k, GaussScalar coeff) {
  if (k < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
  Poly p;
  if (!coeff.is_zero()) {
    p.c_.assign(static_cast<size_t>(k) + 1, GaussScalar(0));
    p.c_.back() = std::move(coeff);
  }
  return p;
}

GaussScalar Poly::leading() const {
  if (c_.empty()) return GaussScalar(0);
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), GaussScalar(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, GaussScalar(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

Poly Poly::operator*(const GaussScalar& s) const {
  if (s.is_zero()) return Poly();
  Poly r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("Poly::shifted: negative shift");
  if (is_zero()) return Poly();
  Poly r;
  r.c_.assign(static_cast<size_t>(k), GaussScalar(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

GaussScalar Poly::eval(const GaussScalar& x) const {
  GaussScalar acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyDivMod Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
  PolyDivMod out;
  out.rem = *this;
  const int dd = divisor.degree();
  const GaussScalar lead = divisor.leading();
  std::vector<GaussScalar> q;
  while (!out.rem.is_zero() && out.rem.degree() >= dd) {
    int k = out.rem.degree() - dd;
    GaussScalar f = out.rem.leading() / lead;
    if (static_cast<int>(q.size()) < k + 1) q.resize(static_cast<size_t>(k) + 1, GaussScalar(0));
    q[static_cast<size_t>(k)] += f;
    out.rem = out.rem - divisor.shifted(k) * f;
  }
  out.quot = Poly(std::move(q));
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  return *this * (GaussScalar(1) / leading());
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    GaussScalar v = coeff(k);
    if (v.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << v.str() << ")";
    if (k > 0) os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x.divmod(y).rem;
    x = y;
    y = r;
  }
  return x.monic();
}

Poly poly_gcd_many(const std::vector<Poly>& ps) {
  Poly g;
  for (const auto& p : ps) g = poly_gcd(g, p);
  if (g.is_zero()) throw std::domain_error("poly_gcd_many: all inputs zero");
  return g;
}

}  // namespace nahmrat

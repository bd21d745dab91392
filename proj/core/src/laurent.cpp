#include "nahmrat/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace nahmrat {

LaurentPoly LaurentPoly::term(int twice_exp, GaussScalar coeff) {
  LaurentPoly p;
  if (!coeff.is_zero()) p.t_[twice_exp] = std::move(coeff);
  return p;
}

GaussScalar LaurentPoly::coeff_at(int twice_exp) const {
  auto it = t_.find(twice_exp);
  return it == t_.end() ? GaussScalar(0) : it->second;
}

void LaurentPoly::add_term(int twice_exp, const GaussScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(twice_exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : t_) r.t_[e] = -c;
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b.t_) r.add_term(e, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
  return r;
}

std::string LaurentPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    int e = it->first;
    if (e != 0) {
      os << "z^";
      if (e % 2 == 0)
        os << e / 2;
      else
        os << "{" << e << "/2}";
    }
  }
  return os.str();
}

LaurentMat LaurentMat::from(const Mat& m) {
  LaurentMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = LaurentPoly::term(0, m(i, j));
  return r;
}

LaurentMat operator*(const LaurentMat& a, const LaurentMat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("LaurentMat: dimension mismatch in *");
  LaurentMat r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        r(i, j) = r(i, j) + a(i, k) * b(k, j);
      }
    }
  return r;
}

LaurentMat operator+(const LaurentMat& a, const LaurentMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("LaurentMat: dimension mismatch in +");
  LaurentMat r(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

LaurentPoly det(const LaurentMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square LaurentMat");
  int n = m.rows();
  if (n > 20) throw std::invalid_argument("det(LaurentMat): matrix too large for subset dp");
  std::vector<LaurentPoly> dp(size_t(1) << n);
  dp[0] = LaurentPoly::term(0, GaussScalar(1));
  for (unsigned mask = 1; mask < dp.size(); ++mask) {
    int row = __builtin_popcount(mask) - 1;
    LaurentPoly acc;
    int sign = 1;
    for (int c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      const LaurentPoly& e = m(row, c);
      if (!e.is_zero()) {
        LaurentPoly term = dp[mask ^ (1u << c)] * e;
        acc = (sign > 0) ? acc + term : acc - term;
      }
      sign = -sign;
    }
    dp[mask] = std::move(acc);
  }
  return dp.back();
}

}  // namespace nahmrat

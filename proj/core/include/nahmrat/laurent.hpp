#pragma once

#include <map>
#include <string>
#include <vector>

#include "nahmrat/mat.hpp"

namespace nahmrat {

// Formal Laurent polynomial in z with half-integer exponents.  Exponents are
// stored doubled (so z^{-1/2} has key -1); no analytic meaning is attached.
class LaurentPoly {
public:
  LaurentPoly() = default;
  static LaurentPoly term(int twice_exp, GaussScalar coeff);

  bool is_zero() const { return t_.empty(); }
  GaussScalar coeff_at(int twice_exp) const;
  const std::map<int, GaussScalar>& terms() const { return t_; }
  // Smallest exponent (doubled); meaningless on zero.
  int min_twice_exp() const { return t_.begin()->first; }

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::string str() const;

private:
  void add_term(int twice_exp, const GaussScalar& c);
  std::map<int, GaussScalar> t_;
};

class LaurentMat {
public:
  LaurentMat() : rows_(0), cols_(0) {}
  LaurentMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static LaurentMat from(const Mat& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  LaurentPoly& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const LaurentPoly& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  friend LaurentMat operator*(const LaurentMat& a, const LaurentMat& b);
  friend LaurentMat operator+(const LaurentMat& a, const LaurentMat& b);
  friend bool operator==(const LaurentMat& a, const LaurentMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const LaurentMat& a, const LaurentMat& b) { return !(a == b); }

private:
  int rows_, cols_;
  std::vector<LaurentPoly> a_;
};

// Division-free determinant (column-subset dp); intended for small matrices.
LaurentPoly det(const LaurentMat& m);

}  // namespace nahmrat

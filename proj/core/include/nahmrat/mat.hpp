#pragma once

#include <optional>
#include <vector>

#include "nahmrat/poly.hpp"

namespace nahmrat {

// Dense matrix over GaussScalar, row-major.  Equality is entrywise.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, GaussScalar(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative dimension");
  }
  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  GaussScalar& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const GaussScalar& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  Mat operator-() const;
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  Mat operator*(const GaussScalar& s) const;
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Mat transpose() const;
  Mat conj_transpose() const;
  bool is_zero() const;

  Mat submatrix(int r0, int c0, int nrows, int ncols) const;
  void set_block(int r0, int c0, const Mat& block);

  Mat row(int i) const { return submatrix(i, 0, 1, cols_); }
  Mat col(int j) const { return submatrix(0, j, rows_, 1); }

  // Commutator ab - ba.
  friend Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

  std::string str() const;

private:
  int rows_, cols_;
  std::vector<GaussScalar> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination.  Throws on
// non-square input.
GaussScalar det(const Mat& m);

// Exact basis of the right kernel {v : Mv = 0}, each vector a cols x 1 Mat.
// Basis vectors come from the reduced row echelon form with free variables
// set to 1 in ascending column order, so the result is deterministic.
std::vector<Mat> nullspace(const Mat& m);

int rank(const Mat& m);

// Inverse; throws std::domain_error when singular.
Mat inverse(const Mat& m);

// Solves Ax = b for square invertible A (b may have several columns).
Mat solve(const Mat& a, const Mat& b);

// Matrix with polynomial entries; used for adjugates of zI - M and small
// polynomial determinants.
class PolyMat {
public:
  PolyMat() : rows_(0), cols_(0) {}
  PolyMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Poly& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Poly& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  friend PolyMat operator*(const PolyMat& a, const PolyMat& b);
  friend bool operator==(const PolyMat& a, const PolyMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  // Evaluate every entry at x.
  Mat eval(const GaussScalar& x) const;

private:
  int rows_, cols_;
  std::vector<Poly> a_;
};

// Division-free determinant over any ring represented by Poly entries
// (column-subset dynamic programming, fine for the small sizes used here).
Poly det(const PolyMat& m);

// Characteristic polynomial (monic) and adjugate of zI - M computed together
// by the Faddeev-LeVerrier trace recursion; all divisions are by integers.
struct CharpolyAdjugate {
  Poly charpoly;
  // adj(zI - M) = sum_k z^k * adj_coeff[k], k = 0..n-1.
  std::vector<Mat> adj_coeff;
};
CharpolyAdjugate charpoly_adjugate(const Mat& m);

Poly charpoly(const Mat& m);
PolyMat resolvent_numerator(const Mat& m);

// Substitutes the matrix into the polynomial (Horner).
Mat eval_poly_at(const Poly& p, const Mat& m);

Mat kron(const Mat& a, const Mat& b);

}  // namespace nahmrat

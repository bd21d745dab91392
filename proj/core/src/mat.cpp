#include "nahmrat/mat.hpp"

#include <sstream>
#include <stdexcept>

namespace nahmrat {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = GaussScalar(1);
  return m;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& v : r.a_) v = -v;
  return r;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("Mat: dimension mismatch in +");
  Mat r = a;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

Mat operator-(const Mat& a, const Mat& b) { return a + (-b); }

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: dimension mismatch in *");
  Mat r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const GaussScalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        r(i, j) += aik * b(k, j);
      }
    }
  return r;
}

Mat Mat::operator*(const GaussScalar& s) const {
  Mat r = *this;
  for (auto& v : r.a_) v *= s;
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Mat Mat::conj_transpose() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).conj();
  return r;
}

bool Mat::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

Mat Mat::submatrix(int r0, int c0, int nrows, int ncols) const {
  if (r0 < 0 || c0 < 0 || r0 + nrows > rows_ || c0 + ncols > cols_)
    throw std::invalid_argument("Mat::submatrix: out of range");
  Mat r(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
  return r;
}

void Mat::set_block(int r0, int c0, const Mat& block) {
  if (r0 < 0 || c0 < 0 || r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
    throw std::invalid_argument("Mat::set_block: out of range");
  for (int i = 0; i < block.rows_; ++i)
    for (int j = 0; j < block.cols_; ++j) (*this)(r0 + i, c0 + j) = block(i, j);
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? " [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    os << "]";
    if (i + 1 < rows_) os << "\n";
  }
  os << "]";
  return os.str();
}

GaussScalar det(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("det: non-square matrix");
  int n = m.rows();
  if (n == 0) return GaussScalar(1);
  Mat a = m;
  GaussScalar prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k).is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a(i, k).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return GaussScalar(0);
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;  // exact at every step
    prev = a(k, k);
  }
  GaussScalar d = a(n - 1, n - 1);
  return sign > 0 ? d : -d;
}

namespace {

struct Rref {
  Mat m;
  std::vector<int> pivot_cols;
};

Rref rref(const Mat& input) {
  Rref out{input, {}};
  Mat& a = out.m;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    GaussScalar inv = GaussScalar(1) / a(r, c);
    for (int j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      GaussScalar f = a(i, c);
      for (int j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

}  // namespace

std::vector<Mat> nullspace(const Mat& m) {
  Rref rr = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int c : rr.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Mat> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    Mat v(m.cols(), 1);
    v(free, 0) = GaussScalar(1);
    for (size_t r = 0; r < rr.pivot_cols.size(); ++r)
      v(rr.pivot_cols[r], 0) = -rr.m(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

Mat inverse(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: non-square matrix");
  int n = m.rows();
  Mat aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Mat::identity(n));
  Rref rr = rref(aug);
  for (int i = 0; i < n; ++i)
    if (i >= static_cast<int>(rr.pivot_cols.size()) || rr.pivot_cols[static_cast<size_t>(i)] != i)
      throw std::domain_error("inverse: singular matrix");
  return rr.m.submatrix(0, n, n, n);
}

Mat solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
  return inverse(a) * b;
}

PolyMat operator*(const PolyMat& a, const PolyMat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMat: dimension mismatch in *");
  PolyMat r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k)
      for (int j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + a(i, k) * b(k, j);
  return r;
}

Mat PolyMat::eval(const GaussScalar& x) const {
  Mat r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j).eval(x);
  return r;
}

Poly det(const PolyMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square PolyMat");
  int n = m.rows();
  if (n == 0) return Poly::constant(GaussScalar(1));
  // dp over column subsets, processing one row per popcount level.
  std::vector<Poly> dp(size_t(1) << n);
  dp[0] = Poly::constant(GaussScalar(1));
  for (unsigned mask = 1; mask < dp.size(); ++mask) {
    int row = __builtin_popcount(mask) - 1;
    Poly acc;
    int sign = 1;
    for (int c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      const Poly& e = m(row, c);
      if (!e.is_zero()) {
        Poly term = dp[mask ^ (1u << c)] * e;
        acc = (sign > 0) ? acc + term : acc - term;
      }
      sign = -sign;
    }
    dp[mask] = std::move(acc);
  }
  return dp.back();
}

CharpolyAdjugate charpoly_adjugate(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("charpoly: non-square matrix");
  const int n = m.rows();
  CharpolyAdjugate out;
  std::vector<GaussScalar> c(static_cast<size_t>(n) + 1, GaussScalar(0));
  c[static_cast<size_t>(n)] = GaussScalar(1);
  // B_{n-1} = I; c_{n-k} = -tr(M B_{n-k})/k; B_{n-k-1} = M B_{n-k} + c_{n-k} I.
  // adj(zI - M) = sum_k z^k B_k.
  std::vector<Mat> b(static_cast<size_t>(n));
  Mat cur = Mat::identity(n);
  for (int k = 1; k <= n; ++k) {
    b[static_cast<size_t>(n - k)] = cur;
    Mat prod = m * cur;
    GaussScalar tr(0);
    for (int i = 0; i < n; ++i) tr += prod(i, i);
    GaussScalar ck = -(tr / GaussScalar(k));
    c[static_cast<size_t>(n - k)] = ck;
    if (k < n) {
      cur = prod;
      for (int i = 0; i < n; ++i) cur(i, i) += ck;
    }
  }
  out.charpoly = Poly(std::move(c));
  out.adj_coeff = std::move(b);
  return out;
}

Poly charpoly(const Mat& m) { return charpoly_adjugate(m).charpoly; }

PolyMat resolvent_numerator(const Mat& m) {
  CharpolyAdjugate ca = charpoly_adjugate(m);
  const int n = m.rows();
  PolyMat r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<GaussScalar> cs(static_cast<size_t>(n), GaussScalar(0));
      for (int k = 0; k < n; ++k) cs[static_cast<size_t>(k)] = ca.adj_coeff[static_cast<size_t>(k)](i, j);
      r(i, j) = Poly(std::move(cs));
    }
  return r;
}

Mat eval_poly_at(const Poly& p, const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("eval_poly_at: non-square matrix");
  Mat acc(m.rows(), m.cols());
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * m;
    GaussScalar ck = p.coeff(k);
    for (int i = 0; i < m.rows(); ++i) acc(i, i) += ck;
  }
  return acc;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          r(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return r;
}

}  // namespace nahmrat

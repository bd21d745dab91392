#include "nahmrat/correspondence.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nahmrat {

ChargeVector::ChargeVector(std::vector<int> k) : k_(std::move(k)) {
  if (k_.empty()) throw std::invalid_argument("ChargeVector: empty");
  m_ = 0;
  for (size_t i = 0; i < k_.size(); ++i) {
    if (k_[i] < 0) throw std::invalid_argument("ChargeVector: negative entry");
    if (i > 0 && k_[i] > k_[i - 1])
      throw std::invalid_argument("ChargeVector: not weakly decreasing");
    m_ += k_[i];
  }
  if (m_ < 1) throw std::invalid_argument("ChargeVector: sum must be >= 1");
}

std::string ChargeVector::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < k_.size(); ++i) os << (i ? "," : "") << k_[i];
  os << ")";
  return os.str();
}

namespace {
void partitions_rec(int m, int n, int maxv, std::vector<int>& acc,
                    std::vector<ChargeVector>& out) {
  if (n == 0) {
    if (m == 0) out.emplace_back(acc);
    return;
  }
  for (int v = std::min(m, maxv); v >= 0; --v) {
    if (v * n < m) break;  // remaining entries can no longer reach m
    acc.push_back(v);
    partitions_rec(m - v, n - 1, v, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<ChargeVector> partitions_into(int m, int n) {
  std::vector<ChargeVector> out;
  std::vector<int> acc;
  partitions_rec(m, n, m, acc, out);
  return out;
}

MatrixPair MatrixPair::conjugated(const Mat& g) const {
  Mat gi = inverse(g);
  MatrixPair r;
  r.B = g * B * gi;
  r.w1 = w1 * gi;
  r.w.reserve(w.size());
  for (const auto& wi : w) r.w.push_back(g * wi);
  return r;
}

void RationalMapData::check() const {
  if (P.empty()) throw std::invalid_argument("RationalMapData: no P components");
  if (Q.degree() < 1 || !Q.is_monic())
    throw std::invalid_argument("RationalMapData: Q must be monic of degree >= 1");
  for (const auto& p : P)
    if (p.degree() >= Q.degree())
      throw std::invalid_argument("RationalMapData: deg P_i must be < deg Q");
  std::vector<Poly> all{Q};
  all.insert(all.end(), P.begin(), P.end());
  if (poly_gcd_many(all).degree() != 0)
    throw std::invalid_argument("RationalMapData: gcd(Q, P_1..P_n) != 1");
}

Mat krylov_block_matrix(const MatrixPair& p, const std::vector<int>& l) {
  const int n = p.n(), m = p.m();
  if (static_cast<int>(l.size()) != n)
    throw std::invalid_argument("krylov_block_matrix: l has wrong length");
  int total = 0;
  for (int li : l) {
    if (li < 0) throw std::invalid_argument("krylov_block_matrix: negative block width");
    total += li;
  }
  if (total != m) throw std::invalid_argument("krylov_block_matrix: sum l_i != m");
  Mat out(m, m);
  int col = 0;
  for (int i = n; i >= 1; --i) {  // block for w_{i+1} (charge index i), widest last
    Mat v = p.w[static_cast<size_t>(i - 1)];
    for (int j = 0; j < l[static_cast<size_t>(i - 1)]; ++j) {
      out.set_block(0, col++, v);
      v = p.B * v;
    }
  }
  return out;
}

Mat stacked_krylov_rows(const MatrixPair& p) {
  const int m = p.m();
  Mat out(m, m);
  Mat r = p.w1;
  for (int j = 0; j < m; ++j) {
    out.set_block(j, 0, r);
    r = r * p.B;
  }
  return out;
}

ValidityReport validate_matrix_pair(const MatrixPair& p, const ChargeVector& k) {
  ValidityReport rep;
  const int n = p.n(), m = p.m();
  rep.dims_ok = k.n() == n && k.m() == m && p.B.is_square() && p.w1.rows() == 1 &&
                p.w1.cols() == m;
  for (const auto& wi : p.w) rep.dims_ok = rep.dims_ok && wi.rows() == m && wi.cols() == 1;
  if (!rep.dims_ok) throw std::invalid_argument("validate_matrix_pair: dimension mismatch");

  rep.cyclic = !det(stacked_krylov_rows(p)).is_zero();
  rep.det_Mk_nonzero = !det(krylov_block_matrix(p, k.entries())).is_zero();
  // Rebalancings: for charge indices i > j we have k_i <= k_j; moving
  // l in {1..k_j - k_i} from entry j to entry i must kill the determinant.
  for (int j = 1; j <= n; ++j)
    for (int i = j + 1; i <= n; ++i)
      for (int l = 1; l <= k[j - 1] - k[i - 1]; ++l) {
        std::vector<int> shifted = k.entries();
        shifted[static_cast<size_t>(i - 1)] += l;
        shifted[static_cast<size_t>(j - 1)] -= l;
        bool vanished = det(krylov_block_matrix(p, shifted)).is_zero();
        rep.vanishing.push_back({i, j, l, vanished});
        rep.all_vanish = rep.all_vanish && vanished;
      }
  return rep;
}

std::string ValidityReport::describe() const {
  std::ostringstream os;
  if (valid()) return "valid";
  if (!cyclic) os << "w1 is not cyclic for B^T; ";
  if (!det_Mk_nonzero) os << "det M(k) = 0; ";
  for (const auto& v : vanishing)
    if (!v.vanished)
      os << "det M(k + " << v.l << "(e_" << v.i << " - e_" << v.j << ")) != 0; ";
  return os.str();
}

RationalMapData to_rational_map(const MatrixPair& p) {
  CharpolyAdjugate ca = charpoly_adjugate(p.B);
  const int m = p.m();
  RationalMapData f;
  f.Q = ca.charpoly;
  f.P.reserve(static_cast<size_t>(p.n()));
  for (const auto& wi : p.w) {
    std::vector<GaussScalar> c(static_cast<size_t>(m), GaussScalar(0));
    for (int deg = 0; deg < m; ++deg) {
      Mat s = p.w1 * ca.adj_coeff[static_cast<size_t>(deg)] * wi;  // 1 x 1
      c[static_cast<size_t>(deg)] = s(0, 0);
    }
    f.P.emplace_back(std::move(c));
  }
  std::vector<Poly> all{f.Q};
  all.insert(all.end(), f.P.begin(), f.P.end());
  if (poly_gcd_many(all).degree() != 0)
    throw std::domain_error(
        "to_rational_map: gcd(Q, P_i) != 1 - the pair fails det M(k) != 0 and is invalid");
  return f;
}

GaussScalar residue_pairing(const Poly& pi, const Poly& sigma, const Poly& Q) {
  if (Q.degree() < 1 || !Q.is_monic())
    throw std::domain_error("residue_pairing: Q must be monic of degree >= 1");
  Poly rem = (pi * sigma).divmod(Q).rem;
  return rem.coeff(Q.degree() - 1);
}

MatrixPair from_rational_map(const RationalMapData& f) {
  f.check();
  const int m = f.m();
  MatrixPair p;
  p.B = Mat(m, m);
  for (int j = 0; j + 1 < m; ++j) p.B(j + 1, j) = GaussScalar(1);
  for (int i = 0; i < m; ++i) p.B(i, m - 1) = -f.Q.coeff(i);
  p.w1 = Mat(1, m);
  p.w1(0, m - 1) = GaussScalar(1);
  for (const auto& pi : f.P) {
    Mat v(m, 1);
    for (int i = 0; i < m; ++i) v(i, 0) = pi.coeff(i);
    p.w.push_back(std::move(v));
  }
  return p;
}

Canonicalized canonicalize(const MatrixPair& p) {
  Mat kry = stacked_krylov_rows(p);
  if (det(kry).is_zero()) throw std::domain_error("canonicalize: w1 is not cyclic for B^T");
  return Canonicalized{p.conjugated(kry), kry};
}

namespace {

struct BandBuild {
  Mat mat;
  std::vector<int> var;  // flat row-major; -1 marks a constant entry
  int var_at(int r, int c, int cols) const { return var[static_cast<size_t>(r) * cols + c]; }
};

// Shared construction for ~M(l): see syzygy_constraint_matrix.  Each matrix
// position also records which free coefficient of (Q, P) it holds so the
// tangent computation can differentiate determinants exactly.
BandBuild build_syzygy_band(const RationalMapData& f, const std::vector<int>& l) {
  const int n = f.n(), m = f.m();
  if (static_cast<int>(l.size()) != n)
    throw std::invalid_argument("syzygy_constraint_matrix: l has wrong length");
  int total = 0, lmax = 0;
  for (int li : l) {
    if (li < 0) throw std::invalid_argument("syzygy_constraint_matrix: negative entry");
    total += li;
    lmax = std::max(lmax, li);
  }
  if (total != m) throw std::invalid_argument("syzygy_constraint_matrix: sum l_i != m");

  const int size = m + lmax - 1;
  BandBuild b{Mat(size, size), std::vector<int>(static_cast<size_t>(size) * size, -1)};
  auto put = [&](int r, int c, const GaussScalar& v, int var) {
    b.mat(r, c) = v;
    b.var[static_cast<size_t>(r) * size + c] = var;
  };

  // Column c holds the power z^{m + lmax - 2 - c}.
  int row = 0;
  for (int r = 0; r < lmax - 1; ++r, ++row) {
    // row for s_{lmax-2-r}: coefficient of z^p in z^{lmax-2-r} Q is q_{p - shift}.
    int shift = lmax - 2 - r;
    for (int c = 0; c < size; ++c) {
      int p = m + lmax - 2 - c;
      int idx = p - shift;
      if (idx < 0 || idx > m) continue;
      put(row, c, f.Q.coeff(idx), idx == m ? -1 : idx);
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int r = 0; r < l[static_cast<size_t>(i - 1)]; ++r, ++row) {
      int shift = l[static_cast<size_t>(i - 1)] - 1 - r;
      for (int c = 0; c < size; ++c) {
        int p = m + lmax - 2 - c;
        int idx = p - shift;
        if (idx < 0 || idx > m - 1) continue;
        put(row, c, f.P[static_cast<size_t>(i - 1)].coeff(idx), m + (i - 1) * m + idx);
      }
    }
  }
  return b;
}

}  // namespace

Mat syzygy_constraint_matrix(const RationalMapData& f, const std::vector<int>& l) {
  return build_syzygy_band(f, l).mat;
}

bool predicate_A(const RationalMapData& f, const std::vector<int>& l) {
  return !det(syzygy_constraint_matrix(f, l)).is_zero();
}

namespace {

// Rank of the row space spanned by z^j Q (0 <= j <= s_bound) and z^j P_i
// (0 <= j <= t_bound); nu(d) = total rows - rank.
int bounded_syzygy_nullity(const RationalMapData& f, int d) {
  const int n = f.n(), m = f.m();
  int srows = d;              // s_0 .. s_{d-1}
  int trows = n * (d + 1);    // t_{i0} .. t_{id}
  int cols = m + d;           // powers 0 .. m+d-1
  Mat mat(srows + trows, cols);
  int row = 0;
  for (int j = 0; j < srows; ++j, ++row)
    for (int idx = 0; idx <= m; ++idx) mat(row, j + idx) = f.Q.coeff(idx);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= d; ++j, ++row)
      for (int idx = 0; idx < m; ++idx) mat(row, j + idx) = f.P[static_cast<size_t>(i)].coeff(idx);
  return srows + trows - rank(mat);
}

}  // namespace

ChargeVector holomorphic_charge(const RationalMapData& f) {
  f.check();
  const int n = f.n(), m = f.m();
  std::vector<int> degrees;
  int nu_prev = 0, mu_prev = 0;
  for (int d = 0; d <= m && static_cast<int>(degrees.size()) < n; ++d) {
    int nu = bounded_syzygy_nullity(f, d);
    int mu = nu - nu_prev;  // number of minimal indices <= d
    for (int c = 0; c < mu - mu_prev; ++c) degrees.push_back(d);
    nu_prev = nu;
    mu_prev = mu;
  }
  if (static_cast<int>(degrees.size()) != n)
    throw std::logic_error("holomorphic_charge: kernel rank never reached n");
  std::sort(degrees.begin(), degrees.end(), std::greater<int>());
  ChargeVector k(degrees);
  if (k.m() != m) throw std::logic_error("holomorphic_charge: indices do not sum to m");
  return k;
}

bool membership_Rk(const RationalMapData& f, const ChargeVector& k) {
  f.check();
  if (k.m() != f.m()) throw std::invalid_argument("membership_Rk: sum k_i != deg Q");
  if (k.n() != f.n()) throw std::invalid_argument("membership_Rk: length of k != n");
  if (!predicate_A(f, k.entries())) return false;
  const int n = k.n();
  for (int j = 1; j <= n; ++j)
    for (int i = j + 1; i <= n; ++i)
      for (int l = 1; l <= k[j - 1] - k[i - 1]; ++l) {
        std::vector<int> shifted = k.entries();
        shifted[static_cast<size_t>(i - 1)] += l;
        shifted[static_cast<size_t>(j - 1)] -= l;
        if (predicate_A(f, shifted)) return false;
      }
  return true;
}

int tangent_dimension(const RationalMapData& f, const ChargeVector& k) {
  if (!membership_Rk(f, k)) throw std::domain_error("tangent_dimension: membership_Rk fails");
  const int n = f.n(), m = f.m();
  const int nvars = (n + 1) * m;

  std::vector<std::vector<int>> shifts;
  for (int j = 1; j <= n; ++j)
    for (int i = j + 1; i <= n; ++i)
      for (int l = 1; l <= k[j - 1] - k[i - 1]; ++l) {
        std::vector<int> s = k.entries();
        s[static_cast<size_t>(i - 1)] += l;
        s[static_cast<size_t>(j - 1)] -= l;
        shifts.push_back(std::move(s));
      }
  if (shifts.empty()) return nvars;

  Mat jac(static_cast<int>(shifts.size()), nvars);
  for (size_t c = 0; c < shifts.size(); ++c) {
    BandBuild b = build_syzygy_band(f, shifts[c]);
    const int sz = b.mat.rows();
    // adj(M) from the Faddeev-LeVerrier coefficients: adj(-M) = z^0 part of
    // adj(zI - M), and adj(-M) = (-1)^{sz-1} adj(M).
    CharpolyAdjugate ca = charpoly_adjugate(b.mat);
    Mat adj = ca.adj_coeff[0];
    if (sz % 2 == 0) adj = -adj;
    // d det / d v = sum over positions holding v of adj(M)_{cr}.
    for (int r = 0; r < sz; ++r)
      for (int cc = 0; cc < sz; ++cc) {
        int v = b.var_at(r, cc, sz);
        if (v >= 0) jac(static_cast<int>(c), v) += adj(cc, r);
      }
  }
  return nvars - rank(jac);
}

}  // namespace nahmrat

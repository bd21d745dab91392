#include "nahmrat/su2.hpp"

#include <cmath>
#include <stdexcept>

namespace nahmrat {

Mat x_of(int l) {
  Mat x(l, l);
  for (int r = 0; r < l; ++r) x(r, r) = GaussScalar(mpq_class(2 * r - (l - 1), 4));
  return x;
}

Mat y_of(int l) {
  Mat y(l, l);
  for (int r = 0; r + 1 < l; ++r) y(r + 1, r) = GaussScalar(1);
  return y;
}

IrrepTriple su2_irrep(int d) {
  if (d < 1) throw std::invalid_argument("su2_irrep: d must be >= 1");
  IrrepTriple t;
  t.d = d;
  t.e = Mat(d, d);
  t.f = y_of(d);
  t.h = Mat(d, d);
  for (int r = 1; r < d; ++r) t.e(r - 1, r) = GaussScalar(r * (d - r));
  for (int r = 0; r < d; ++r) t.h(r, r) = GaussScalar(d - 1 - 2 * r);

  using cd = std::complex<double>;
  Eigen::MatrixXcd jp = Eigen::MatrixXcd::Zero(d, d), j3 = Eigen::MatrixXcd::Zero(d, d);
  double j = (d - 1) / 2.0;
  for (int r = 1; r < d; ++r) jp(r - 1, r) = std::sqrt(static_cast<double>(r) * (d - r));
  for (int r = 0; r < d; ++r) j3(r, r) = j - r;
  Eigen::MatrixXcd jm = jp.adjoint();
  t.tau[0] = cd(0, -0.5) * (jp + jm);
  t.tau[1] = -0.5 * (jp - jm);
  t.tau[2] = cd(0, -1.0) * j3;
  return t;
}

std::array<Mat, 3> exact_su2_triple(int d) {
  IrrepTriple t = su2_irrep(d);
  GaussScalar half_i = GaussScalar(mpq_class(0), mpq_class(-1, 2));
  GaussScalar half = GaussScalar(mpq_class(-1, 2));
  return {(t.e + t.f) * half_i, (t.e - t.f) * half, t.h * half_i};
}

BoundaryResidues boundary_residues(const ChargeVector& k) {
  const int m = k.m(), n = k.n();
  BoundaryResidues r;
  r.x1 = -x_of(m);
  r.y1 = y_of(m).transpose();
  r.xN = Mat(m, m);
  r.yN = Mat(m, m);
  int off = 0;
  for (int i = n; i >= 1; --i) {  // blocks ordered k_n, ..., k_1
    int sz = k[i - 1];
    r.xN.set_block(off, off, x_of(sz));
    r.yN.set_block(off, off, y_of(sz));
    off += sz;
  }
  return r;
}

CasimirReport casimir_spectrum_check(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("casimir_spectrum_check: a, b >= 1");
  CasimirReport rep;
  rep.a = a;
  rep.b = b;

  auto t3 = exact_su2_triple(3);
  auto ta = exact_su2_triple(a);
  auto tb = exact_su2_triple(b);
  Mat ia = Mat::identity(a), ib = Mat::identity(b);
  Mat T(3 * a * b, 3 * a * b);
  for (int i = 0; i < 3; ++i) {
    Mat di = kron(ta[static_cast<size_t>(i)], ib) - kron(ia, tb[static_cast<size_t>(i)].transpose());
    T = T + kron(t3[static_cast<size_t>(i)], di);
  }
  rep.computed_charpoly = charpoly(T);

  // Mat_{a x b} decomposes with highest weights mu = |a-b| .. a+b-2 step 2;
  // tensoring with the 3-dimensional piece contributes nu in CG(2, mu) and
  // the eigenvalue (mu(mu+2) - nu(nu+2))/8 + 1 with multiplicity nu + 1.
  for (int mu = std::abs(a - b); mu <= a + b - 2; mu += 2)
    for (int nu = std::abs(mu - 2); nu <= mu + 2; nu += 2) {
      GaussScalar ev(mpq_class(mu * (mu + 2) - nu * (nu + 2), 8) + 1);
      rep.predicted.emplace_back(ev, nu + 1);
    }

  Poly prod = Poly::constant(GaussScalar(1));
  for (const auto& [ev, mult] : rep.predicted) {
    Poly lin(std::vector<GaussScalar>{-ev, GaussScalar(1)});
    for (int c = 0; c < mult; ++c) prod = prod * lin;
  }
  rep.charpoly_match = (prod == rep.computed_charpoly);

  rep.gamma_integral = true;
  rep.gamma_bound = true;
  for (const auto& [ev, mult] : rep.predicted) {
    (void)mult;
    if (!ev.is_real() || ev.re() > 0) continue;  // only eigenvalues -gamma, gamma >= 0
    mpq_class two_gamma = -2 * ev.re();
    if (two_gamma.get_den() != 1) rep.gamma_integral = false;
    if (two_gamma < std::abs(a - b)) rep.gamma_bound = false;
  }
  return rep;
}

Mat tridiag_M(int l, const mpq_class& c) {
  if (l < 1) throw std::invalid_argument("tridiag_M: l must be >= 1");
  Mat m(l, l);
  for (int r = 0; r < l; ++r) m(r, r) = GaussScalar(mpq_class(11, 2));
  m(0, 0) = GaussScalar(c);
  m(l - 1, l - 1) = GaussScalar(c);
  for (int r = 0; r + 1 < l; ++r) {
    m(r, r + 1) = GaussScalar(-2);
    m(r + 1, r) = GaussScalar(-2);
  }
  return m;
}

std::vector<mpq_class> tridiag_c_sequence(int count) {
  std::vector<mpq_class> c;
  c.reserve(static_cast<size_t>(count));
  mpq_class cur(7, 2);
  for (int i = 0; i < count; ++i) {
    c.push_back(cur);
    cur = mpq_class(11, 2) - 4 / cur;
  }
  return c;
}

TridiagDet tridiag_det_two_ways(int l) {
  if (l < 1) throw std::invalid_argument("tridiag_det_two_ways: l must be >= 1");
  TridiagDet out;
  out.direct = det(tridiag_M(l, mpq_class(7, 2)));
  const int half = l / 2;
  if (l == 1) {
    out.factored = GaussScalar(mpq_class(7, 2));
  } else {
    std::vector<mpq_class> c = tridiag_c_sequence(half);
    mpq_class prod = 1;
    for (int i = 0; i + 1 < half; ++i) prod *= c[static_cast<size_t>(i)] * c[static_cast<size_t>(i)];
    mpq_class last = c[static_cast<size_t>(half - 1)];
    mpq_class head;
    if (l % 2 == 0)
      head = last * last - 4;
    else
      head = last * (mpq_class(11, 2) * last - 8);
    out.factored = GaussScalar(head * prod);
  }
  out.positive = out.direct.is_real() && out.direct.re() > 0;
  return out;
}

HalfPowerSolution halfpower_gauge_solve(int k1, const GaussScalar& cbar_k2_2,
                                        const GaussScalar& cbar_m1_1) {
  if (k1 < 3) throw std::invalid_argument("halfpower_gauge_solve: k1 must be >= 3");
  const int sz = k1 - 2;
  // Corner rows carry 7/2 = 3/2 + 2: 3/2 from the alpha terms and 2 from the
  // beta difference coupling.  At k1 = 3 the two corner equations fall on the
  // same matrix position and the coupling terms are absent, so the merged
  // 1 x 1 system has entry 3/2.
  Mat M = sz == 1 ? tridiag_M(1, mpq_class(3, 2)) : tridiag_M(sz, mpq_class(7, 2));
  Mat rhs_mu(sz, 1), rhs_nu(sz, 1);
  rhs_mu(0, 0) = cbar_k2_2 * GaussScalar(2);
  rhs_nu(0, 0) = cbar_m1_1 * GaussScalar(2);
  Mat mu = solve(M, rhs_mu), nu = solve(M, rhs_nu);
  HalfPowerSolution sol;
  for (int r = 0; r < sz; ++r) {
    sol.mu.push_back(mu(r, 0));
    sol.nu.push_back(nu(r, 0));
  }
  return sol;
}

HalfPowerCoefficients halfpower_assembly(int k1, const GaussScalar& c_k2_2,
                                         const GaussScalar& c_m1_1,
                                         const std::vector<GaussScalar>& mu,
                                         const std::vector<GaussScalar>& nu) {
  if (k1 < 3) throw std::invalid_argument("halfpower_assembly: k1 must be >= 3");
  const int k2 = k1 - 1, m = k1 + k2;
  if (static_cast<int>(mu.size()) != k1 - 2 || static_cast<int>(nu.size()) != k1 - 2)
    throw std::invalid_argument("halfpower_assembly: mu, nu must have k1 - 2 entries");
  HalfPowerCoefficients out;
  out.alpha_half = Mat(m, m);
  out.beta_half = Mat(m, m);
  GaussScalar mth(mpq_class(-3, 2));
  // 1-based positions follow the expansion: alpha gets -3/2 mu_i at
  // (m+1-i, k2-i) and -3/2 nu_i at (k2+1-i, m-1-i).
  for (int i = 1; i <= k1 - 2; ++i) {
    out.alpha_half(m - i, k2 - i - 1) = mth * mu[static_cast<size_t>(i - 1)];
    out.alpha_half(k2 - i, m - i - 2) = mth * nu[static_cast<size_t>(i - 1)];
  }
  for (int i = 1; i <= k1 - 3; ++i) {
    out.beta_half(m - i, k2 - i - 2) =
        mu[static_cast<size_t>(i - 1)] - mu[static_cast<size_t>(i)];
    out.beta_half(k2 - i, m - i - 3) =
        nu[static_cast<size_t>(i - 1)] - nu[static_cast<size_t>(i)];
  }
  out.beta_half(k2 - 1, m - 1) += c_k2_2;   // C at (k2, m)
  out.beta_half(m - 2, k2 - 1) += c_m1_1;   // C at (m-1, k2)
  return out;
}

Mat F_minus_half_coefficient(const Mat& alpha_half, const Mat& beta_half, const Mat& xN,
                             const Mat& yN) {
  if (alpha_half.rows() != alpha_half.cols() || beta_half.rows() != beta_half.cols() ||
      alpha_half.rows() != beta_half.rows() || xN.rows() != alpha_half.rows() ||
      yN.rows() != alpha_half.rows() || !xN.is_square() || !yN.is_square())
    throw std::invalid_argument("F_minus_half_coefficient: dimension mismatch");
  Mat as = alpha_half.conj_transpose();
  Mat bs = beta_half.conj_transpose();
  Mat sym = (alpha_half + as) * GaussScalar(1, 2);
  Mat comm = commutator(xN, as) + commutator(alpha_half, xN.conj_transpose()) +
             commutator(yN, bs) + commutator(beta_half, yN.conj_transpose());
  return sym + comm * GaussScalar(2);
}

}  // namespace nahmrat

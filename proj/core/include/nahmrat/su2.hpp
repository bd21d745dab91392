#pragma once

#include <Eigen/Dense>

#include "nahmrat/correspondence.hpp"

namespace nahmrat {

// Irreducible representation data of dimension d.  The exact triple (e, f, h)
// is the integer sl2 basis with [h,e] = 2e, [h,f] = -2f, [e,f] = h; the
// floating triple satisfies [tau_1, tau_2] = tau_3 cyclically and is
// skew-hermitian, with tau_j = -(i/2) sigma_j at d = 2.
struct IrrepTriple {
  int d;
  Mat e, f, h;
  std::array<Eigen::MatrixXcd, 3> tau;
};

IrrepTriple su2_irrep(int d);

// diag(-(l-1)/4, -(l-3)/4, ..., (l-1)/4).
Mat x_of(int l);
// Subdiagonal shift matrix of size l.
Mat y_of(int l);

// Exact Gaussian-rational representation triple with the same commutation
// relations as the unitary tau's (conjugate over C, so spectra agree):
// t_1 = -(i/2)(e+f), t_2 = -(1/2)(e-f), t_3 = -(i/2)h.
std::array<Mat, 3> exact_su2_triple(int d);

// x_1 = -x(m), y_1 = y(m)^T, x_N = diag(x(k_n), ..., x(k_1)),
// y_N = diag(y(k_n), ..., y(k_1)).
struct BoundaryResidues {
  Mat x1, y1, xN, yN;
};
BoundaryResidues boundary_residues(const ChargeVector& k);

// Spectrum check for T = sum_i t_i^{(3)} (x) D_i with
// D_i(X) = t_i^{(a)} X - X t_i^{(b)} on a x b matrices: the characteristic
// polynomial must equal the product over the Clebsch-Gordan-predicted
// eigenvalue multiset, and every eigenvalue -gamma with gamma >= 0 must have
// 2 gamma a nonnegative integer >= |a - b|.
struct CasimirReport {
  int a, b;
  std::vector<std::pair<GaussScalar, int>> predicted;  // (eigenvalue, multiplicity)
  Poly computed_charpoly;
  bool charpoly_match;
  bool gamma_integral;
  bool gamma_bound;
  bool pass() const { return charpoly_match && gamma_integral && gamma_bound; }
};
CasimirReport casimir_spectrum_check(int a, int b);

// Symmetric tridiagonal with corner value c, interior diagonal 11/2 and
// off-diagonal -2; degenerates to (c) and [[c,-2],[-2,c]] for l <= 2.
Mat tridiag_M(int l, const mpq_class& c);

// Determinant of M_l(7/2) both directly and through the corner-folding
// product formula; the two agree exactly and are positive for all l >= 1.
struct TridiagDet {
  GaussScalar direct;
  GaussScalar factored;
  bool positive;
};
TridiagDet tridiag_det_two_ways(int l);

// The c-sequence c_1 = 7/2, c_{i+1} = 11/2 - 4/c_i used by the folding.
std::vector<mpq_class> tridiag_c_sequence(int count);

// Solves the two half-power systems M_{k1-2}(7/2) mu = (2 conj(C_k2_2), 0...)
// and likewise for nu; k1 >= 3, charge (k1, k1 - 1).  The arguments are the
// already-conjugated coefficients.
struct HalfPowerSolution {
  std::vector<GaussScalar> mu, nu;
};
HalfPowerSolution halfpower_gauge_solve(int k1, const GaussScalar& cbar_k2_2,
                                        const GaussScalar& cbar_m1_1);

// The z^{1/2} coefficients of the gauged pair for charge (k1, k1-1):
// alpha_half from (mu, nu), beta_half from (mu, nu) differences plus the two
// surviving C entries (c_k2_2 at position (k2, m), c_m1_1 at (m-1, k2),
// 1-based).
struct HalfPowerCoefficients {
  Mat alpha_half, beta_half;
};
HalfPowerCoefficients halfpower_assembly(int k1, const GaussScalar& c_k2_2,
                                         const GaussScalar& c_m1_1,
                                         const std::vector<GaussScalar>& mu,
                                         const std::vector<GaussScalar>& nu);

// (a + a*)/2 + 2([xN, a*] + [a, xN*] + [yN, b*] + [b, yN*]).
Mat F_minus_half_coefficient(const Mat& alpha_half, const Mat& beta_half, const Mat& xN,
                             const Mat& yN);

}  // namespace nahmrat

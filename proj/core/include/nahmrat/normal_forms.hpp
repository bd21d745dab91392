#pragma once

#include "nahmrat/correspondence.hpp"
#include "nahmrat/laurent.hpp"

namespace nahmrat {

// Index conventions used throughout this module.
//
// Charges are 1-based: k = (k_1 >= ... >= k_n).  The Krylov basis
// (w_N, ..., B^{k_n - 1} w_N, ..., w_2, ..., B^{k_1 - 1} w_2) groups into
// blocks ordered charge n first; the block of charge i occupies the 0-based
// index range [block_offset(i), block_offset(i) + k_i).  Block positions
// (as in the displayed block matrices) are 1-based with position b holding
// charge n + 1 - b.
//
// C is m x n with column i (0-based i-1) the coordinate vector of
// B^{k_i} w_{i+1} in the Krylov basis.
class BlockLayout {
public:
  explicit BlockLayout(const ChargeVector& k) : k_(k) {}

  int n() const { return k_.n(); }
  int m() const { return k_.m(); }
  // 0-based start of the charge-i block, i in 1..n.
  int charge_offset(int i) const;
  int charge_size(int i) const { return k_[i - 1]; }
  // Block position b in 1..n -> charge index.
  int charge_of_block(int b) const { return k_.n() + 1 - b; }
  int block_offset(int b) const { return charge_offset(charge_of_block(b)); }
  int block_size(int b) const { return charge_size(charge_of_block(b)); }

private:
  ChargeVector k_;
};

struct NormalFormData {
  ChargeVector k;
  std::vector<GaussScalar> q;  // m entries, q_1..q_m of the lambda_1 display
  Mat C;                       // m x n

  // The derived sparsity: in column i, the charge-j segment keeps only its
  // first k_i entries whenever i > j (so k_i <= k_j).
  bool c_pattern_ok() const;
};

// Zeroes the positions excluded by the sparsity pattern.
Mat apply_c_pattern(Mat C, const ChargeVector& k);

// Blocked matrix B read off from the Krylov basis: within-block subdiagonal
// ones, and the last column of each charge block equal to the corresponding
// column of C.
Mat hurtubise_block_B(const Mat& C, const ChargeVector& k);

// Canonical framing for hurtubise_block_B pairs: w1 = e_1^T and w_{i+1} the
// first basis vector of the charge-i block.
MatrixPair hurtubise_pair(const Mat& C, const ChargeVector& k);

// The two beta_st displays.  Exponents are formal; half powers live only on
// off-diagonal blocks of the lambda_N side.
struct HalfPowerBlock {
  Mat residue;        // coefficient of z^{-1} (the y_N block subdiagonal)
  LaurentMat regular; // monomial grid; every exponent >= |k_a - k_b| / 2
};
struct BetaStForm {
  LaurentMat beta_lambda1;  // subdiagonal z^{-1}, last column -z^{m-r} q_r
  Mat alpha_res_lambda1;    // residue of g_st.alpha_st at lambda_1 (= x(m))
  HalfPowerBlock beta_lambdaN;
  Mat alpha_res_lambdaN;    // x_N
};
BetaStForm build_beta_st(const NormalFormData& nf);

// Verifies g_q(z) A_sup(z) = A_sub(z) g_q(z) symbolically, where A_sup is the
// superdiagonal-z^{-1} display with last row -z^{m-c} q_c, A_sub its
// subdiagonal transpose-style counterpart, and g_q the z-weighted
// anti-triangular Hankel matrix of q; also asserts det(g_q) = +-1.
bool gq_conjugation_identity(const std::vector<GaussScalar>& q);

// Named sparsity families for the displayed block shapes.
//   "gb-source": every lower block in truncated last-column form (the
//                hurtubise_block_B shape);
//   "gb-target": every lower block with all but possibly the first row zero.
bool block_pattern_validate(const Mat& M, const ChargeVector& k, const std::string& pattern_id);

// One conjugation step: block indices i > j (1-based positions).  Returns
// (g_B, B') with B' = g_B B g_B^{-1}, B' having the (i,j) block in first-row
// form.  Verifies the precondition pattern, performs the multiplication
// explicitly, and checks that only the positions the recursion is allowed to
// touch have changed.
std::pair<Mat, Mat> gB_transform(const Mat& B, const ChargeVector& k, int i, int j);

// Inverse step: reconstructs B with gB_transform(B, k, i, j).second == B'.
Mat gB_inverse_transform(const Mat& Bp, const ChargeVector& k, int i, int j);

// Full sweep (2,1), (3,1), (3,2), ..., (n, n-1); returns (g, B_H) with
// g B g^{-1} = B_H verified by explicit multiplication.
std::pair<Mat, Mat> to_hurtubise_form(const Mat& B, const ChargeVector& k);

// Reverse sweep inverting to_hurtubise_form.
Mat from_hurtubise_form(const Mat& BH, const ChargeVector& k);

}  // namespace nahmrat

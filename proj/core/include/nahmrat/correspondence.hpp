#pragma once

#include <string>
#include <vector>

#include "nahmrat/mat.hpp"

namespace nahmrat {

// Weakly decreasing nonnegative integers k_1 >= ... >= k_n with sum m >= 1.
class ChargeVector {
public:
  explicit ChargeVector(std::vector<int> k);

  int n() const { return static_cast<int>(k_.size()); }
  int m() const { return m_; }
  int operator[](int i) const { return k_[static_cast<size_t>(i)]; }  // 0-based
  const std::vector<int>& entries() const { return k_; }

  friend bool operator==(const ChargeVector& a, const ChargeVector& b) { return a.k_ == b.k_; }
  friend bool operator!=(const ChargeVector& a, const ChargeVector& b) { return !(a == b); }

  std::string str() const;

private:
  std::vector<int> k_;
  int m_;
};

// All weakly decreasing nonnegative n-tuples summing to m, lexicographically
// decreasing order.
std::vector<ChargeVector> partitions_into(int m, int n);

// The finite data (B, w_1; w_2..w_N) classifying boundary behaviour:
// B is m x m, w1 a 1 x m row, and w[i] (i = 0..n-1) the m x 1 column written
// w_{i+2} in block displays.  Validity is a checked predicate, not an
// invariant of construction.
struct MatrixPair {
  Mat B;
  Mat w1;                // 1 x m
  std::vector<Mat> w;    // n columns, each m x 1; w[i] pairs with charge k_{i+1}
  int n() const { return static_cast<int>(w.size()); }
  int m() const { return B.rows(); }

  friend bool operator==(const MatrixPair& a, const MatrixPair& b) {
    return a.B == b.B && a.w1 == b.w1 && a.w == b.w;
  }

  // g.p = (gBg^{-1}, w1 g^{-1}, g w_i).
  MatrixPair conjugated(const Mat& g) const;
};

// Based rational map CP^1 -> CP^n as the tuple [Q, P_1, ..., P_n] with Q
// monic of degree m and deg P_i < m; gcd(Q, P_1, ..., P_n) = 1.  Monicity and
// the degree bounds encode the basepoint F(infinity) = [1, 0, ..., 0].
struct RationalMapData {
  Poly Q;
  std::vector<Poly> P;
  int n() const { return static_cast<int>(P.size()); }
  int m() const { return Q.degree(); }

  friend bool operator==(const RationalMapData& a, const RationalMapData& b) {
    return a.Q == b.Q && a.P == b.P;
  }
  friend bool operator!=(const RationalMapData& a, const RationalMapData& b) { return !(a == b); }

  // Throws std::invalid_argument when an invariant fails.
  void check() const;
};

// Block Krylov matrix M(l) = (w_N ... B^{l_n - 1} w_N ... w_2 ... B^{l_1 - 1} w_2):
// the block for w_{i+1} has l_i columns; blocks run from charge index n down
// to 1.  Requires sum l_i = m, l_i >= 0 (an l_i = 0 block contributes no
// columns).
Mat krylov_block_matrix(const MatrixPair& p, const std::vector<int>& l);

// Rows w1, w1 B, ..., w1 B^{m-1} stacked.
Mat stacked_krylov_rows(const MatrixPair& p);

// The three conditions of the classification: w1 cyclic for B^T,
// det M(k) != 0, and det M(k + l(e_i - e_j)) = 0 whenever the rebalancing
// moves l units from a strictly larger charge entry k_j to a smaller one k_i
// (1 <= l <= k_j - k_i).  Index convention: for charge indices i > j one has
// k_i <= k_j and the shift adds to entry i, subtracts from entry j.
struct ValidityReport {
  bool dims_ok = false;
  bool cyclic = false;
  bool det_Mk_nonzero = false;
  struct Vanishing {
    int i, j, l;     // 1-based charge indices, i > j
    bool vanished;
  };
  std::vector<Vanishing> vanishing;
  bool all_vanish = true;

  bool valid() const { return dims_ok && cyclic && det_Mk_nonzero && all_vanish; }
  std::string describe() const;
};
ValidityReport validate_matrix_pair(const MatrixPair& p, const ChargeVector& k);

// Q = charpoly(B), P_i = w1 adj(zI - B) w_{i+1}.  Coprimality of the result
// is asserted, never repaired: a nontrivial gcd witnesses det M(k) = 0 and
// raises std::domain_error.
RationalMapData to_rational_map(const MatrixPair& p);

// Coefficient of t^{m-1} in (pi * sigma mod Q): the residue-sum pairing
// evaluated without root finding.  Q must be monic of degree >= 1.
GaussScalar residue_pairing(const Poly& pi, const Poly& sigma, const Poly& Q);

// Companion-basis inverse: B acts as multiplication by t on C[t]/<Q> in the
// basis (1, t, ..., t^{m-1}), w1 is the coordinate row of (residue pairing
// with 1) = e_m^T, w_{i+1} the coefficient vector of P_i.
MatrixPair from_rational_map(const RationalMapData& f);

// Conjugates by the stacked Krylov matrix so the new w1-Krylov rows become
// the identity; canonical forms agree exactly iff the pairs are
// GL(m)-equivalent.  Returns the new pair and the transformation used.
struct Canonicalized {
  MatrixPair pair;
  Mat transform;
};
Canonicalized canonicalize(const MatrixPair& p);

// Band matrix ~M(l) whose left null vectors are the degree-bounded syzygy
// tuples: rows are l_max - 1 shifted copies of Q's coefficients then, for
// each i, l_i shifted copies of P_i's; columns are the powers
// z^{m + l_max - 2}, ..., z^0.  Square of size m + l_max - 1.
Mat syzygy_constraint_matrix(const RationalMapData& f, const std::vector<int>& l);

// A_l(F): no nonzero (s, t_1..t_n) with deg s <= l_max - 2, deg t_i <= l_i - 1
// and sQ + sum t_i P_i = 0; equivalently ~M(l) is nonsingular.
bool predicate_A(const RationalMapData& f, const std::vector<int>& l);

// Minimal syzygy indices of the row (Q, P_1, ..., P_n), sorted decreasing.
// Computed from the increments of nu(d) = dim{syzygies with deg t_i <= d,
// deg s <= d - 1} for d = 0, 1, 2, ...
ChargeVector holomorphic_charge(const RationalMapData& f);

// The characterization battery: A_k(F) holds and every rebalancing of k that
// moves l units from a strictly larger entry to a smaller one fails the A
// predicate.  For based maps this selects exactly the holomorphic charge.
bool membership_Rk(const RationalMapData& f, const ChargeVector& k);

// dim of the charge stratum at F: (n+1)m minus the exact rank of the
// Jacobian of the constraints det ~M(k + shift) = 0 with respect to the
// (n+1)m free coefficients of (Q, P), evaluated at F.  Smoothness of the
// sample point is assumed.
int tangent_dimension(const RationalMapData& f, const ChargeVector& k);

}  // namespace nahmrat

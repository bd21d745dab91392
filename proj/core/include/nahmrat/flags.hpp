#pragma once

#include "nahmrat/correspondence.hpp"

namespace nahmrat {

// A polynomial tuple (s, t_1..t_n) with sQ + sum t_i P_i = 0 for the owning
// map; components pair positionally with (Q, P_1..P_n).
struct SyzygyTuple {
  Poly s;
  std::vector<Poly> t;

  // max_i deg t_i; neg_inf on the zero tuple.  (deg s < degree always holds
  // for tuples of a based map, since deg Q > deg P_i.)
  int degree() const;
  bool is_zero() const;
  // Coefficients of z^degree() in the t components.
  std::vector<GaussScalar> leading_t_vector() const;

  friend bool operator==(const SyzygyTuple& a, const SyzygyTuple& b) {
    return a.s == b.s && a.t == b.t;
  }
};

bool is_syzygy(const RationalMapData& f, const SyzygyTuple& tuple);

// (m_1, ..., m_n) with m_i = sum_{j >= i} k_j; weakly decreasing.
std::vector<int> flag_degree_vector(const ChargeVector& k);

// n syzygies whose t-degree profile equals the holomorphic charge; reduced
// (leading t-vectors independent) and deterministic: kernel sweeps use RREF
// with ascending pivot order at every degree level.
std::vector<SyzygyTuple> minimal_syzygy_basis(const RationalMapData& f);

// Expresses `tuple` as a polynomial-coefficient combination of the basis by
// degree-bounded division; false when the reduction gets stuck (it never
// does for a genuine minimal basis).
bool reduces_to_zero(const std::vector<SyzygyTuple>& basis, const SyzygyTuple& tuple);

// True iff the degree-ordered minimal basis can be column-reduced so that the
// leading t-vector of the i-th element follows the anti-standard flag:
// elements of degree <= d span exactly the last mu(d) coordinate directions.
bool based_check(const RationalMapData& f);

// Nested spans of the minimal basis ordered by increasing degree; the i-th
// partial flag piece has total degree -(sum of the i smallest charge
// entries).
struct FlagData {
  std::vector<SyzygyTuple> elements;  // ascending t-degree
  std::vector<int> degree_profile;    // d_1 <= ... <= d_n
  std::vector<int> piece_degrees;     // deg of piece i = piece_degrees[i-1] (negative)
};

FlagData flag_lift(const RationalMapData& f, const ChargeVector& k);

// Recovers the rational map as the rank-one annihilator of the flag's full
// span (signed maximal minors of the n x (n+1) tuple matrix).
RationalMapData annihilator(const FlagData& flag);

}  // namespace nahmrat

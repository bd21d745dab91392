#include <doctest.h>

#include "nahmrat/generate.hpp"
#include "nahmrat/json_io.hpp"

using namespace nahmrat;

namespace {

std::vector<GaussScalar> random_q(Rng& rng, int m) {
  std::vector<GaussScalar> q;
  for (int i = 0; i < m; ++i) q.push_back(rng.small_gauss());
  return q;
}

}  // namespace

TEST_CASE("laurent polynomial arithmetic") {
  LaurentPoly a = LaurentPoly::term(-2, GaussScalar(1));          // z^{-1}
  LaurentPoly b = LaurentPoly::term(1, GaussScalar(3));           // 3 z^{1/2}
  LaurentPoly prod = a * b;
  CHECK(prod == LaurentPoly::term(-1, GaussScalar(3)));           // 3 z^{-1/2}
  CHECK((a + (-a)).is_zero());
  CHECK((a * LaurentPoly()).is_zero());
  CHECK(prod.str() == "(3)z^{-1/2}");
}

TEST_CASE("block layout offsets") {
  BlockLayout lay(ChargeVector({3, 2, 1}));
  // basis blocks come charge 3, charge 2, charge 1 (widths 1, 2, 3)
  CHECK(lay.charge_offset(3) == 0);
  CHECK(lay.charge_offset(2) == 1);
  CHECK(lay.charge_offset(1) == 3);
  CHECK(lay.block_offset(1) == 0);
  CHECK(lay.block_size(1) == 1);
  CHECK(lay.block_size(3) == 3);
  CHECK(lay.charge_of_block(1) == 3);
}

TEST_CASE("c pattern sparsity") {
  ChargeVector k({3, 1});
  Mat c(4, 2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) c(i, j) = GaussScalar(1);
  Mat pat = apply_c_pattern(c, k);
  // column 2 (charge 2, k_2 = 1) keeps only the first entry of the charge-1
  // segment (rows 1..3 0-based); rows 2 and 3 vanish
  CHECK(pat(0, 1) == GaussScalar(1));
  CHECK(pat(1, 1) == GaussScalar(1));
  CHECK(pat(2, 1).is_zero());
  CHECK(pat(3, 1).is_zero());
  // column 1 is unconstrained
  for (int i = 0; i < 4; ++i) CHECK(pat(i, 0) == GaussScalar(1));
}

TEST_CASE("hurtubise block B layout") {
  // k = (1,1): every block is 1 x 1 and B's columns are the C columns with
  // charge 2 first.
  ChargeVector k11({1, 1});
  Mat c(2, 2);
  c(0, 0) = GaussScalar(1);
  c(1, 0) = GaussScalar(2);
  c(0, 1) = GaussScalar(3);
  c(1, 1) = GaussScalar(4);
  Mat b = hurtubise_block_B(c, k11);
  CHECK(b(0, 0) == GaussScalar(3));  // column of charge 2
  CHECK(b(1, 0) == GaussScalar(4));
  CHECK(b(0, 1) == GaussScalar(1));  // column of charge 1
  CHECK(b(1, 1) == GaussScalar(2));

  // n = 1: plain companion carrying the C column.
  ChargeVector k3({3});
  Mat c3(3, 1);
  c3(0, 0) = GaussScalar(5);
  c3(1, 0) = GaussScalar(6);
  c3(2, 0) = GaussScalar(7);
  Mat b3 = hurtubise_block_B(c3, k3);
  CHECK(b3(1, 0) == GaussScalar(1));
  CHECK(b3(2, 1) == GaussScalar(1));
  CHECK(b3(0, 2) == GaussScalar(5));
  CHECK(b3(2, 2) == GaussScalar(7));
  CHECK(b3(0, 0).is_zero());

  // k = (2,1): 3 x 3 with stated zero pattern.
  Rng rng(3);
  ChargeVector k21({2, 1});
  Mat b21 = hurtubise_block_B(random_c_pattern(rng, k21), k21);
  CHECK(block_pattern_validate(b21, k21, "gb-source"));
}

TEST_CASE("gq conjugation identity") {
  CHECK(gq_conjugation_identity({GaussScalar(-4)}));          // m = 1: both sides -q_1
  CHECK(gq_conjugation_identity({GaussScalar(0), GaussScalar(0)}));
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    int m = static_cast<int>(rng.integer(1, 6));
    CHECK(gq_conjugation_identity(random_q(rng, m)));
  }
}

TEST_CASE("build beta st") {
  // k = (1,...,1): every lambda_N block is 1 x 1 with plain C entries.
  ChargeVector k({1, 1});
  NormalFormData nf{k, {GaussScalar(2), GaussScalar(3)}, Mat(2, 2)};
  nf.C(0, 0) = GaussScalar(5);
  nf.C(1, 1) = GaussScalar(7);
  BetaStForm b = build_beta_st(nf);
  CHECK(b.beta_lambdaN.residue.is_zero());
  // C(0, col 1) sits in block (charge 2, charge 1): global (0, 1), exponent 0;
  // C(1, col 2) sits in block (charge 1, charge 2): global (1, 0), exponent 0.
  CHECK(b.beta_lambdaN.regular(0, 1) == LaurentPoly::term(0, GaussScalar(5)));
  CHECK(b.beta_lambdaN.regular(1, 0) == LaurentPoly::term(0, GaussScalar(7)));
  CHECK(b.beta_lambdaN.regular(0, 0).is_zero());
  CHECK(b.beta_lambdaN.regular(1, 1).is_zero());

  // lambda_1 display: subdiagonal z^{-1} and last column -z^{m-r} q_r.
  CHECK(b.beta_lambda1(1, 0) == LaurentPoly::term(-2, GaussScalar(1)));
  CHECK(b.beta_lambda1(0, 1) == LaurentPoly::term(2, GaussScalar(-2)));
  CHECK(b.beta_lambda1(1, 1) == LaurentPoly::term(0, GaussScalar(-3)));

  // q = 0, C = 0: pure residue data.
  ChargeVector k21({2, 1});
  NormalFormData zero{k21, {GaussScalar(0), GaussScalar(0), GaussScalar(0)}, Mat(3, 2)};
  BetaStForm bz = build_beta_st(zero);
  CHECK(bz.alpha_res_lambdaN == boundary_residues(k21).xN);
  CHECK(bz.beta_lambdaN.residue == boundary_residues(k21).yN);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(bz.beta_lambdaN.regular(i, j).is_zero());

  // violating the sparsity pattern is rejected
  NormalFormData bad{k21, {GaussScalar(0), GaussScalar(0), GaussScalar(0)}, Mat(3, 2)};
  bad.C(2, 1) = GaussScalar(1);  // forbidden: row 2 of the charge-1 segment in column 2
  CHECK(!bad.c_pattern_ok());
  CHECK_THROWS_AS(build_beta_st(bad), std::invalid_argument);
}

TEST_CASE("beta st exponents respect the half-power bound") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    ChargeVector k = random_charge(rng, 7, 3);
    BlockLayout lay(k);
    NormalFormData nf{k, random_q(rng, k.m()), random_c_pattern(rng, k)};
    BetaStForm b = build_beta_st(nf);
    for (int a = 1; a <= k.n(); ++a)
      for (int bb = 1; bb <= k.n(); ++bb)
        for (int r = 0; r < lay.charge_size(a); ++r)
          for (int c = 0; c < lay.charge_size(bb); ++c) {
            const LaurentPoly& e =
                b.beta_lambdaN.regular(lay.charge_offset(a) + r, lay.charge_offset(bb) + c);
            if (!e.is_zero())
              CHECK(e.min_twice_exp() >= std::abs(lay.charge_size(a) - lay.charge_size(bb)));
          }
  }
}

TEST_CASE("gB transform single step") {
  // k = (2,1): the inner block has width 1, so the step is the identity.
  {
    Rng rng(29);
    ChargeVector k({2, 1});
    Mat b = hurtubise_block_B(random_c_pattern(rng, k), k);
    auto [g, bp] = gB_transform(b, k, 2, 1);
    CHECK(g == Mat::identity(3));
    CHECK(bp == b);
    CHECK(block_pattern_validate(bp, k, "gb-target"));
  }
  // k = (2,2): width-2 inner block, the recursion produces a real g_B.
  {
    Rng rng(37);
    ChargeVector k({2, 2});
    Mat b = hurtubise_block_B(random_c_pattern(rng, k), k);
    auto [g, bp] = gB_transform(b, k, 2, 1);
    CHECK(g * b * inverse(g) == bp);
    CHECK(block_pattern_validate(bp, k, "gb-target"));
    CHECK(gB_inverse_transform(bp, k, 2, 1) == b);
    // the transformed (2,1) block has only its first row nonzero
    BlockLayout lay(k);
    for (int r = 1; r < lay.block_size(2); ++r)
      for (int c = 0; c < lay.block_size(1); ++c)
        CHECK(bp(lay.block_offset(2) + r, lay.block_offset(1) + c).is_zero());
  }
  // relevant C entries all zero -> g = identity, B unchanged
  {
    ChargeVector k({2, 2});
    Mat b = hurtubise_block_B(Mat(4, 2), k);
    auto [g0, bp0] = gB_transform(b, k, 2, 1);
    CHECK(g0 == Mat::identity(4));
    CHECK(bp0 == b);
  }
}

TEST_CASE("block pattern validate") {
  ChargeVector k({1, 1});
  CHECK(block_pattern_validate(Mat::identity(2), k, "gb-source"));
  ChargeVector k21({2, 1});
  Rng rng(41);
  Mat good = hurtubise_block_B(random_c_pattern(rng, k21), k21);
  CHECK(block_pattern_validate(good, k21, "gb-source"));
  Mat badm = good;
  badm(2, 0) = GaussScalar(9);  // below the truncated last-column segment
  CHECK(!block_pattern_validate(badm, k21, "gb-source"));
  CHECK_THROWS_AS(block_pattern_validate(good, k21, "no-such-pattern"), std::invalid_argument);
}

TEST_CASE("to hurtubise form round trip on random patterned B") {
  Rng rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    ChargeVector k = random_charge(rng, 8, 3);
    Mat b = hurtubise_block_B(random_c_pattern(rng, k), k);
    auto [g, bh] = to_hurtubise_form(b, k);
    CHECK(block_pattern_validate(bh, k, "gb-target"));
    CHECK(g * b * inverse(g) == bh);
    CHECK(from_hurtubise_form(bh, k) == b);
  }
  // C = 0 -> g = I, B_H = B
  ChargeVector k({3, 2, 1});
  Mat b0 = hurtubise_block_B(Mat(6, 3), k);
  auto [g0, bh0] = to_hurtubise_form(b0, k);
  CHECK(g0 == Mat::identity(6));
  CHECK(bh0 == b0);
}

#include <doctest.h>

#include "nahmrat/mat.hpp"
#include "nahmrat/rng.hpp"

using namespace nahmrat;

namespace {

Poly zpow(int k) { return Poly::monomial(k); }

PolyMat zI_minus(const Mat& m) {
  PolyMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      Poly e = Poly::constant(-m(i, j));
      if (i == j) e = e + zpow(1);
      r(i, j) = e;
    }
  return r;
}

Mat random_square(Rng& rng, int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.small_gauss(2);
  return m;
}

}  // namespace

TEST_CASE("gauss scalar arithmetic and text form") {
  GaussScalar a(mpq_class(1, 2), mpq_class(3, 4));
  GaussScalar b(mpq_class(-2), mpq_class(1));
  CHECK((a + b).str() == "-3/2+7/4i");
  CHECK((a * b).str() == "-7/4-1i");
  CHECK((a / a).is_one());
  CHECK(a.conj().str() == "1/2-3/4i");
  CHECK(GaussScalar::parse("-3/2+7/4i") == a + b);
  CHECK(GaussScalar::parse("5") == GaussScalar(5));
  CHECK(GaussScalar::parse("-i") == -GaussScalar::i());
  CHECK(GaussScalar::parse("3/4i") == GaussScalar(mpq_class(0), mpq_class(3, 4)));
  CHECK(GaussScalar::parse("(1/2+3/4i)") == a);
  CHECK_THROWS_AS(GaussScalar::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(GaussScalar(1) / GaussScalar(0), std::domain_error);
}

TEST_CASE("poly division and gcd") {
  // (z^2, z) -> z
  CHECK(poly_gcd_many({zpow(2), zpow(1)}) == zpow(1));
  // (z^2 - 1, z - 1) -> z - 1 (Euclid)
  Poly z2m1 = zpow(2) - Poly::constant(GaussScalar(1));
  Poly zm1 = zpow(1) - Poly::constant(GaussScalar(1));
  CHECK(poly_gcd_many({z2m1, zm1}) == zm1);
  // (1, z^5) -> 1
  CHECK(poly_gcd_many({Poly::constant(GaussScalar(1)), zpow(5)}).degree() == 0);
  CHECK_THROWS_AS(poly_gcd_many({Poly(), Poly()}), std::domain_error);

  auto dm = (z2m1 * zm1 + Poly::constant(GaussScalar(7))).divmod(zm1);
  CHECK(dm.quot == z2m1);
  CHECK(dm.rem == Poly::constant(GaussScalar(7)));

  CHECK(Poly().degree() == Poly::neg_inf_degree);
  CHECK(Poly::neg_inf_degree < -1);
}

TEST_CASE("charpoly on the worked examples") {
  Mat z1(1, 1);
  CHECK(charpoly(z1) == zpow(1));

  Mat nil(2, 2);
  nil(0, 1) = GaussScalar(1);
  CHECK(charpoly(nil) == zpow(2));

  Mat diag(2, 2);
  diag(0, 0) = GaussScalar(1);
  diag(1, 1) = GaussScalar(2);
  // diagonal product oracle: (z - 1)(z - 2)
  Poly expected = (zpow(1) - Poly::constant(GaussScalar(1))) *
                  (zpow(1) - Poly::constant(GaussScalar(2)));
  CHECK(charpoly(diag) == expected);
  CHECK(expected == Poly({GaussScalar(2), GaussScalar(-3), GaussScalar(1)}));

  Mat rect(2, 3);
  CHECK_THROWS_AS(charpoly(rect), std::invalid_argument);
}

TEST_CASE("resolvent numerator on the worked examples") {
  Mat z1(1, 1);
  PolyMat adj1 = resolvent_numerator(z1);
  CHECK(adj1(0, 0) == Poly::constant(GaussScalar(1)));

  Mat nil(2, 2);
  nil(0, 1) = GaussScalar(1);
  PolyMat adj2 = resolvent_numerator(nil);
  CHECK(adj2(0, 0) == zpow(1));
  CHECK(adj2(0, 1) == Poly::constant(GaussScalar(1)));
  CHECK(adj2(1, 0) == Poly());
  CHECK(adj2(1, 1) == zpow(1));

  Mat diag(2, 2);
  diag(0, 0) = GaussScalar(1);
  diag(1, 1) = GaussScalar(2);
  PolyMat adj3 = resolvent_numerator(diag);
  CHECK(adj3(0, 0) == zpow(1) - Poly::constant(GaussScalar(2)));
  CHECK(adj3(1, 1) == zpow(1) - Poly::constant(GaussScalar(1)));
  CHECK(adj3(0, 1) == Poly());
}

TEST_CASE("nullspace and determinant examples") {
  CHECK(nullspace(Mat::identity(2)).empty());

  Mat row(1, 2);
  row(0, 0) = GaussScalar(1);
  row(0, 1) = GaussScalar(1);
  auto basis = nullspace(row);
  REQUIRE(basis.size() == 1);
  CHECK((row * basis[0]).is_zero());
  CHECK(basis[0](0, 0) == -basis[0](1, 0));

  CHECK(nullspace(Mat(2, 2)).size() == 2);

  CHECK(det(Mat::identity(3)) == GaussScalar(1));
  Mat perm(2, 2);
  perm(0, 1) = GaussScalar(1);
  perm(1, 0) = GaussScalar(1);
  CHECK(det(perm) == GaussScalar(-1));
  Mat two(2, 2);
  two(0, 0) = GaussScalar(2);
  two(0, 1) = GaussScalar(1);
  two(1, 0) = GaussScalar(1);
  two(1, 1) = GaussScalar(1);
  CHECK(det(two) == GaussScalar(1));
  CHECK_THROWS_AS(det(Mat(2, 3)), std::invalid_argument);
}

TEST_CASE("adjugate identity and Cayley-Hamilton on random matrices") {
  Rng rng(20240517);
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(rng.integer(1, 6));
    Mat m = random_square(rng, n);
    CharpolyAdjugate ca = charpoly_adjugate(m);

    PolyMat adj(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<GaussScalar> cs;
        for (int k = 0; k < n; ++k) cs.push_back(ca.adj_coeff[static_cast<size_t>(k)](i, j));
        adj(i, j) = Poly(std::move(cs));
      }
    PolyMat prod = adj * zI_minus(m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(prod(i, j) == (i == j ? ca.charpoly : Poly()));

    CHECK(eval_poly_at(ca.charpoly, m).is_zero());

    bool singular = det(m).is_zero();
    CHECK(singular == !nullspace(m).empty());
    if (!singular) {
      CHECK(inverse(m) * m == Mat::identity(n));
      // det from the charpoly constant term agrees with Bareiss
      GaussScalar c0 = ca.charpoly.coeff(0);
      CHECK(det(m) == (n % 2 == 0 ? c0 : -c0));
    }
  }
}

TEST_CASE("gcd divides every input") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Poly> ps;
    int count = static_cast<int>(rng.integer(1, 4));
    for (int i = 0; i < count; ++i) {
      std::vector<GaussScalar> cs;
      int deg = static_cast<int>(rng.integer(0, 5));
      for (int k = 0; k <= deg; ++k) cs.push_back(rng.small_gauss(2));
      ps.emplace_back(std::move(cs));
    }
    bool all_zero = true;
    for (const auto& p : ps) all_zero = all_zero && p.is_zero();
    if (all_zero) continue;
    Poly g = poly_gcd_many(ps);
    CHECK(g.is_monic());
    for (const auto& p : ps) CHECK(p.divmod(g).rem.is_zero());
  }
}

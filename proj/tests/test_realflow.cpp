#include <doctest.h>

#include "nahmrat/realflow.hpp"
#include "nahmrat/rng.hpp"

using namespace nahmrat;
using namespace nahmrat::realflow;
using cd = std::complex<double>;

namespace {

CMat random_cmat(Rng& rng, int m) {
  CMat a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a(i, j) = cd(2 * rng.real01() - 1, 2 * rng.real01() - 1);
  return a;
}

CMat random_pd(Rng& rng, int m) {
  CMat a = random_cmat(rng, m);
  return a * a.adjoint() + 0.4 * CMat::Identity(m, m);
}

CMat random_skew(Rng& rng, int m) {
  CMat a = random_cmat(rng, m);
  return 0.5 * (a - a.adjoint());
}

std::vector<CMat> const_path(const CMat& v, int nodes) {
  return std::vector<CMat>(static_cast<size_t>(nodes), v);
}

}  // namespace

TEST_CASE("nahm to complex pair and back") {
  const int nodes = 17, m = 2;
  std::vector<CMat> zero = const_path(CMat::Zero(m, m), nodes);
  ComplexPairPath p = nahm_to_complex_pair(zero, zero, zero, zero, 1.0);
  for (const auto& a : p.alpha) CHECK(a.norm() == 0);
  for (const auto& b : p.beta) CHECK(b.norm() == 0);

  // T1 = diag(i, -i), rest 0: alpha = i T1 / 2, beta = 0.
  CMat t1(m, m);
  t1 << cd(0, 1), 0, 0, cd(0, -1);
  ComplexPairPath q = nahm_to_complex_pair(zero, const_path(t1, nodes), zero, zero, 1.0);
  CHECK((q.alpha[0] - 0.5 * cd(0, 1) * t1).norm() < 1e-15);
  CHECK(q.beta[0].norm() == 0);

  Rng rng(5);
  std::vector<CMat> t0p, t1p, t2p, t3p;
  for (int i = 0; i < nodes; ++i) {
    t0p.push_back(random_skew(rng, m));
    t1p.push_back(random_skew(rng, m));
    t2p.push_back(random_skew(rng, m));
    t3p.push_back(random_skew(rng, m));
  }
  ComplexPairPath r = nahm_to_complex_pair(t0p, t1p, t2p, t3p, 1.0);
  std::vector<CMat> u0, u1, u2, u3;
  complex_pair_to_nahm(r, u0, u1, u2, u3);
  for (int i = 0; i < nodes; ++i) {
    CHECK((u0[static_cast<size_t>(i)] - t0p[static_cast<size_t>(i)]).norm() < 1e-14);
    CHECK((u1[static_cast<size_t>(i)] - t1p[static_cast<size_t>(i)]).norm() < 1e-14);
    CHECK((u2[static_cast<size_t>(i)] - t2p[static_cast<size_t>(i)]).norm() < 1e-14);
    CHECK((u3[static_cast<size_t>(i)] - t3p[static_cast<size_t>(i)]).norm() < 1e-14);
  }

  std::vector<CMat> bad = const_path(CMat::Identity(m, m), nodes);  // not skew
  CHECK_THROWS_AS(nahm_to_complex_pair(bad, zero, zero, zero, 1.0), std::invalid_argument);
}

TEST_CASE("residual F on constant paths") {
  const int nodes = 33, m = 2;
  ComplexPairPath p;
  p.length = 1.0;
  p.alpha = const_path(CMat::Zero(m, m), nodes);
  p.beta = const_path(CMat::Zero(m, m), nodes);
  CHECK(sup_frobenius(residual_F(p)) == 0);

  // constant normal beta: [beta, beta*] = 0.
  CMat normal(m, m);
  normal << cd(1, 2), 0, 0, cd(-3, 1);
  p.beta = const_path(normal, nodes);
  CHECK(sup_frobenius(residual_F(p)) == 0);
  CHECK(sup_frobenius(complex_residual(p)) == 0);

  // constant non-normal alpha: residual = 2[alpha, alpha*] != 0.
  CMat nn(m, m);
  nn << 0, 1, 0, 0;
  p.alpha = const_path(nn, nodes);
  p.beta = const_path(CMat::Zero(m, m), nodes);
  CMat expect = 2.0 * (nn * nn.adjoint() - nn.adjoint() * nn);
  auto r = residual_F(p);
  for (const auto& ri : r) CHECK((ri - expect).norm() < 1e-12);
  CHECK(expect.norm() > 1);
}

TEST_CASE("donaldson energy") {
  const int nodes = 65, m = 2;
  std::vector<CMat> id = const_path(CMat::Identity(m, m), nodes);
  CHECK(donaldson_energy(id, CMat::Zero(m, m), 1.0) == doctest::Approx(0.0));

  CMat normal(m, m);
  normal << cd(1, 1), 0, 0, cd(0, -2);
  double b2 = normal.squaredNorm();
  const double L = 2.5;
  CHECK(donaldson_energy(id, normal, L) == doctest::Approx(2 * b2 * L).epsilon(1e-12));

  // constant unitary u: same energy as the identity path.
  CMat sk = random_skew(*(new Rng(3)), m);
  CMat u = (CMat::Identity(m, m) + sk) * (CMat::Identity(m, m) - sk).inverse();
  CHECK(donaldson_energy(const_path(u, nodes), normal, L) ==
        doctest::Approx(donaldson_energy(id, normal, L)).epsilon(1e-12));

  std::vector<CMat> singular = id;
  singular[3] = CMat::Zero(m, m);
  CHECK_THROWS_AS(donaldson_energy(singular, normal, 1.0), std::domain_error);
}

TEST_CASE("energy is invariant under node-wise unitary left action") {
  Rng rng(11);
  const int nodes = 33, m = 2;
  std::vector<CMat> g;
  for (int i = 0; i < nodes; ++i) g.push_back(random_pd(rng, m) + random_skew(rng, m));
  CMat beta0 = random_cmat(rng, m);
  double e1 = donaldson_energy(g, beta0, 1.0);
  for (auto& gi : g) {
    CMat sk = random_skew(rng, m);
    CMat u = (CMat::Identity(m, m) + sk) * (CMat::Identity(m, m) - sk).inverse();
    gi = u * gi;
  }
  double e2 = donaldson_energy(g, beta0, 1.0);
  CHECK(std::abs(e1 - e2) <= 1e-10 * std::max(1.0, std::abs(e1)));
}

TEST_CASE("analytic energy gradient matches finite differences") {
  Rng rng(13);
  const int grid = 16, m = 2;
  HPath hp;
  hp.length = 1.3;
  for (int i = 0; i <= grid; ++i) hp.h.push_back(random_pd(rng, m) + CMat::Identity(m, m));
  CMat beta0 = random_cmat(rng, m);
  std::vector<CMat> grad = energy_gradient(hp, beta0);
  const double eps = 1e-6;
  double num = 0, den = 0;
  for (int node = 1; node < grid; ++node)
    for (int p = 0; p < m; ++p)
      for (int q = p; q < m; ++q)
        for (int part = 0; part < (p == q ? 1 : 2); ++part) {
          CMat dir = CMat::Zero(m, m);
          if (p == q)
            dir(p, p) = 1;
          else if (part == 0)
            dir(p, q) = dir(q, p) = 1;
          else {
            dir(p, q) = cd(0, 1);
            dir(q, p) = cd(0, -1);
          }
          HPath plus = hp, minus = hp;
          plus.h[static_cast<size_t>(node)] += eps * dir;
          minus.h[static_cast<size_t>(node)] -= eps * dir;
          double fd = (energy_of_h(plus, beta0) - energy_of_h(minus, beta0)) / (2 * eps);
          double an = (grad[static_cast<size_t>(node) - 1] * dir).trace().real();
          num += (an - fd) * (an - fd);
          den += fd * fd;
        }
  CHECK(std::sqrt(num / den) < 1e-6);
}

TEST_CASE("phi") {
  CHECK(phi(CMat::Identity(3, 3)) == doctest::Approx(0.0));
  CMat d(2, 2);
  d << std::exp(2.0), 0, 0, 1;
  CHECK(phi(d) == doctest::Approx(2.0));
  CHECK(phi(2.0 * CMat::Identity(2, 2)) == doctest::Approx(std::log(2.0)));
  CMat neg(1, 1);
  neg(0, 0) = -1;
  CHECK_THROWS_AS(phi(neg), std::domain_error);
}

TEST_CASE("solve_real_bvp: identity boundary with normal beta0") {
  CMat beta0(2, 2);
  beta0 << 1, cd(0, 1), cd(0, -1), 0;  // hermitian, hence normal
  SolveResult r = solve_real_bvp(beta0, CMat::Identity(2, 2), CMat::Identity(2, 2), 32, 1e-10);
  CHECK(r.converged);
  CHECK(r.residual <= 1e-10);
  for (const auto& h : r.path.h) CHECK((h - CMat::Identity(2, 2)).norm() < 1e-9);
}

TEST_CASE("solve_real_bvp: m = 1 matches the closed form") {
  CMat beta0(1, 1), hm(1, 1), hp(1, 1);
  beta0(0, 0) = cd(0.4, -0.2);
  hm(0, 0) = 0.7;
  hp(0, 0) = 2.3;
  SolveResult r = solve_real_bvp(beta0, hm, hp, 128, 1e-8);
  CHECK(r.converged);
  HPath exact = scalar_closed_form(0.7, 2.3, 128, 1.0);
  double dist = 0;
  for (size_t i = 0; i < exact.h.size(); ++i)
    dist = std::max(dist, std::abs(r.path.h[i](0, 0).real() - exact.h[i](0, 0).real()));
  CHECK(dist <= 1e-8);
}

TEST_CASE("solve_real_bvp: m = 2 random boundary") {
  Rng rng(17);
  CMat beta0 = random_cmat(rng, 2);
  CMat hm = random_pd(rng, 2), hp = random_pd(rng, 2);
  SolveResult r = solve_real_bvp(beta0, hm, hp, 48, 1e-8);
  CHECK(r.converged);
  CHECK(r.residual <= 1e-8);
  CHECK((r.path.h.front() - hm).norm() == 0);  // endpoints pinned exactly
  CHECK((r.path.h.back() - hp).norm() == 0);
  // residual history never increases across accepted steps
  for (size_t i = 0; i + 1 < r.residual_history.size(); ++i)
    CHECK(r.residual_history[i + 1] <= r.residual_history[i] + 1e-15);
  // the solved path satisfies the convexity inequality
  std::vector<CMat> g;
  for (const auto& h : r.path.h) g.push_back(sqrt_pd(h));
  CHECK(convexity_check(g, beta0, 1.0, 1e-9).pass());

  CHECK_THROWS_AS(solve_real_bvp(beta0, hm, hp, 8, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(solve_real_bvp(beta0, -hm, hp, 48, 1e-8), std::invalid_argument);
}

TEST_CASE("convexity check on benign paths") {
  CMat beta0(2, 2);
  beta0 << 1, 0, 0, cd(0, 2);  // normal
  std::vector<CMat> id = const_path(CMat::Identity(2, 2), 33);
  ConvexityReport rep = convexity_check(id, beta0, 1.0, 1e-9);
  CHECK(rep.pass());
  CHECK(rep.checked_nodes > 0);

  Rng rng(19);
  CMat a0 = random_cmat(rng, 2), a1 = random_cmat(rng, 2);
  std::vector<CMat> g;
  for (int i = 0; i <= 64; ++i) {
    double t = i / 64.0;
    g.push_back(CMat::Identity(2, 2) + 0.4 * std::sin(M_PI * t) * a0 + 0.3 * t * (1 - t) * a1);
  }
  CHECK(convexity_check(g, random_cmat(rng, 2), 1.0, 1e-9).pass());
}

TEST_CASE("uniqueness check") {
  CMat beta0(2, 2);
  beta0 << cd(0, 1), 0, 0, cd(0, -1);  // normal
  double d = uniqueness_check(beta0, CMat::Identity(2, 2), CMat::Identity(2, 2), 32, 1e-9, 1, 2);
  CHECK(d <= 1e-8);

  Rng rng(23);
  CMat b = random_cmat(rng, 2);
  CMat hm = random_pd(rng, 2), hp = random_pd(rng, 2);
  double d2 = uniqueness_check(b, hm, hp, 48, 1e-7, 3, 4);
  CHECK(d2 <= 10 * 1e-7);
}

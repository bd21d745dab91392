#include "nahmrat/verify.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include "nahmrat/flags.hpp"
#include "nahmrat/generate.hpp"
#include "nahmrat/json_io.hpp"
#include "nahmrat/realflow.hpp"
#include "nahmrat/su2.hpp"

namespace nahmrat {

namespace {

using nlohmann::json;

// Runs fn(i) for i in [0, total); failures are json blobs collected in index
// order.  Per-index work must derive randomness from the index alone.
std::vector<json> parallel_failures(int total, int jobs,
                                    const std::function<json(int)>& fn) {
  jobs = std::max(1, jobs);
  std::vector<json> results(static_cast<size_t>(total));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= total) return;
      results[static_cast<size_t>(i)] = fn(i);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<json> failures;
  for (auto& r : results)
    if (!r.is_null()) failures.push_back(std::move(r));
  return failures;
}

SuiteReport make_report(const std::string& suite, std::uint64_t seed, int budget,
                        std::vector<json> failures, json extra = json::object()) {
  SuiteReport rep;
  rep.suite = suite;
  rep.seed = seed;
  rep.budget = budget;
  rep.pass = failures.empty();
  rep.details = std::move(extra);
  rep.details["failures"] = std::move(failures);
  return rep;
}

json suite_roundtrip_one(std::uint64_t seed, int index) {
  Rng rng = Rng(seed).fork(static_cast<std::uint64_t>(index));
  ChargeVector k = random_charge(rng, 6, 3);
  MatrixPair p = random_valid_pair(rng, k, true);
  RationalMapData f = to_rational_map(p);
  json fail;
  if (canonicalize(from_rational_map(f)).pair != canonicalize(p).pair)
    fail["roundtrip_a"] = "canonical forms differ";
  if (to_rational_map(from_rational_map(f)) != f) fail["roundtrip_b"] = "map not recovered";
  if (holomorphic_charge(f) != k) fail["charge"] = holomorphic_charge(f).str();
  if (!membership_Rk(f, k)) fail["membership"] = false;
  if (fail.empty()) return json();
  fail["index"] = index;
  fail["k"] = to_json(k);
  fail["pair"] = to_json(p);
  return fail;
}

json suite_duality_one(std::uint64_t seed, int index) {
  Rng rng = Rng(seed).fork(static_cast<std::uint64_t>(index));
  ChargeVector k = random_charge(rng, 5, 3);
  MatrixPair p = random_valid_pair(rng, k, true);
  RationalMapData f = to_rational_map(p);
  for (const auto& l : compositions_into(k.m(), k.n())) {
    bool mz = det(krylov_block_matrix(p, l)).is_zero();
    bool tz = det(syzygy_constraint_matrix(f, l)).is_zero();
    if (mz != tz) {
      json fail;
      fail["index"] = index;
      fail["k"] = to_json(k);
      fail["l"] = l;
      fail["det_M_zero"] = mz;
      fail["det_Mtilde_zero"] = tz;
      fail["pair"] = to_json(p);
      return fail;
    }
  }
  return json();
}

json suite_hurtubise_one(std::uint64_t seed, int index) {
  Rng rng = Rng(seed).fork(static_cast<std::uint64_t>(index));
  json fail;
  // g_q identity on a random q, m <= 8.
  int m = static_cast<int>(rng.integer(1, 8));
  std::vector<GaussScalar> q;
  for (int i = 0; i < m; ++i) q.push_back(rng.small_gauss());
  if (!gq_conjugation_identity(q)) fail["gq_identity"] = "failed";

  // g_B sweep round trip on a random patterned B, m <= 8.
  for (int attempt = 0;; ++attempt) {
    ChargeVector k = random_charge(rng, 8, 3);
    if (k.n() < 2 && attempt < 16) continue;
    Mat c = random_c_pattern(rng, k);
    Mat b = hurtubise_block_B(c, k);
    try {
      auto [g, bh] = to_hurtubise_form(b, k);
      if (!block_pattern_validate(bh, k, "gb-target")) fail["target_pattern"] = "failed";
      if (from_hurtubise_form(bh, k) != b) fail["gb_roundtrip"] = "failed";
    } catch (const std::exception& e) {
      fail["gb_exception"] = e.what();
      fail["k"] = to_json(k);
      fail["C"] = to_json(c);
    }
    break;
  }
  if (fail.empty()) return json();
  fail["index"] = index;
  return fail;
}

SuiteReport suite_casimir(std::uint64_t seed, int budget, int jobs) {
  std::vector<std::pair<int, int>> cases;
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) cases.emplace_back(a, b);
  auto failures = parallel_failures(static_cast<int>(cases.size()), jobs, [&](int i) -> json {
    auto [a, b] = cases[static_cast<size_t>(i)];
    CasimirReport rep = casimir_spectrum_check(a, b);
    if (rep.pass()) return json();
    return to_json(rep);
  });
  return make_report("casimir", seed, budget, std::move(failures),
                     {{"cases", cases.size()}});
}

SuiteReport suite_halfpower(std::uint64_t seed, int budget, int jobs) {
  std::vector<json> failures;
  for (int l = 1; l <= 12; ++l) {
    TridiagDet d = tridiag_det_two_ways(l);
    if (d.direct != d.factored || !d.positive)
      failures.push_back({{"tridiag_l", l},
                          {"direct", d.direct.str()},
                          {"factored", d.factored.str()}});
  }
  if (tridiag_c_sequence(2)[1] != mpq_class(61, 14))
    failures.push_back({{"c2", "expected 61/14"}});

  auto one = [&](int i) -> json {
    Rng rng = Rng(seed).fork(static_cast<std::uint64_t>(i));
    int k1 = 3 + static_cast<int>(rng.integer(0, 3));
    GaussScalar c1 = rng.small_gauss_nonzero(), c2 = rng.small_gauss_nonzero();
    HalfPowerSolution sol = halfpower_gauge_solve(k1, c1.conj(), c2.conj());
    HalfPowerCoefficients hc = halfpower_assembly(k1, c1, c2, sol.mu, sol.nu);
    BoundaryResidues br = boundary_residues(ChargeVector({k1, k1 - 1}));
    Mat f = F_minus_half_coefficient(hc.alpha_half, hc.beta_half, br.xN, br.yN);
    if (f.is_zero()) return json();
    return {{"index", i}, {"k1", k1}, {"C_k2_2", c1.str()}, {"C_m1_1", c2.str()},
            {"F_minus_half", to_json(f)}};
  };
  auto more = parallel_failures(budget, jobs, one);
  failures.insert(failures.end(), more.begin(), more.end());
  return make_report("halfpower", seed, budget, std::move(failures));
}

SuiteReport suite_dimension(std::uint64_t seed, int budget, int jobs) {
  struct Case {
    std::vector<int> k;
    int expected;
  };
  std::vector<Case> cases = {{{1, 1}, 6}, {{2, 1}, 8}, {{2, 2}, 12}, {{2}, 4}, {{3}, 6}};
  int points = std::max(1, std::min(budget, 5));
  std::vector<std::pair<int, int>> work;  // (case, point)
  for (size_t c = 0; c < cases.size(); ++c)
    for (int p = 0; p < points; ++p) work.emplace_back(static_cast<int>(c), p);
  auto failures = parallel_failures(static_cast<int>(work.size()), jobs, [&](int i) -> json {
    auto [ci, pi] = work[static_cast<size_t>(i)];
    ChargeVector k(cases[static_cast<size_t>(ci)].k);
    Rng rng = Rng(seed).fork(static_cast<std::uint64_t>(i) * 977 + 13);
    RationalMapData f = random_based_map(rng, k);
    int dim = tangent_dimension(f, k);
    if (dim == cases[static_cast<size_t>(ci)].expected) return json();
    return {{"k", to_json(k)}, {"point", pi}, {"dim", dim},
            {"expected", cases[static_cast<size_t>(ci)].expected}, {"map", to_json(f)}};
  });
  return make_report("dimension", seed, budget, std::move(failures),
                     {{"points_per_case", points}});
}

SuiteReport suite_realflow(std::uint64_t seed, int budget, int jobs) {
  using namespace realflow;
  (void)jobs;
  std::vector<json> failures;
  auto expect = [&](bool ok, const std::string& what, double value) {
    if (!ok) failures.push_back({{"check", what}, {"value", value}});
  };

  // Identity boundary with a normal beta0: h == I solves exactly.
  {
    CMat beta0(2, 2);
    beta0 << 1, std::complex<double>(0, 1), std::complex<double>(0, -1), 0;  // hermitian, hence normal
    SolveResult r = solve_real_bvp(beta0, CMat::Identity(2, 2), CMat::Identity(2, 2), 64, 1e-10);
    expect(r.converged && r.residual <= 1e-10, "identity_boundary_residual", r.residual);
  }
  // m = 1 closed form.
  {
    Rng rng(seed);
    double hm = 0.5 + rng.real01(), hpv = 0.5 + rng.real01();
    CMat beta0(1, 1), a(1, 1), b(1, 1);
    beta0(0, 0) = std::complex<double>(0.3, -0.7);
    a(0, 0) = hm;
    b(0, 0) = hpv;
    SolveResult r = solve_real_bvp(beta0, a, b, 200, 1e-8);
    HPath exact = scalar_closed_form(hm, hpv, 200, 1.0);
    double dist = 0;
    for (size_t i = 0; i < exact.h.size(); ++i)
      dist = std::max(dist, std::abs(r.path.h[i](0, 0).real() - exact.h[i](0, 0).real()));
    expect(r.converged && dist <= 1e-8, "m1_closed_form_distance", dist);
  }
  // m = 2 random boundary at tol 1e-6 plus uniqueness.
  {
    Rng rng(seed + 1);
    auto rand_pd = [&](int m) {
      CMat a(m, m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          a(i, j) = std::complex<double>(2 * rng.real01() - 1, 2 * rng.real01() - 1);
      return CMat(a * a.adjoint() + 0.4 * CMat::Identity(m, m));
    };
    CMat beta0(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        beta0(i, j) = std::complex<double>(2 * rng.real01() - 1, 2 * rng.real01() - 1);
    CMat hm = rand_pd(2), hp = rand_pd(2);
    SolveResult r = solve_real_bvp(beta0, hm, hp, 200, 1e-6);
    expect(r.converged, "m2_random_residual", r.residual);
    double d = uniqueness_check(beta0, hm, hp, 200, 1e-6, seed + 2, seed + 3);
    expect(d <= 1e-5, "uniqueness_distance", d);
  }
  // Analytic gradient vs central finite differences.
  {
    Rng rng(seed + 4);
    const int grid = 24, m = 2;
    CMat beta0(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        beta0(i, j) = std::complex<double>(2 * rng.real01() - 1, 2 * rng.real01() - 1);
    HPath hp;
    hp.length = 1.0;
    for (int i = 0; i <= grid; ++i) {
      CMat a(m, m);
      for (int r2 = 0; r2 < m; ++r2)
        for (int c = 0; c < m; ++c)
          a(r2, c) = std::complex<double>(2 * rng.real01() - 1, 2 * rng.real01() - 1);
      hp.h.push_back(CMat(a * a.adjoint() + 1.5 * CMat::Identity(m, m)));
    }
    std::vector<CMat> grad = energy_gradient(hp, beta0);
    double num = 0, den = 0;
    const double eps = 1e-6;
    for (int node = 1; node < grid; ++node)
      for (int p = 0; p < m; ++p)
        for (int q2 = p; q2 < m; ++q2)
          for (int part = 0; part < (p == q2 ? 1 : 2); ++part) {
            CMat dir = CMat::Zero(m, m);
            if (p == q2)
              dir(p, p) = 1;
            else if (part == 0)
              dir(p, q2) = dir(q2, p) = 1;
            else {
              dir(p, q2) = std::complex<double>(0, 1);
              dir(q2, p) = std::complex<double>(0, -1);
            }
            HPath plus = hp, minus = hp;
            plus.h[static_cast<size_t>(node)] += eps * dir;
            minus.h[static_cast<size_t>(node)] -= eps * dir;
            double fd = (energy_of_h(plus, beta0) - energy_of_h(minus, beta0)) / (2 * eps);
            double an = (grad[static_cast<size_t>(node) - 1].cwiseProduct(dir.transpose()))
                            .sum()
                            .real();
            num += (an - fd) * (an - fd);
            den += fd * fd;
          }
    double rel = std::sqrt(num / std::max(den, 1e-30));
    expect(rel <= 1e-6, "gradient_fd_relative", rel);
  }
  // Unitary invariance of the energy and convexity on random smooth paths.
  {
    Rng rng(seed + 5);
    const int grid = 64, m = 2;
    CMat beta0(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        beta0(i, j) = std::complex<double>(2 * rng.real01() - 1, 2 * rng.real01() - 1);
    int paths = std::max(1, std::min(budget, 20));
    for (int trial = 0; trial < paths; ++trial) {
      std::vector<CMat> g;
      CMat a0(m, m), a1(m, m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          a0(i, j) = std::complex<double>(2 * rng.real01() - 1, 2 * rng.real01() - 1);
          a1(i, j) = std::complex<double>(2 * rng.real01() - 1, 2 * rng.real01() - 1);
        }
      for (int i = 0; i <= grid; ++i) {
        double t = static_cast<double>(i) / grid;
        CMat gi = CMat::Identity(m, m) + 0.4 * std::sin(M_PI * t) * a0 +
                  0.3 * t * (1 - t) * a1;
        g.push_back(gi);
      }
      double e1 = donaldson_energy(g, beta0, 1.0);
      std::vector<CMat> ug = g;
      for (auto& gi : ug) {
        CMat s(m, m);
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            s(i, j) = std::complex<double>(rng.real01() - 0.5, rng.real01() - 0.5);
        CMat sk = s - s.adjoint();
        CMat u = (CMat::Identity(m, m) + 0.5 * sk) *
                 (CMat::Identity(m, m) - 0.5 * sk).inverse();  // Cayley unitary
        gi = u * gi;
      }
      double e2 = donaldson_energy(ug, beta0, 1.0);
      expect(std::abs(e1 - e2) <= 1e-10 * std::max(1.0, std::abs(e1)),
             "unitary_invariance", std::abs(e1 - e2));
      ConvexityReport cr = convexity_check(g, beta0, 1.0, 1e-9);
      expect(cr.pass(), "convexity_violations", static_cast<double>(cr.violations));
    }
  }
  return make_report("realflow", seed, budget, std::move(failures));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "roundtrip", "duality", "hurtubise", "casimir", "halfpower", "dimension", "realflow"};
  return names;
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed, int budget, int jobs) {
  if (budget <= 0) budget = 50;
  if (suite == "roundtrip")
    return make_report(suite, seed, budget,
                       parallel_failures(budget, jobs,
                                         [&](int i) { return suite_roundtrip_one(seed, i); }));
  if (suite == "duality")
    return make_report(
        suite, seed, budget,
        parallel_failures(budget, jobs, [&](int i) { return suite_duality_one(seed, i); }));
  if (suite == "hurtubise")
    return make_report(
        suite, seed, budget,
        parallel_failures(budget, jobs, [&](int i) { return suite_hurtubise_one(seed, i); }));
  if (suite == "casimir") return suite_casimir(seed, budget, jobs);
  if (suite == "halfpower") return suite_halfpower(seed, budget, jobs);
  if (suite == "dimension") return suite_dimension(seed, budget, jobs);
  if (suite == "realflow") return suite_realflow(seed, budget, jobs);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace nahmrat

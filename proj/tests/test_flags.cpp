#include <doctest.h>

#include "nahmrat/flags.hpp"
#include "nahmrat/generate.hpp"

using namespace nahmrat;

namespace {

Poly P(std::initializer_list<long> coeffs) {
  std::vector<GaussScalar> cs;
  for (long c : coeffs) cs.emplace_back(c);
  return Poly(std::move(cs));
}

RationalMapData inverse_power(int m) {
  RationalMapData f;
  f.Q = Poly::monomial(m);
  f.P = {P({1})};
  return f;
}

RationalMapData two_line_example() {
  RationalMapData f;
  f.Q = P({0, -1, 1});
  f.P = {P({-1, 1}), P({0, 1})};
  return f;
}

RationalMapData degenerate_example() {
  RationalMapData f;
  f.Q = P({0, 0, 1});
  f.P = {P({1}), Poly()};
  return f;
}

std::vector<int> degrees_of(const std::vector<SyzygyTuple>& basis) {
  std::vector<int> d;
  for (const auto& g : basis) d.push_back(g.degree());
  return d;
}

}  // namespace

TEST_CASE("flag degree vector") {
  CHECK(flag_degree_vector(ChargeVector({1, 1})) == std::vector<int>{2, 1});
  CHECK(flag_degree_vector(ChargeVector({2, 1})) == std::vector<int>{3, 1});
  CHECK(flag_degree_vector(ChargeVector({4})) == std::vector<int>{4});
}

TEST_CASE("minimal syzygy basis on the worked examples") {
  auto b1 = minimal_syzygy_basis(inverse_power(2));
  REQUIRE(b1.size() == 1);
  CHECK(b1[0].degree() == 2);
  CHECK(is_syzygy(inverse_power(2), b1[0]));

  auto b2 = minimal_syzygy_basis(two_line_example());
  REQUIRE(b2.size() == 2);
  CHECK(degrees_of(b2) == std::vector<int>{1, 1});
  for (const auto& g : b2) CHECK(is_syzygy(two_line_example(), g));

  auto b3 = minimal_syzygy_basis(degenerate_example());
  REQUIRE(b3.size() == 2);
  CHECK(degrees_of(b3) == std::vector<int>{0, 2});
  for (const auto& g : b3) CHECK(is_syzygy(degenerate_example(), g));
  // the degree-0 generator is the unit vector along the zero component
  CHECK(b3[0].s.is_zero());
  CHECK(b3[0].t[0].is_zero());
  CHECK(b3[0].t[1].degree() == 0);
}

TEST_CASE("basis degree profile matches the holomorphic charge and sums to m") {
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    ChargeVector k = random_charge(rng, 6, 3);
    RationalMapData f = random_based_map(rng, k);
    auto basis = minimal_syzygy_basis(f);
    std::vector<int> degs = degrees_of(basis);
    int sum = 0;
    for (int d : degs) sum += d;
    CHECK(sum == f.m());
    std::vector<int> sorted(degs.rbegin(), degs.rend());
    CHECK(ChargeVector(sorted) == holomorphic_charge(f));
    // every generator has coprime components (saturation)
    for (const auto& g : basis) {
      std::vector<Poly> comps{g.s};
      comps.insert(comps.end(), g.t.begin(), g.t.end());
      bool all_zero = true;
      for (const auto& c : comps) all_zero = all_zero && c.is_zero();
      REQUIRE(!all_zero);
      CHECK(poly_gcd_many(comps).degree() == 0);
    }
  }
}

TEST_CASE("arbitrary syzygies reduce to zero against the minimal basis") {
  Rng rng(57);
  for (int trial = 0; trial < 15; ++trial) {
    ChargeVector k = random_charge(rng, 5, 3);
    RationalMapData f = random_based_map(rng, k);
    auto basis = minimal_syzygy_basis(f);
    // random polynomial combination of the basis is again a syzygy
    SyzygyTuple combo;
    combo.s = Poly();
    combo.t.assign(static_cast<size_t>(f.n()), Poly());
    for (const auto& g : basis) {
      std::vector<GaussScalar> cs;
      for (int d = 0; d <= 2; ++d) cs.push_back(rng.small_gauss(2));
      Poly lambda(cs);
      combo.s = combo.s + lambda * g.s;
      for (int i = 0; i < f.n(); ++i)
        combo.t[static_cast<size_t>(i)] =
            combo.t[static_cast<size_t>(i)] + lambda * g.t[static_cast<size_t>(i)];
    }
    CHECK(is_syzygy(f, combo));
    CHECK(reduces_to_zero(basis, combo));
  }
  // a non-syzygy does not reduce
  auto basis = minimal_syzygy_basis(inverse_power(2));
  SyzygyTuple junk;
  junk.s = P({1});
  junk.t = {P({1})};
  CHECK(!reduces_to_zero(basis, junk));
}

TEST_CASE("based check") {
  CHECK(based_check(inverse_power(2)));
  CHECK(based_check(two_line_example()));
  CHECK(based_check(degenerate_example()));

  // [z^2, 0, 1]: the degree-0 syzygy line sits at e_2, not the anti-standard e_3.
  RationalMapData f;
  f.Q = P({0, 0, 1});
  f.P = {Poly(), P({1})};
  CHECK(!based_check(f));

  Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    ChargeVector k = random_charge(rng, 6, 3);
    CHECK(based_check(random_based_map(rng, k)));
  }
}

TEST_CASE("based check + charge agrees with the membership battery") {
  Rng rng(83);
  auto agree = [](const RationalMapData& f, const ChargeVector& k) {
    bool battery = membership_Rk(f, k);
    bool flagwise = based_check(f) && holomorphic_charge(f) == k;
    CHECK(battery == flagwise);
  };
  RationalMapData nb;
  nb.Q = P({0, 0, 1});
  nb.P = {Poly(), P({1})};
  agree(nb, ChargeVector({2, 0}));
  agree(nb, ChargeVector({1, 1}));
  agree(degenerate_example(), ChargeVector({2, 0}));
  for (int trial = 0; trial < 15; ++trial) {
    ChargeVector k = random_charge(rng, 5, 3);
    RationalMapData f = random_based_map(rng, k);
    for (const auto& other : partitions_into(k.m(), k.n())) agree(f, other);
  }
}

TEST_CASE("flag lift and the annihilator round trip") {
  FlagData flag = flag_lift(two_line_example(), ChargeVector({1, 1}));
  CHECK(flag.degree_profile == std::vector<int>{1, 1});
  CHECK(flag.piece_degrees == std::vector<int>{-1, -2});
  CHECK(annihilator(flag) == two_line_example());

  // n = 1: the single-step flag is the syzygy line itself
  FlagData single = flag_lift(inverse_power(3), ChargeVector({3}));
  CHECK(single.elements.size() == 1);
  CHECK(single.piece_degrees == std::vector<int>{-3});
  CHECK(annihilator(single) == inverse_power(3));

  CHECK_THROWS_AS(flag_lift(degenerate_example(), ChargeVector({1, 1})), std::domain_error);

  Rng rng(97);
  for (int trial = 0; trial < 50; ++trial) {
    ChargeVector k = random_charge(rng, 6, 3);
    RationalMapData f = random_based_map(rng, k);
    FlagData fl = flag_lift(f, k);
    CHECK(annihilator(fl) == f);
    // piece degree bookkeeping: deg E_i = -(sum of the i smallest charges)
    std::vector<int> mvec = flag_degree_vector(k);
    for (int i = 1; i <= k.n(); ++i)
      CHECK(fl.piece_degrees[static_cast<size_t>(i - 1)] == -mvec[static_cast<size_t>(k.n() - i)]);
  }
}

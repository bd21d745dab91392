#include <doctest.h>

#include "nahmrat/generate.hpp"
#include "nahmrat/json_io.hpp"

using namespace nahmrat;

TEST_CASE("scalar and polynomial serialization") {
  CHECK(to_json(GaussScalar(mpq_class(3, 4), mpq_class(-1, 2))) == "3/4-1/2i");
  CHECK(gauss_from_json("3/4-1/2i") == GaussScalar(mpq_class(3, 4), mpq_class(-1, 2)));
  CHECK(gauss_from_json(7) == GaussScalar(7));
  CHECK_THROWS_AS(gauss_from_json(json::array()), ParseError);

  Poly p({GaussScalar(2), GaussScalar(-3), GaussScalar(1)});
  CHECK(to_json(p) == json::array({"2", "-3", "1"}));
  CHECK(poly_from_json(to_json(p)) == p);
}

TEST_CASE("polynomial string grammar") {
  Poly p({GaussScalar(2), GaussScalar(-3), GaussScalar(1)});
  CHECK(parse_poly_string("z^2 - 3z + 2") == p);
  CHECK(parse_poly_string("z^2-3*z+2") == p);
  CHECK(parse_poly_string("-z + z^2 - 2z + 2") == p);
  CHECK(parse_poly_string("i") == Poly::constant(GaussScalar::i()));
  CHECK(parse_poly_string("(1/2+3/4i)z^3") ==
        Poly::monomial(3, GaussScalar(mpq_class(1, 2), mpq_class(3, 4))));
  CHECK(parse_poly_string("3/4i z") == Poly::monomial(1, GaussScalar(mpq_class(0), mpq_class(3, 4))));
  CHECK_THROWS_AS(parse_poly_string("z^"), ParseError);
  CHECK_THROWS_AS(parse_poly_string("2 + + 3"), ParseError);
  CHECK_THROWS_AS(parse_poly_string("q^2"), ParseError);
}

TEST_CASE("map and pair round trips through json") {
  Rng rng(41);
  ChargeVector k = random_charge(rng, 5, 3);
  MatrixPair p = random_valid_pair(rng, k, true);
  CHECK(pair_from_json(to_json(p)) == p);

  RationalMapData f = to_rational_map(p);
  CHECK(map_from_json(to_json(f)) == f);
  CHECK(charge_from_json(to_json(k)) == k);

  // the documented inline form with a string polynomial
  json j = {{"n", 1}, {"m", 2}, {"Q", "z^2"}, {"P", json::array({json::array({"1"})})}};
  RationalMapData g = map_from_json(j);
  CHECK(g.Q == Poly::monomial(2));

  json bad = j;
  bad["m"] = 3;
  CHECK_THROWS_AS(map_from_json(bad), std::invalid_argument);
  json badgcd = {{"Q", "z^2"}, {"P", json::array({json::array({"0", "1"})})}};
  CHECK_THROWS_AS(map_from_json(badgcd), std::invalid_argument);  // gcd = z
}

TEST_CASE("json output keys are sorted and byte-stable") {
  json j;
  j["zeta"] = 1;
  j["alpha"] = 2;
  CHECK(j.dump() == "{\"alpha\":2,\"zeta\":1}");
}

TEST_CASE("realflow config parsing") {
  json cfg = {
      {"m", 2},
      {"L", 2.0},
      {"grid", 32},
      {"tol", 1e-9},
      {"seed", 7},
      {"beta0", {{json::array({0.0, 1.0}), 0.0}, {0.0, json::array({0.0, -1.0})}}},
      {"h_minus", {{1.0, 0.0}, {0.0, 1.0}}},
      {"h_plus", {{2.0, 0.0}, {0.0, 1.0}}},
  };
  RealflowConfig c = realflow_config_from_json(cfg);
  CHECK(c.m == 2);
  CHECK(c.length == 2.0);
  CHECK(c.grid == 32);
  CHECK(c.seed == 7);
  CHECK(c.beta0(0, 0) == std::complex<double>(0, 1));
  CHECK(c.beta0(1, 1) == std::complex<double>(0, -1));
  CHECK(c.h_plus(0, 0).real() == 2.0);

  json bad = cfg;
  bad["beta0"] = {{1.0}};
  CHECK_THROWS_AS(realflow_config_from_json(bad), std::invalid_argument);
}

TEST_CASE("normal form serialization") {
  ChargeVector k({2, 1});
  json j = {{"k", {2, 1}},
            {"q", {"1", "0", "-1/2"}},
            {"C", json::array({json::array({"1", "0"}), json::array({"2", "1"}),
                               json::array({"0", "0"})})}};
  NormalFormData nf = normal_form_from_json(j);
  CHECK(nf.k == k);
  CHECK(nf.q.size() == 3);
  CHECK(nf.C.rows() == 3);
  json back = to_json(nf);
  CHECK(back["k"] == json({2, 1}));
}

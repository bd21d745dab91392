#pragma once

#include <nlohmann/json.hpp>

#include "nahmrat/flags.hpp"
#include "nahmrat/normal_forms.hpp"
#include "nahmrat/realflow.hpp"
#include "nahmrat/su2.hpp"

namespace nahmrat {

using json = nlohmann::json;

// Raised when input text cannot be read into a value at all (bad JSON shape,
// malformed literals); domain invariant violations stay std::invalid_argument
// or std::domain_error so callers can map them to distinct exit codes.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json to_json(const GaussScalar& s);
json to_json(const Poly& p);
json to_json(const Mat& m);
json to_json(const ChargeVector& k);
json to_json(const RationalMapData& f);
json to_json(const MatrixPair& p);
json to_json(const SyzygyTuple& t);
json to_json(const FlagData& flag);
json to_json(const LaurentPoly& p);  // [[numerator-of-doubled-exponent, coeff], ...]
json to_json(const LaurentMat& m);
json to_json(const NormalFormData& nf);
json to_json(const BetaStForm& b);
json to_json(const CasimirReport& r);
json to_json(const ValidityReport& r);

GaussScalar gauss_from_json(const json& j);
Poly poly_from_json(const json& j);
Mat mat_from_json(const json& j);
ChargeVector charge_from_json(const json& j);
RationalMapData map_from_json(const json& j);
MatrixPair pair_from_json(const json& j);
NormalFormData normal_form_from_json(const json& j);

// Human polynomial form, e.g. "z^2 - 3z + 2" or "(1/2+3/4i)z - i"; variable
// letter is 'z'.
Poly parse_poly_string(const std::string& text);
// Accepts either a coefficient array or a string in the human form.
Poly poly_from_json_or_string(const json& j);

// Realflow config {"m","L","grid","tol","beta0","h_minus","h_plus","seed"};
// complex entries are numbers (real) or [re, im] pairs.
struct RealflowConfig {
  int m = 1;
  double length = 1.0;
  int grid = 64;
  double tol = 1e-8;
  realflow::CMat beta0, h_minus, h_plus;
  std::uint64_t seed = 0;
};
RealflowConfig realflow_config_from_json(const json& j);
json to_json(const realflow::SolveResult& r, const RealflowConfig& cfg);
// CSV rows "node,t,lambda_1..lambda_m" of the h eigenvalues per node.
std::string realflow_csv(const realflow::SolveResult& r, const RealflowConfig& cfg);

}  // namespace nahmrat

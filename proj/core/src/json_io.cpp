#include "nahmrat/json_io.hpp"

#include <cctype>
#include <sstream>

namespace nahmrat {

json to_json(const GaussScalar& s) { return s.str(); }

json to_json(const Poly& p) {
  json arr = json::array();
  for (int k = 0; k <= p.degree(); ++k) arr.push_back(p.coeff(k).str());
  return arr;
}

json to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const ChargeVector& k) {
  json arr = json::array();
  for (int v : k.entries()) arr.push_back(v);
  return arr;
}

json to_json(const RationalMapData& f) {
  json j;
  j["n"] = f.n();
  j["m"] = f.m();
  j["Q"] = to_json(f.Q);
  json ps = json::array();
  for (const auto& p : f.P) ps.push_back(to_json(p));
  j["P"] = std::move(ps);
  return j;
}

json to_json(const MatrixPair& p) {
  json j;
  j["B"] = to_json(p.B);
  json w1 = json::array();
  for (int c = 0; c < p.w1.cols(); ++c) w1.push_back(p.w1(0, c).str());
  j["w1"] = std::move(w1);
  json ws = json::array();
  for (const auto& w : p.w) {
    json col = json::array();
    for (int r = 0; r < w.rows(); ++r) col.push_back(w(r, 0).str());
    ws.push_back(std::move(col));
  }
  j["w"] = std::move(ws);
  return j;
}

json to_json(const SyzygyTuple& t) {
  json j;
  j["s"] = to_json(t.s);
  json ts = json::array();
  for (const auto& ti : t.t) ts.push_back(to_json(ti));
  j["t"] = std::move(ts);
  return j;
}

json to_json(const FlagData& flag) {
  json j;
  json els = json::array();
  for (const auto& e : flag.elements) els.push_back(to_json(e));
  j["elements"] = std::move(els);
  j["degree_profile"] = flag.degree_profile;
  j["piece_degrees"] = flag.piece_degrees;
  return j;
}

json to_json(const LaurentPoly& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back(json::array({e, c.str()}));
  return arr;
}

json to_json(const LaurentMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const NormalFormData& nf) {
  json j;
  j["k"] = to_json(nf.k);
  json q = json::array();
  for (const auto& v : nf.q) q.push_back(v.str());
  j["q"] = std::move(q);
  j["C"] = to_json(nf.C);
  return j;
}

json to_json(const BetaStForm& b) {
  json j;
  j["beta_lambda1"] = to_json(b.beta_lambda1);
  j["alpha_res_lambda1"] = to_json(b.alpha_res_lambda1);
  j["beta_lambdaN"] = {{"residue", to_json(b.beta_lambdaN.residue)},
                       {"regular", to_json(b.beta_lambdaN.regular)}};
  j["alpha_res_lambdaN"] = to_json(b.alpha_res_lambdaN);
  return j;
}

json to_json(const CasimirReport& r) {
  json j;
  j["a"] = r.a;
  j["b"] = r.b;
  json pred = json::array();
  for (const auto& [ev, mult] : r.predicted) pred.push_back(json::array({ev.str(), mult}));
  j["predicted"] = std::move(pred);
  j["computed_charpoly"] = to_json(r.computed_charpoly);
  j["charpoly_match"] = r.charpoly_match;
  j["gamma_integral"] = r.gamma_integral;
  j["gamma_bound"] = r.gamma_bound;
  j["pass"] = r.pass();
  return j;
}

json to_json(const ValidityReport& r) {
  json j;
  j["cyclic"] = r.cyclic;
  j["det_Mk_nonzero"] = r.det_Mk_nonzero;
  json v = json::array();
  for (const auto& e : r.vanishing)
    v.push_back({{"i", e.i}, {"j", e.j}, {"l", e.l}, {"vanished", e.vanished}});
  j["vanishing"] = std::move(v);
  j["valid"] = r.valid();
  return j;
}

GaussScalar gauss_from_json(const json& j) {
  try {
    if (j.is_number_integer()) return GaussScalar(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return GaussScalar::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
  throw ParseError("expected a rational literal string, got " + j.dump());
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an ascending coefficient array");
  std::vector<GaussScalar> cs;
  for (const auto& e : j) cs.push_back(gauss_from_json(e));
  return Poly(std::move(cs));
}

Mat mat_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a matrix (array of rows)");
  int rows = static_cast<int>(j.size());
  if (!j[0].is_array()) throw ParseError("expected a matrix (array of rows)");
  int cols = static_cast<int>(j[0].size());
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[static_cast<size_t>(i)].size()) != cols)
      throw ParseError("ragged matrix rows");
    for (int c = 0; c < cols; ++c)
      m(i, c) = gauss_from_json(j[static_cast<size_t>(i)][static_cast<size_t>(c)]);
  }
  return m;
}

ChargeVector charge_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected a charge array [k1,...,kn]");
  std::vector<int> k;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError("charge entries must be integers");
    k.push_back(e.get<int>());
  }
  return ChargeVector(std::move(k));
}

RationalMapData map_from_json(const json& j) {
  RationalMapData f;
  try {
    f.Q = poly_from_json_or_string(j.at("Q"));
    if (!j.at("P").is_array()) throw ParseError("P must be an array of polynomials");
    for (const auto& p : j.at("P")) f.P.push_back(poly_from_json_or_string(p));
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  if (j.contains("n") && j.at("n").get<int>() != f.n())
    throw std::invalid_argument("declared n does not match P");
  if (j.contains("m") && j.at("m").get<int>() != f.m())
    throw std::invalid_argument("declared m does not match deg Q");
  f.check();
  return f;
}

MatrixPair pair_from_json(const json& j) {
  MatrixPair p;
  try {
    p.B = mat_from_json(j.at("B"));
    const json& w1 = j.at("w1");
    p.w1 = Mat(1, static_cast<int>(w1.size()));
    for (int c = 0; c < p.w1.cols(); ++c) p.w1(0, c) = gauss_from_json(w1[static_cast<size_t>(c)]);
    for (const auto& wj : j.at("w")) {
      Mat col(static_cast<int>(wj.size()), 1);
      for (int r = 0; r < col.rows(); ++r) col(r, 0) = gauss_from_json(wj[static_cast<size_t>(r)]);
      p.w.push_back(std::move(col));
    }
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  if (!p.B.is_square() || p.B.rows() != p.w1.cols())
    throw std::invalid_argument("MatrixPair: inconsistent dimensions");
  for (const auto& w : p.w)
    if (w.rows() != p.m()) throw std::invalid_argument("MatrixPair: inconsistent w dimensions");
  return p;
}

NormalFormData normal_form_from_json(const json& j) {
  try {
    NormalFormData nf{charge_from_json(j.at("k")), {}, Mat()};
    for (const auto& e : j.at("q")) nf.q.push_back(gauss_from_json(e));
    nf.C = mat_from_json(j.at("C"));
    return nf;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

namespace {

// term := [coefficient] ['*'] [var ['^' exponent]]
struct PolyParser {
  const std::string& s;
  size_t pos = 0;

  explicit PolyParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  GaussScalar parse_literal() {
    skip_ws();
    if (s[pos] == '(') {
      size_t depth = 0, start = pos;
      do {
        if (s[pos] == '(') ++depth;
        if (s[pos] == ')') --depth;
        ++pos;
        if (pos > s.size()) throw std::invalid_argument("polynomial: unbalanced parentheses");
      } while (depth > 0);
      return GaussScalar::parse(s.substr(start, pos - start));
    }
    size_t start = pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/' || s[pos] == 'i'))
      ++pos;
    if (pos == start) throw std::invalid_argument("polynomial: expected a coefficient");
    return GaussScalar::parse(s.substr(start, pos - start));
  }

  Poly parse_term() {
    GaussScalar coeff(1);
    bool have_coeff = false;
    char c = peek();
    if (c == '(' || std::isdigit(static_cast<unsigned char>(c)) || c == 'i') {
      coeff = parse_literal();
      have_coeff = true;
    }
    eat('*');
    int exp = 0;
    if (peek() == 'z') {
      ++pos;
      exp = 1;
      if (eat('^')) {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("polynomial: missing exponent");
        exp = std::stoi(s.substr(start, pos - start));
      }
    } else if (!have_coeff) {
      throw std::invalid_argument("polynomial: empty term");
    }
    return Poly::monomial(exp, coeff);
  }

  Poly parse() {
    Poly acc;
    bool negate = eat('-');
    if (!negate) eat('+');
    for (;;) {
      Poly t = parse_term();
      acc = negate ? acc - t : acc + t;
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+'))
        negate = false;
      else if (eat('-'))
        negate = true;
      else
        throw std::invalid_argument("polynomial: unexpected character at '" + s.substr(pos) + "'");
    }
    return acc;
  }
};

}  // namespace

Poly parse_poly_string(const std::string& text) {
  try {
    return PolyParser(text).parse();
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

Poly poly_from_json_or_string(const json& j) {
  if (j.is_string()) return parse_poly_string(j.get<std::string>());
  return poly_from_json(j);
}

namespace {

realflow::CMat cmat_from_json(const json& j, int m, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != m)
    throw std::invalid_argument(std::string(what) + ": expected an m x m array");
  realflow::CMat out(m, m);
  for (int r = 0; r < m; ++r) {
    const json& row = j[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != m)
      throw std::invalid_argument(std::string(what) + ": ragged rows");
    for (int c = 0; c < m; ++c) {
      const json& e = row[static_cast<size_t>(c)];
      if (e.is_number())
        out(r, c) = e.get<double>();
      else if (e.is_array() && e.size() == 2)
        out(r, c) = std::complex<double>(e[0].get<double>(), e[1].get<double>());
      else
        throw std::invalid_argument(std::string(what) + ": entries must be numbers or [re, im]");
    }
  }
  return out;
}

}  // namespace

RealflowConfig realflow_config_from_json(const json& j) {
  RealflowConfig cfg;
  cfg.m = j.at("m").get<int>();
  if (cfg.m < 1) throw std::invalid_argument("realflow config: m must be >= 1");
  cfg.length = j.value("L", 1.0);
  cfg.grid = j.value("grid", 64);
  cfg.tol = j.value("tol", 1e-8);
  cfg.seed = j.value("seed", 0ULL);
  cfg.beta0 = cmat_from_json(j.at("beta0"), cfg.m, "beta0");
  cfg.h_minus = cmat_from_json(j.at("h_minus"), cfg.m, "h_minus");
  cfg.h_plus = cmat_from_json(j.at("h_plus"), cfg.m, "h_plus");
  return cfg;
}

json to_json(const realflow::SolveResult& r, const RealflowConfig& cfg) {
  json j;
  j["m"] = cfg.m;
  j["L"] = cfg.length;
  j["grid"] = cfg.grid;
  j["tol"] = cfg.tol;
  j["seed"] = cfg.seed;
  j["residual"] = r.residual;
  j["converged"] = r.converged;
  j["descent_steps"] = r.descent_steps;
  j["newton_steps"] = r.newton_steps;
  j["residual_history"] = r.residual_history;
  json h = json::array();
  for (const auto& hm : r.path.h) {
    json rows = json::array();
    for (int a = 0; a < hm.rows(); ++a) {
      json row = json::array();
      for (int b = 0; b < hm.cols(); ++b)
        row.push_back(json::array({hm(a, b).real(), hm(a, b).imag()}));
      rows.push_back(std::move(row));
    }
    h.push_back(std::move(rows));
  }
  j["h"] = std::move(h);
  return j;
}

std::string realflow_csv(const realflow::SolveResult& r, const RealflowConfig& cfg) {
  std::ostringstream os;
  os << "node,t";
  for (int i = 1; i <= cfg.m; ++i) os << ",lambda_" << i;
  os << "\n";
  os.precision(17);
  for (size_t i = 0; i < r.path.h.size(); ++i) {
    Eigen::SelfAdjointEigenSolver<realflow::CMat> es(r.path.h[i]);
    os << i << "," << (cfg.length * static_cast<double>(i) / cfg.grid);
    for (int v = 0; v < cfg.m; ++v) os << "," << es.eigenvalues()(v);
    os << "\n";
  }
  return os.str();
}

}  // namespace nahmrat

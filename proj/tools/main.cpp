// Command-line front end: conversions between matrix pairs and based rational
// maps, normal-form displays, verification suites, and the truncated-interval
// real-equation solver.
//
// Exit codes: 0 success, 1 usage, 2 parse, 3 domain validity, 4 numeric
// non-convergence.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nahmrat/flags.hpp"
#include "nahmrat/generate.hpp"
#include "nahmrat/json_io.hpp"
#include "nahmrat/verify.hpp"

namespace {

using nahmrat::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNoConverge = 4;

struct Options {
  std::string input_path;
  std::string inline_data;
  std::string output_path;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string format = "json";
};

json load_input(const Options& opt) {
  if (!opt.input_path.empty() && !opt.inline_data.empty())
    throw CLI::ValidationError("--input and --data are mutually exclusive");
  std::string text;
  if (!opt.input_path.empty()) {
    std::ifstream in(opt.input_path);
    if (!in) throw nahmrat::ParseError("cannot open input file '" + opt.input_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else if (!opt.inline_data.empty()) {
    text = opt.inline_data;
  } else {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw nahmrat::ParseError(std::string("invalid JSON input: ") + e.what());
  }
}

std::string render(const json& j, const std::string& format) {
  if (format == "csv") {
    std::ostringstream os;
    os << "key,value\n";
    for (auto it = j.begin(); it != j.end(); ++it)
      os << it.key() << "," << it.value().dump() << "\n";
    return os.str();
  }
  return j.dump(1);
}

void emit(const json& j, const Options& opt) {
  std::string text = render(j, opt.format) + "\n";
  if (opt.output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.output_path);
    if (!out) throw std::runtime_error("cannot open output file '" + opt.output_path + "'");
    out << text;
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << text;
}

int cmd_charge(const Options& opt) {
  nahmrat::RationalMapData f = nahmrat::map_from_json(load_input(opt));
  nahmrat::ChargeVector k = nahmrat::holomorphic_charge(f);
  std::vector<nahmrat::SyzygyTuple> basis = nahmrat::minimal_syzygy_basis(f);
  json out;
  out["charge"] = nahmrat::to_json(k);
  json degs = json::array();
  for (const auto& g : basis) degs.push_back(g.degree());
  out["syzygy_degrees"] = std::move(degs);
  emit(out, opt);
  return kExitOk;
}

int cmd_membership(const Options& opt, const std::string& k_text) {
  nahmrat::RationalMapData f = nahmrat::map_from_json(load_input(opt));
  json kj;
  try {
    kj = json::parse(k_text);
  } catch (const json::exception& e) {
    throw nahmrat::ParseError(std::string("invalid --k: ") + e.what());
  }
  nahmrat::ChargeVector k = nahmrat::charge_from_json(kj);
  json out;
  out["k"] = nahmrat::to_json(k);
  out["A_k"] = nahmrat::predicate_A(f, k.entries());
  json shifts = json::array();
  for (int j = 1; j <= k.n(); ++j)
    for (int i = j + 1; i <= k.n(); ++i)
      for (int l = 1; l <= k[j - 1] - k[i - 1]; ++l) {
        std::vector<int> s = k.entries();
        s[static_cast<size_t>(i - 1)] += l;
        s[static_cast<size_t>(j - 1)] -= l;
        shifts.push_back({{"i", i}, {"j", j}, {"l", l}, {"A", nahmrat::predicate_A(f, s)}});
      }
  out["rebalancings"] = std::move(shifts);
  out["member"] = nahmrat::membership_Rk(f, k);
  emit(out, opt);
  return kExitOk;
}

int cmd_to_map(const Options& opt, const std::string& k_text) {
  nahmrat::MatrixPair p = nahmrat::pair_from_json(load_input(opt));
  if (!k_text.empty()) {
    nahmrat::ChargeVector k = nahmrat::charge_from_json(json::parse(k_text));
    nahmrat::ValidityReport rep = nahmrat::validate_matrix_pair(p, k);
    if (!rep.valid()) {
      json err;
      err["error"] = "invalid matrix pair";
      err["report"] = nahmrat::to_json(rep);
      err["detail"] = rep.describe();
      std::cerr << err.dump(1) << "\n";
      return kExitDomain;
    }
  }
  emit(nahmrat::to_json(nahmrat::to_rational_map(p)), opt);
  return kExitOk;
}

int cmd_to_matrix(const Options& opt) {
  nahmrat::RationalMapData f = nahmrat::map_from_json(load_input(opt));
  emit(nahmrat::to_json(nahmrat::from_rational_map(f)), opt);
  return kExitOk;
}

int cmd_roundtrip(const Options& opt) {
  json in = load_input(opt);
  json out;
  if (in.contains("B")) {
    nahmrat::MatrixPair p = nahmrat::pair_from_json(in);
    nahmrat::RationalMapData f = nahmrat::to_rational_map(p);
    nahmrat::MatrixPair back = nahmrat::from_rational_map(f);
    bool ok_pair = nahmrat::canonicalize(back).pair == nahmrat::canonicalize(p).pair;
    bool ok_map = nahmrat::to_rational_map(back) == f;
    out["map"] = nahmrat::to_json(f);
    out["pair_roundtrip"] = ok_pair;
    out["map_roundtrip"] = ok_map;
    out["ok"] = ok_pair && ok_map;
  } else {
    nahmrat::RationalMapData f = nahmrat::map_from_json(in);
    nahmrat::MatrixPair p = nahmrat::from_rational_map(f);
    bool ok = nahmrat::to_rational_map(p) == f;
    out["pair"] = nahmrat::to_json(p);
    out["map_roundtrip"] = ok;
    out["ok"] = ok;
  }
  emit(out, opt);
  return out["ok"].get<bool>() ? kExitOk : kExitDomain;
}

int cmd_normal_form(const Options& opt) {
  nahmrat::NormalFormData nf = nahmrat::normal_form_from_json(load_input(opt));
  nahmrat::BetaStForm b = nahmrat::build_beta_st(nf);
  json out;
  out["beta_st"] = nahmrat::to_json(b);
  out["gq_identity"] = nahmrat::gq_conjugation_identity(nf.q);
  emit(out, opt);
  return kExitOk;
}

int cmd_hurtubise(const Options& opt) {
  json in = load_input(opt);
  nahmrat::ChargeVector k = nahmrat::charge_from_json(in.at("k"));
  nahmrat::Mat c = nahmrat::mat_from_json(in.at("C"));
  nahmrat::Mat b = nahmrat::hurtubise_block_B(c, k);
  auto [g, bh] = nahmrat::to_hurtubise_form(b, k);
  json out;
  out["B"] = nahmrat::to_json(b);
  out["g"] = nahmrat::to_json(g);
  out["B_H"] = nahmrat::to_json(bh);
  out["target_pattern"] = nahmrat::block_pattern_validate(bh, k, "gb-target");
  out["round_trip"] = (nahmrat::from_hurtubise_form(bh, k) == b);
  emit(out, opt);
  return kExitOk;
}

int cmd_verify(const Options& opt, const std::string& suite, int budget) {
  nahmrat::SuiteReport rep = nahmrat::run_suite(suite, opt.seed, budget, opt.jobs);
  json out;
  out["suite"] = rep.suite;
  out["seed"] = rep.seed;
  out["budget"] = rep.budget;
  out["pass"] = rep.pass;
  out["details"] = rep.details;
  emit(out, opt);
  return rep.pass ? kExitOk : kExitDomain;
}

int cmd_realflow(const Options& opt) {
  nahmrat::RealflowConfig cfg = nahmrat::realflow_config_from_json(load_input(opt));
  if (cfg.grid < 16) throw std::invalid_argument("realflow: grid must be >= 16");
  if (cfg.tol <= 0) throw std::invalid_argument("realflow: tol must be positive");
  nahmrat::realflow::SolveOptions so;
  so.length = cfg.length;
  so.seed = cfg.seed != 0 ? cfg.seed : opt.seed;
  nahmrat::realflow::SolveResult res =
      nahmrat::realflow::solve_real_bvp(cfg.beta0, cfg.h_minus, cfg.h_plus, cfg.grid, cfg.tol, so);
  std::string base = opt.output_path.empty() ? "realflow_out" : opt.output_path;
  write_file(base + ".json", nahmrat::to_json(res, cfg).dump(1) + "\n");
  write_file(base + ".csv", nahmrat::realflow_csv(res, cfg));
  json summary;
  summary["residual"] = res.residual;
  summary["converged"] = res.converged;
  summary["output_json"] = base + ".json";
  summary["output_csv"] = base + ".csv";
  std::cout << summary.dump(1) << "\n";
  return res.converged ? kExitOk : kExitNoConverge;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Nahm boundary data <-> based rational maps toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  Options opt;
  app.add_option("--input", opt.input_path, "read input JSON from a file")->expected(1);
  app.add_option("--data", opt.inline_data, "inline JSON input")->expected(1);
  app.add_option("--output", opt.output_path, "write output to a file (realflow: base path)");
  app.add_option("--seed", opt.seed, "random seed (logged in reports)");
  app.add_option("--jobs", opt.jobs, "worker threads for verify suites")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string k_text;
  int budget = 0;
  std::string suite;

  CLI::App* c_charge = app.add_subcommand("charge", "holomorphic charge of a rational map");
  CLI::App* c_member = app.add_subcommand("membership", "R_k membership of a rational map");
  c_member->add_option("--k", k_text, "charge vector, e.g. [2,1]")->required();
  CLI::App* c_tomap = app.add_subcommand("to-map", "matrix pair -> rational map");
  c_tomap->add_option("--k", k_text, "validate the pair against this charge first");
  CLI::App* c_tomat = app.add_subcommand("to-matrix", "rational map -> matrix pair");
  CLI::App* c_round = app.add_subcommand("roundtrip", "run both conversion directions");
  CLI::App* c_nf = app.add_subcommand("normal-form", "beta_st displays and the g_q identity");
  CLI::App* c_hur = app.add_subcommand("hurtubise", "block form and the g_B sweep");
  CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
  c_verify->add_option("suite", suite, "one of: roundtrip duality hurtubise casimir halfpower dimension realflow")
      ->required();
  c_verify->add_option("--budget", budget, "instance budget (default 50)");
  CLI::App* c_real = app.add_subcommand("realflow", "solve the real equation on [0, L]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_charge->parsed()) return cmd_charge(opt);
    if (c_member->parsed()) return cmd_membership(opt, k_text);
    if (c_tomap->parsed()) return cmd_to_map(opt, k_text);
    if (c_tomat->parsed()) return cmd_to_matrix(opt);
    if (c_round->parsed()) return cmd_roundtrip(opt);
    if (c_nf->parsed()) return cmd_normal_form(opt);
    if (c_hur->parsed()) return cmd_hurtubise(opt);
    if (c_verify->parsed()) {
      bool known = false;
      for (const auto& s : nahmrat::suite_names()) known = known || s == suite;
      if (!known) {
        std::cerr << "unknown suite '" << suite << "'\n";
        return kExitUsage;
      }
      return cmd_verify(opt, suite, budget);
    }
    if (c_real->parsed()) return cmd_realflow(opt);
  } catch (const nahmrat::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(NAHMRAT_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string q(const std::string& s) { return "'" + s + "'"; }

}  // namespace

TEST_CASE("charge subcommand") {
  RunResult r = run("charge --data " + q(R"({"n":1,"m":2,"Q":["0","0","1"],"P":[["1"]]})"));
  CHECK(r.exit_code == 0);
  json out = json::parse(r.out);
  CHECK(out["charge"] == json({2}));

  r = run("charge --data " + q(R"({"Q":["0","-1","1"],"P":[["-1","1"],["0","1"]]})"));
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["charge"] == json({1, 1}));

  r = run("charge --data " + q(R"({"Q":["0","0","1"],"P":[["1"],[]]})"));
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["charge"] == json({2, 0}));

  // identical inputs produce byte-identical outputs
  RunResult again = run("charge --data " + q(R"({"n":1,"m":2,"Q":["0","0","1"],"P":[["1"]]})"));
  CHECK(again.out == run("charge --data " + q(R"({"n":1,"m":2,"Q":["0","0","1"],"P":[["1"]]})")).out);

  // parse failure -> 2, malformed map -> 3
  CHECK(run("charge --data 'not json'").exit_code == 2);
  CHECK(run("charge --data " + q(R"({"Q":["0","0","1"],"P":[["0","1"]]})")).exit_code == 3);
}

TEST_CASE("conversions") {
  RunResult r = run("to-map --data " + q(R"({"B":[["0"]],"w1":["1"],"w":[["1"]]})"));
  CHECK(r.exit_code == 0);
  json out = json::parse(r.out);
  CHECK(out["Q"] == json({"0", "1"}));
  CHECK(out["P"] == json({{"1"}}));

  r = run("to-matrix --data " + q(R"({"Q":["0","0","1"],"P":[["1"]]})"));
  CHECK(r.exit_code == 0);
  out = json::parse(r.out);
  CHECK(out["B"] == json::array({json::array({"0", "0"}), json::array({"1", "0"})}));
  CHECK(out["w1"] == json({"0", "1"}));

  // invalid pair: gcd(z^2, z) != 1, reported as a domain failure
  r = run("to-map --data " + q(R"({"B":[["0","1"],["0","0"]],"w1":["1","0"],"w":[["1","0"]]})"));
  CHECK(r.exit_code == 3);

  // with --k the validity report cites the failing condition first
  r = run("to-map --k [2] --data " +
          q(R"({"B":[["0","1"],["0","0"]],"w1":["1","0"],"w":[["0","0"]]})"));
  CHECK(r.exit_code == 3);

  r = run("roundtrip --data " + q(R"({"B":[["0"]],"w1":["1"],"w":[["1"]]})"));
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["ok"] == true);
}

TEST_CASE("membership subcommand") {
  std::string f = q(R"({"Q":["0","0","1"],"P":[["1"],[]]})");
  RunResult r = run("membership --k [2,0] --data " + f);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["member"] == true);
  r = run("membership --k [1,1] --data " + f);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["member"] == false);
}

TEST_CASE("normal-form and hurtubise subcommands") {
  std::string nf = q(R"({"k":[2,1],"q":["1","0","-1/2"],"C":[["1","0"],["2","1"],["1","0"]]})");
  RunResult r = run("normal-form --data " + nf);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["gq_identity"] == true);

  r = run("hurtubise --data " + nf);
  CHECK(r.exit_code == 0);
  json out = json::parse(r.out);
  CHECK(out["round_trip"] == true);
  CHECK(out["target_pattern"] == true);

  // C violating the sparsity pattern is a domain error
  std::string bad = q(R"({"k":[2,1],"q":["1","0","0"],"C":[["1","0"],["2","1"],["1","1"]]})");
  CHECK(run("normal-form --data " + bad).exit_code == 3);
}

TEST_CASE("verify subcommand") {
  RunResult r = run("verify roundtrip --seed 1 --budget 5");
  CHECK(r.exit_code == 0);
  json out = json::parse(r.out);
  CHECK(out["pass"] == true);
  CHECK(out["seed"] == 1);

  CHECK(run("verify unknown").exit_code == 1);
  CHECK(run("").exit_code == 1);
}

TEST_CASE("realflow subcommand") {
  json cfg = {{"m", 1},          {"L", 1.0},
              {"grid", 32},      {"tol", 1e-10},
              {"seed", 3},       {"beta0", {{json::array({0.3, 0.4})}}},
              {"h_minus", {{1.0}}}, {"h_plus", {{1.0}}}};
  std::string path = "/tmp/nahmrat_cli_test_cfg.json";
  std::ofstream(path) << cfg.dump();
  RunResult r = run("realflow --input " + path + " --output /tmp/nahmrat_cli_test_out");
  CHECK(r.exit_code == 0);
  json summary = json::parse(r.out);
  CHECK(summary["converged"] == true);
  CHECK(summary["residual"].get<double>() <= 1e-10);
  std::ifstream res("/tmp/nahmrat_cli_test_out.json");
  CHECK(res.good());
  std::ifstream csv("/tmp/nahmrat_cli_test_out.csv");
  CHECK(csv.good());
  std::string header;
  std::getline(csv, header);
  CHECK(header == "node,t,lambda_1");

  // grid below 16 is rejected as domain-invalid
  cfg["grid"] = 4;
  std::ofstream(path) << cfg.dump();
  CHECK(run("realflow --input " + path).exit_code == 3);
}

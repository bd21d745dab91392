#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace nahmrat {

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int budget = 0;
  bool pass = false;
  nlohmann::json details;  // counters plus a counterexample dump on failure
};

const std::vector<std::string>& suite_names();

// suite in {roundtrip, duality, hurtubise, casimir, halfpower, dimension,
// realflow}; throws std::invalid_argument on an unknown name.  Instance
// batches fan out over `jobs` workers; per-instance seeds are derived up
// front so the report does not depend on the worker count.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed, int budget, int jobs = 1);

}  // namespace nahmrat

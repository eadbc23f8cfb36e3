// Command-line front end; run() is the whole program minus process plumbing.
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace sphharm::cli {

/// Parses args (without the program name), executes, and returns the exit
/// code: 0 success, 1 failed verification or runtime failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::optional<int> p;
  std::optional<int> n;
  std::optional<double> tol;
  int samples = 100;
  std::uint64_t seed = 1;
};

struct CheckResult {
  std::string check;
  int p_min, p_max, n_min, n_max;
  double max_residual;
  double tolerance;
  bool pass;
};

std::vector<std::string> check_names();
bool is_check(const std::string& name);
/// Throws std::invalid_argument for unknown names.
CheckResult run_check(const std::string& name, const VerifyOptions& opt);

nlohmann::json to_json(const CheckResult& r);

}  // namespace sphharm::cli

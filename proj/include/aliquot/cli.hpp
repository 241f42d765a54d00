#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aliquot/report.hpp"

namespace aliquot::cli {

struct RunConfig {
  std::string subcommand;
  std::vector<u64> x;
  std::optional<double> log_log_x;
  std::string digits = "g=10;D=0,1,2,3,4,5,6,7,8";
  u64 base = 10;
  std::string k = "1";  // integer or "auto"
  u64 q = 1;
  std::optional<u64> a;
  u64 p = 3;
  std::vector<u64> n;
  u64 m = 4;
  double gamma = 0.5;
  double delta = 0.5;
  double alpha = 0.9;
  double alpha_prime = 0.2;
  double A = 2.0;
  double epsilon = 0.5;
  unsigned threads = 0;
  u64 segment_size = u64{1} << 20;
  Format format = Format::json;
  std::string output;  // empty = standard output
  bool provenance = true;
};

// Relative --output paths are resolved against this directory when it is set.
inline constexpr const char* kOutputDirEnv = "ALIQUOT_OUTPUT_DIR";

// Validates every run in the config, then executes them in order.
// Throws ParameterError before any sieving if a run is invalid.
std::vector<ExperimentReport> execute(const RunConfig& config);

// Exit codes: 0 success, 1 resource/overflow error, 2 invalid parameters.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace aliquot::cli

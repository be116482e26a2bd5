#pragma once

// Run configuration of the moyal driver: a single JSON file, with command-line
// flags applied on top.
//
//   {
//     "spacetime":  {"dim": 4, "metric": [1, -1, -1, -1]},
//     "sigma0":     [[...]],                      optional
//     "grid":       {"dim": 2, "n": 64, "length": 8, "theta": 1},
//     "seed":       20240611,
//     "tolerances": {"oracle_relative_l2": 1e-6},
//     "output":     "out",
//     "workers":    0
//   }
//
// Every key is optional; unknown keys are rejected.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "moyal/verify.hpp"

namespace moyal::cli {

struct RunConfig {
  Spacetime spacetime;
  std::optional<SkewForm> sigma0;
  GridSpec grid;
  std::uint64_t seed = 20240611;
  std::map<std::string, double> tolerances;
  std::filesystem::path output = ".";
  unsigned workers = 0;

  verify::SuiteConfig suite_config() const;
  /// sigma0 when it has dimension dim, otherwise the standard block form.
  SkewForm sigma_for(int dim) const;
  double tolerance(const std::string& name, double fallback) const;
};

/// Throws FormatError on unknown keys, wrong types or invalid values.
RunConfig parse_run_config(const Json& j);
RunConfig load_run_config(const std::filesystem::path& path);
Json to_json(const RunConfig& config);

}  // namespace moyal::cli

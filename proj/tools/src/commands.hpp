#pragma once

// Subcommands of the moyal driver. Each returns the process exit code:
// 0 when every check passes, 1 when a check fails. Usage and format errors
// surface as exceptions that main() maps to 2.

#include <filesystem>
#include <string>
#include <vector>

#include "moyal/oracle.hpp"
#include "run_config.hpp"

namespace moyal::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Gaussian descriptor: {"center": [...], "width": w | "precision": [[...]],
/// "freq": [...], "amp": [re, im]}. Only "center" is required.
oracle::GaussianPacket packet_from_json(const Json& j);

/// orbit.json: n samples of the orbit of sigma0 with their invariants.
int cmd_orbit(const RunConfig& config, int n);

/// Operands are .moya grids or Gaussian descriptors (.json). Writes
/// star.moya, star.json (norms, defects) and timing.json (runtime).
int cmd_star(const RunConfig& config, const std::filesystem::path& f, const std::filesystem::path& g,
             bool oracle);

/// verify_<suite>.json; unknown suite names throw std::invalid_argument.
int cmd_verify(const RunConfig& config, const std::string& suite);

/// sweep.csv over the semiclassical pair, one row per theta.
int cmd_sweep(const RunConfig& config, const std::vector<double>& thetas);

/// Samples a Gaussian descriptor onto the config grid as <name>.moya.
int cmd_sample(const RunConfig& config, const std::filesystem::path& descriptor, const std::string& name);

}  // namespace moyal::cli

// moyal: command-line driver for the star-product engine.
//
//   moyal [--config FILE] [--seed N] [--out DIR] <command> ...
//
//   orbit  [--n N]              orbit samples of sigma0 and their invariants
//   star   F G [--oracle]       deformed product of two grids / Gaussians
//   verify [--suite NAME]       run verification suites (default: all)
//   sweep  [--theta LIST]       theta -> 0 sweep of the semiclassical pair
//   sample DESCRIPTOR [--name]  sample a Gaussian descriptor to a grid
//
// Exit codes: 0 pass, 1 check failure, 2 usage or format error.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace moyal::cli;

  CLI::App app{"Deformation-quantization engine: star products, Weyl relations and their checks"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  app.add_option("--config", config_path, "Run configuration (JSON)")->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "Override the configured seed");
  app.add_option("--out", out_dir, "Output directory");

  int orbit_n = 100;
  auto* orbit = app.add_subcommand("orbit", "Sample the orbit of sigma0 and tabulate its invariants");
  orbit->add_option("--n", orbit_n, "Number of samples");

  std::string star_f;
  std::string star_g;
  bool use_oracle = false;
  auto* star = app.add_subcommand("star", "Deformed product of two operands (.moya grid or Gaussian .json)");
  star->add_option("f", star_f, "Left operand")->required();
  star->add_option("g", star_g, "Right operand")->required();
  star->add_flag("--oracle", use_oracle, "Compare against the quadrature oracle (Gaussian operands only)");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run verification suites and emit a JSON report");
  verify->add_option("--suite", suite, "Suite name or 'all'");

  std::vector<double> thetas{1.0, 0.5, 0.25, 0.125, 0.0625};
  auto* sweep = app.add_subcommand("sweep", "Semiclassical sweep over theta; writes sweep.csv");
  sweep->add_option("--theta", thetas, "Strictly decreasing positive values")->delimiter(',');

  std::string descriptor;
  std::string name = "sample";
  auto* sample = app.add_subcommand("sample", "Sample a Gaussian descriptor on the configured grid");
  sample->add_option("descriptor", descriptor, "Gaussian descriptor (.json)")->required();
  sample->add_option("--name", name, "Output stem");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    RunConfig config = config_path.empty() ? RunConfig{} : load_run_config(config_path);
    if (seed) config.seed = *seed;
    if (!out_dir.empty()) config.output = out_dir;

    if (orbit->parsed()) return cmd_orbit(config, orbit_n);
    if (star->parsed()) return cmd_star(config, star_f, star_g, use_oracle);
    if (verify->parsed()) return cmd_verify(config, suite);
    if (sweep->parsed()) return cmd_sweep(config, thetas);
    if (sample->parsed()) return cmd_sample(config, descriptor, name);
  } catch (const std::exception& e) {
    // library, format, usage and I/O errors alike
    std::fprintf(stderr, "moyal: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}

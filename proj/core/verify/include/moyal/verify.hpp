#pragma once

// Named verification suites. Every suite is a pure function of its
// configuration: re-running with the same config yields byte-identical JSON.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moyal/geometry.hpp"
#include "moyal/grid.hpp"
#include "moyal/io.hpp"
#include "moyal/oracle.hpp"
#include "moyal/star.hpp"

namespace moyal::verify {

struct SuiteConfig {
  Spacetime spacetime;                ///< exact and geometry suites (default d = 4)
  std::optional<SkewForm> sigma0;     ///< overrides standard_skew(spacetime)
  GridSpec grid;                      ///< numeric suites (default d = 2, N = 64, L = 8)
  std::uint64_t seed = 20240611;
  std::map<std::string, double> tolerances;  ///< keyed by check name
  unsigned workers = 0;

  SkewForm sigma() const;
};

enum class Relation { AtMost, AtLeast, Within };

struct Check {
  std::string name;
  double measured = 0.0;
  Relation relation = Relation::AtMost;
  double bound = 0.0;  ///< AtMost / AtLeast
  double lo = 0.0;     ///< Within
  double hi = 0.0;
  bool passed = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  Json parameters = Json::object();

  bool passed() const;
  Json to_json() const;
};

/// weyl, bridge, oracle, commutator, pointwise, equivariance, cstar, orbit,
/// semiclassical.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

/// "all" expands to every suite in suite_names() order.
std::vector<SuiteReport> run_suites(const std::string& name, const SuiteConfig& config);

/// {"passed": ..., "suites": [...]}.
Json combined_report(const std::vector<SuiteReport>& reports);

/// The two width-sqrt(2) Gaussians of the semiclassical suite (d = 2).
std::pair<GridFunction, GridFunction> semiclassical_pair(const GridSpec& spec);

GridFunction sample_packet(const GridSpec& spec, const oracle::GaussianPacket& g);

/// Relative L2 distance between fg and the quadrature oracle for f * g,
/// taken over the stride-N/16 sub-lattice of the region |q_i| <= 3L/8.
double oracle_defect(const oracle::GaussianPacket& f, const oracle::GaussianPacket& g, const GridFunction& fg,
                     const SkewForm& sigma, Parallelism par = {});

}  // namespace moyal::verify

#pragma once

// Test functions and bookkeeping shared by the suites.

#include <string>

#include "moyal/oracle.hpp"
#include "moyal/random.hpp"
#include "moyal/verify.hpp"

namespace moyal::verify {

class ReportBuilder {
 public:
  ReportBuilder(std::string suite, const SuiteConfig& config);

  void at_most(const std::string& name, double measured, double bound);
  void at_least(const std::string& name, double measured, double bound);
  void within(const std::string& name, double measured, double lo, double hi);
  Json& parameters() { return report_.parameters; }
  SuiteReport finish() { return std::move(report_); }

 private:
  double override_or(const std::string& key, double fallback) const;

  const SuiteConfig& config_;
  SuiteReport report_;
};

/// prod_i (erf((x_i + R)/s) - erf((x_i - R)/s)) / 2: a box of half-width R
/// smoothed by a Gaussian of scale s.
GridFunction flat_top_window(const GridSpec& spec, double radius, double softness);

/// Center in [-1/2, 1/2]^d, precision eigenvalues in [0.6, 1.6] with a random
/// orientation (d <= 2), frequency in [-1/2, 1/2]^d, unit-modulus amplitude.
oracle::GaussianPacket random_packet(Rng& rng, int dim);

/// sum_{|k| <= kmax} c_k e(k r / L) on a 1-D grid, c_k uniform in the unit
/// square. No Nyquist content as long as kmax < n/2.
GridFunction random_trig_1d(Rng& rng, int n, double length, int kmax);

/// `modes` random plane waves with integer wave numbers in [-kmax, kmax]^d.
GridFunction random_trig(Rng& rng, const GridSpec& spec, int kmax, int modes);

/// Uniform in [lo, hi]^d.
Vec random_vec(Rng& rng, int dim, double lo, double hi);

/// Nonzero integer covector with entries in {-1, 0, 1}.
Covector random_unit_covector(Rng& rng, int dim);

Json vec_json(const Vec& v);

}  // namespace moyal::verify

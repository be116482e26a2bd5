#pragma once

#include "moyal/verify.hpp"

namespace moyal::verify {

SuiteReport suite_weyl(const SuiteConfig& config);
SuiteReport suite_orbit(const SuiteConfig& config);
SuiteReport suite_bridge(const SuiteConfig& config);
SuiteReport suite_oracle(const SuiteConfig& config);
SuiteReport suite_commutator(const SuiteConfig& config);
SuiteReport suite_cstar(const SuiteConfig& config);
SuiteReport suite_semiclassical(const SuiteConfig& config);
SuiteReport suite_pointwise(const SuiteConfig& config);
SuiteReport suite_equivariance(const SuiteConfig& config);

}  // namespace moyal::verify

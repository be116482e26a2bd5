#include <algorithm>
#include <functional>
#include <stdexcept>

#include "suites.hpp"

namespace moyal::verify {

namespace {

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::AtMost:
      return "<=";
    case Relation::AtLeast:
      return ">=";
    case Relation::Within:
      return "in";
  }
  return "?";
}

using SuiteFn = SuiteReport (*)(const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"weyl", suite_weyl},
      {"bridge", suite_bridge},
      {"oracle", suite_oracle},
      {"commutator", suite_commutator},
      {"pointwise", suite_pointwise},
      {"equivariance", suite_equivariance},
      {"cstar", suite_cstar},
      {"orbit", suite_orbit},
      {"semiclassical", suite_semiclassical},
  };
  return r;
}

}  // namespace

SkewForm SuiteConfig::sigma() const {
  if (sigma0) return *sigma0;
  return standard_skew(spacetime);
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Json SuiteReport::to_json() const {
  Json cs = Json::array();
  for (const auto& c : checks) {
    Json j{{"name", c.name}, {"measured", c.measured}, {"relation", relation_name(c.relation)},
           {"passed", c.passed}};
    if (c.relation == Relation::Within) {
      j["lo"] = c.lo;
      j["hi"] = c.hi;
    } else {
      j["bound"] = c.bound;
    }
    cs.push_back(std::move(j));
  }
  return Json{{"suite", suite}, {"passed", passed()}, {"checks", cs}, {"parameters", parameters}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, _] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) return fn(config);
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<SuiteReport> run_suites(const std::string& name, const SuiteConfig& config) {
  if (name == "all") {
    std::vector<SuiteReport> out;
    for (const auto& n : suite_names()) out.push_back(run_suite(n, config));
    return out;
  }
  return {run_suite(name, config)};
}

Json combined_report(const std::vector<SuiteReport>& reports) {
  Json suites = Json::array();
  bool ok = true;
  for (const auto& r : reports) {
    suites.push_back(r.to_json());
    ok = ok && r.passed();
  }
  return Json{{"passed", ok}, {"suites", suites}};
}

}  // namespace moyal::verify

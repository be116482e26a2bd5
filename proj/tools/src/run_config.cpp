#include "run_config.hpp"

#include "moyal/errors.hpp"

namespace moyal::cli {

namespace {

Spacetime spacetime_from_json(const Json& j) {
  reject_unknown(j, {"dim", "metric"}, "spacetime");
  try {
    if (!j.contains("metric")) return Spacetime::minkowski(j.value("dim", 4));
    const auto metric = j.at("metric").get<std::vector<int>>();
    if (j.contains("dim") && j.at("dim").get<int>() != static_cast<int>(metric.size())) {
      throw FormatError("spacetime: dim disagrees with metric length");
    }
    return Spacetime(static_cast<int>(metric.size()), metric);
  } catch (const InvariantError& e) {
    throw FormatError(std::string("spacetime: ") + e.what());
  }
}

}  // namespace

verify::SuiteConfig RunConfig::suite_config() const {
  verify::SuiteConfig c;
  c.spacetime = spacetime;
  c.sigma0 = sigma0;
  c.grid = grid;
  c.seed = seed;
  c.tolerances = tolerances;
  c.workers = workers;
  return c;
}

SkewForm RunConfig::sigma_for(int dim) const {
  if (sigma0 && sigma0->dim() == dim) return *sigma0;
  return standard_skew(dim);
}

double RunConfig::tolerance(const std::string& name, double fallback) const {
  const auto it = tolerances.find(name);
  return it == tolerances.end() ? fallback : it->second;
}

RunConfig parse_run_config(const Json& j) {
  reject_unknown(j, {"spacetime", "sigma0", "grid", "seed", "tolerances", "output", "workers"}, "config");
  RunConfig c;
  try {
    if (j.contains("spacetime")) c.spacetime = spacetime_from_json(j.at("spacetime"));
    if (j.contains("sigma0")) {
      c.sigma0 = skew_from_json(j.at("sigma0"));
      if (c.sigma0->dim() != c.spacetime.dim()) throw FormatError("sigma0: dimension differs from spacetime");
    }
    if (j.contains("grid")) c.grid = grid_spec_from_json(j.at("grid"));
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("tolerances")) {
      const Json& t = j.at("tolerances");
      if (!t.is_object()) throw FormatError("tolerances must be an object");
      for (const auto& [name, value] : t.items()) {
        if (!value.is_number()) throw FormatError("tolerance '" + name + "' must be a number");
        c.tolerances[name] = value.get<double>();
      }
    }
    if (j.contains("output")) c.output = j.at("output").get<std::string>();
    if (j.contains("workers")) c.workers = j.at("workers").get<unsigned>();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("config: ") + e.what());
  }
  return c;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  Json j;
  try {
    j = Json::parse(read_text(path));
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  return parse_run_config(j);
}

Json to_json(const RunConfig& c) {
  Json j{{"spacetime", Json{{"dim", c.spacetime.dim()}, {"metric", c.spacetime.metric()}}},
         {"grid", to_json(c.grid)},
         {"seed", c.seed},
         {"tolerances", c.tolerances},
         {"output", c.output.string()},
         {"workers", c.workers}};
  if (c.sigma0) j["sigma0"] = to_json(*c.sigma0);
  return j;
}

}  // namespace moyal::cli

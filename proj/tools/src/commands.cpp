#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>

#include "moyal/errors.hpp"
#include "moyal/semiclassical.hpp"
#include "moyal/star.hpp"

namespace moyal::cli {

namespace fs = std::filesystem;

namespace {

Vec vec_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw FormatError(std::string(what) + " must hold numbers");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

fs::path prepare_output(const RunConfig& config) {
  fs::create_directories(config.output);
  return config.output;
}

// %.17g round-trips every double, so the CSV is as deterministic as the data
std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Operand {
  std::optional<GridFile> grid;
  std::optional<oracle::GaussianPacket> packet;
};

Operand load_operand(const fs::path& path) {
  if (path.extension() == ".json") {
    Json j;
    try {
      j = Json::parse(read_text(path));
    } catch (const Json::parse_error& e) {
      throw FormatError(path.string() + ": " + e.what());
    }
    return {std::nullopt, packet_from_json(j)};
  }
  return {read_grid(path), std::nullopt};
}

GridFunction realize(const Operand& op, const GridSpec& spec) {
  if (op.grid) return op.grid->values;
  if (op.packet->dim() != spec.dim) throw FormatError("Gaussian descriptor dimension differs from the grid");
  return verify::sample_packet(spec, *op.packet);
}

void write_timing(const fs::path& dir, const std::string& command, double seconds) {
  write_text(dir / "timing.json", dump_json(Json{{"command", command}, {"seconds", seconds}}));
}

}  // namespace

oracle::GaussianPacket packet_from_json(const Json& j) {
  reject_unknown(j, {"center", "width", "precision", "freq", "amp"}, "gaussian");
  if (!j.contains("center")) throw FormatError("gaussian: missing center");
  if (j.contains("width") && j.contains("precision")) throw FormatError("gaussian: give width or precision, not both");
  const Vec center = vec_from_json(j.at("center"), "gaussian.center");
  oracle::GaussianPacket g;
  try {
    g = oracle::GaussianPacket::isotropic(center, j.contains("width") ? j.at("width").get<double>() : 1.0);
    if (j.contains("precision")) g.precision = matrix_from_json(j.at("precision"));
    if (j.contains("freq")) g.freq = vec_from_json(j.at("freq"), "gaussian.freq");
    if (j.contains("amp")) {
      const Vec a = vec_from_json(j.at("amp"), "gaussian.amp");
      if (a.size() != 2) throw FormatError("gaussian.amp must be [re, im]");
      g.amp = Complex{a(0), a(1)};
    }
    g.validate();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("gaussian: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("gaussian: ") + e.what());
  }
  return g;
}

int cmd_orbit(const RunConfig& config, int n) {
  if (n < 1) throw std::invalid_argument("orbit: n must be positive");
  const SkewForm sigma0 = config.sigma_for(config.spacetime.dim());
  const auto orbit = sample_orbit(config.spacetime, sigma0, n, config.seed);
  const auto inv0 = orbit_invariants(sigma0, config.spacetime);

  Json records = Json::array();
  double drift = 0.0;
  for (const auto& point : orbit) {
    const auto inv = orbit_invariants(point.form, config.spacetime);
    for (std::size_t k = 0; k < inv.size(); ++k) {
      drift = std::max(drift, std::abs(inv[k] - inv0[k]) / std::max(1.0, std::abs(inv0[k])));
    }
    records.push_back(Json{{"transform", to_json(point.transform)}, {"form", to_json(point.form)}, {"invariants", inv}});
  }
  const double bound = config.tolerance("invariant_drift", 1e-9);
  const bool passed = drift <= bound;
  const Json doc{{"spacetime", Json{{"dim", config.spacetime.dim()}, {"metric", config.spacetime.metric()}}},
                 {"sigma0", to_json(sigma0)},
                 {"seed", config.seed},
                 {"reference_invariants", inv0},
                 {"invariant_drift", drift},
                 {"invariant_drift_bound", bound},
                 {"passed", passed},
                 {"records", records}};
  write_text(prepare_output(config) / "orbit.json", dump_json(doc));
  return passed ? kExitPass : kExitCheckFailed;
}

int cmd_star(const RunConfig& config, const fs::path& f_path, const fs::path& g_path, bool use_oracle) {
  const auto start = std::chrono::steady_clock::now();
  const Operand fo = load_operand(f_path);
  const Operand go = load_operand(g_path);

  // a grid file fixes the lattice; two grid files must agree on it
  GridSpec spec = config.grid;
  if (fo.grid && go.grid && !(fo.grid->values.spec() == go.grid->values.spec())) {
    throw FormatError("star: grid headers differ");
  }
  if (fo.grid) {
    spec = fo.grid->values.spec();
  } else if (go.grid) {
    spec = go.grid->values.spec();
  } else {
    spec.dim = fo.packet->dim();
  }
  spec.validate();

  std::optional<SkewForm> sigma;
  for (const Operand* op : {&fo, &go}) {
    if (!op->grid || !op->grid->sigma) continue;
    if (sigma && !(sigma->matrix() == op->grid->sigma->matrix())) throw FormatError("star: sidecar sigmas differ");
    sigma = op->grid->sigma;
  }
  if (!sigma) sigma = config.sigma_for(spec.dim);

  const GridFunction f = realize(fo, spec);
  const GridFunction g = realize(go, spec);
  const Parallelism par{config.workers};
  const GridFunction fg = star_product(f, g, *sigma, par);

  Json summary{{"grid", to_json(spec)},
               {"sigma", to_json(*sigma)},
               {"l2_norm", norm_l2(fg)},
               {"max_abs", max_abs(fg)},
               {"pointwise_defect", relative_l2(fg, pointwise(f, g))}};
  bool passed = true;
  if (use_oracle) {
    if (!fo.packet || !go.packet) throw std::invalid_argument("star: --oracle needs two Gaussian descriptors");
    const double defect = verify::oracle_defect(*fo.packet, *go.packet, fg, *sigma, par);
    const double bound = config.tolerance("oracle_relative_l2", 1e-6);
    passed = defect <= bound;
    summary["oracle_defect"] = defect;
    summary["oracle_bound"] = bound;
  }
  summary["passed"] = passed;

  const fs::path dir = prepare_output(config);
  write_grid(dir / "star.moya", fg, *sigma);
  write_text(dir / "star.json", dump_json(summary));
  write_timing(dir, "star", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  return passed ? kExitPass : kExitCheckFailed;
}

int cmd_verify(const RunConfig& config, const std::string& suite) {
  const auto reports = verify::run_suites(suite, config.suite_config());
  const Json doc = verify::combined_report(reports);
  write_text(prepare_output(config) / ("verify_" + suite + ".json"), dump_json(doc));
  for (const auto& r : reports) std::printf("%s %s\n", r.passed() ? "PASS" : "FAIL", r.suite.c_str());
  return doc.at("passed").get<bool>() ? kExitPass : kExitCheckFailed;
}

int cmd_sweep(const RunConfig& config, const std::vector<double>& thetas) {
  GridSpec spec = config.grid;
  spec.dim = 2;
  spec.validate();
  const auto [f, g] = verify::semiclassical_pair(spec);
  const SweepResult sweep = semiclassical_sweep(f, g, config.sigma_for(2), thetas);

  std::string csv = "theta,d1,d2,slope_d1,slope_d2\n";
  for (const auto& row : sweep.rows) {
    csv += format_double(row.theta) + "," + format_double(row.d1) + "," + format_double(row.d2) + "," +
           format_double(sweep.slope_d1) + "," + format_double(sweep.slope_d2) + "\n";
  }
  write_text(prepare_output(config) / "sweep.csv", csv);
  return kExitPass;
}

int cmd_sample(const RunConfig& config, const fs::path& descriptor, const std::string& name) {
  const Operand op = load_operand(descriptor);
  if (!op.packet) throw FormatError("sample: expected a Gaussian descriptor (.json)");
  GridSpec spec = config.grid;
  spec.dim = op.packet->dim();
  spec.validate();
  const GridFunction values = realize(op, spec);
  write_grid(prepare_output(config) / (name + ".moya"), values);
  return kExitPass;
}

}  // namespace moyal::cli

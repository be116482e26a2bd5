#include "fixtures.hpp"

#include <cmath>
#include <numbers>

#include "moyal/weyl_algebra.hpp"

namespace moyal::verify {

ReportBuilder::ReportBuilder(std::string suite, const SuiteConfig& config) : config_(config) {
  report_.suite = std::move(suite);
}

double ReportBuilder::override_or(const std::string& key, double fallback) const {
  const auto it = config_.tolerances.find(key);
  return it == config_.tolerances.end() ? fallback : it->second;
}

void ReportBuilder::at_most(const std::string& name, double measured, double bound) {
  Check c{name, measured, Relation::AtMost, override_or(name, bound), 0.0, 0.0, false};
  c.passed = measured <= c.bound;
  report_.checks.push_back(c);
}

void ReportBuilder::at_least(const std::string& name, double measured, double bound) {
  Check c{name, measured, Relation::AtLeast, override_or(name, bound), 0.0, 0.0, false};
  c.passed = measured >= c.bound;
  report_.checks.push_back(c);
}

void ReportBuilder::within(const std::string& name, double measured, double lo, double hi) {
  Check c{name, measured, Relation::Within, 0.0, override_or(name + ".lo", lo), override_or(name + ".hi", hi),
          false};
  c.passed = measured >= c.lo && measured <= c.hi;
  report_.checks.push_back(c);
}

GridFunction flat_top_window(const GridSpec& spec, double radius, double softness) {
  return GridFunction::sample(spec, [&](std::span<const double> x) {
    double w = 1.0;
    for (double c : x) w *= 0.5 * (std::erf((c + radius) / softness) - std::erf((c - radius) / softness));
    return Complex{w, 0.0};
  });
}

GridFunction sample_packet(const GridSpec& spec, const oracle::GaussianPacket& g) {
  return GridFunction::sample(spec, [&](std::span<const double> x) {
    return g.value(Eigen::Map<const Vec>(x.data(), static_cast<Eigen::Index>(x.size())));
  });
}

oracle::GaussianPacket random_packet(Rng& rng, int dim) {
  oracle::GaussianPacket g;
  g.center = random_vec(rng, dim, -0.5, 0.5);
  g.freq = random_vec(rng, dim, -0.5, 0.5);
  Mat rot = Mat::Identity(dim, dim);
  if (dim == 2) {
    const double a = rng.uniform(0.0, std::numbers::pi);
    rot << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  }
  Vec lambda(dim);
  for (int i = 0; i < dim; ++i) lambda(i) = rng.uniform(0.6, 1.6);
  Mat a = rot * lambda.asDiagonal() * rot.transpose();
  g.precision = 0.5 * (a + a.transpose());
  g.amp = unit_phase(rng.uniform());
  return g;
}

GridFunction random_trig_1d(Rng& rng, int n, double length, int kmax) {
  std::vector<Complex> c;
  for (int k = -kmax; k <= kmax; ++k) c.emplace_back(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  GridSpec spec{1, n, length, 1.0};
  return GridFunction::sample(spec, [&](std::span<const double> r) {
    Complex v{};
    for (int k = -kmax; k <= kmax; ++k) v += c[static_cast<std::size_t>(k + kmax)] * unit_phase(k * r[0] / length);
    return v;
  });
}

GridFunction random_trig(Rng& rng, const GridSpec& spec, int kmax, int modes) {
  std::vector<std::vector<int>> ks;
  std::vector<Complex> cs;
  for (int m = 0; m < modes; ++m) {
    std::vector<int> k(static_cast<std::size_t>(spec.dim));
    for (auto& v : k) v = rng.integer(-kmax, kmax);
    ks.push_back(std::move(k));
    cs.emplace_back(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  }
  return GridFunction::sample(spec, [&](std::span<const double> x) {
    Complex v{};
    for (std::size_t m = 0; m < ks.size(); ++m) {
      double t = 0.0;
      for (std::size_t a = 0; a < x.size(); ++a) t += ks[m][a] * x[a] / spec.length;
      v += cs[m] * unit_phase(t);
    }
    return v;
  });
}

Vec random_vec(Rng& rng, int dim, double lo, double hi) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v(i) = rng.uniform(lo, hi);
  return v;
}

Covector random_unit_covector(Rng& rng, int dim) {
  Vec v = Vec::Zero(dim);
  while (v.cwiseAbs().maxCoeff() == 0.0) {
    for (int i = 0; i < dim; ++i) v(i) = rng.integer(-1, 1);
  }
  return Covector(v);
}

Json vec_json(const Vec& v) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v(i));
  return j;
}

}  // namespace moyal::verify

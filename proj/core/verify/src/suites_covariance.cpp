// Pointwise-product theorem and the tau / gamma / rho equivariance identities.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "moyal/covariance.hpp"
#include "suites.hpp"

namespace moyal::verify {

namespace {

GroupSample random_sample(const Spacetime& st, Rng& rng, std::size_t n) {
  std::vector<LorentzTransform> ts;
  for (std::size_t i = 0; i < n; ++i) ts.push_back(random_lorentz(st, rng));
  return GroupSample(std::move(ts));
}

GridFunction gaussian_1d(int n, double length, double center, double width) {
  return GridFunction::sample(GridSpec{1, n, length, 1.0}, [&](std::span<const double> r) {
    const double t = (r[0] - center) / width;
    return Complex{std::exp(-std::numbers::pi * t * t), 0.0};
  });
}

}  // namespace

SuiteReport suite_pointwise(const SuiteConfig& config) {
  ReportBuilder out("pointwise", config);
  GridSpec spec = config.grid;
  spec.dim = 2;
  spec.validate();
  const Spacetime st = Spacetime::minkowski(2);
  const SkewForm sigma0 = standard_skew(st);
  Rng rng(config.seed + 6);
  const GroupSample e = random_sample(st, rng, 5);

  const auto psi1 = RealLineFunction::constant_in_T(e, gaussian_1d(spec.n, spec.length, 0.0, 1.0));
  const auto psi2 = RealLineFunction::constant_in_T(e, gaussian_1d(spec.n, spec.length, 0.3, 1.2));

  // integer covectors keep q -> psi(a(q)) periodic on the box
  const std::vector<Covector> alphas{Covector{1.0, 1.0}, Covector{1.0, 0.0}};
  double worst = 0.0;
  Json per_fiber = Json::array();
  for (const auto& a : alphas) {
    const auto d = pointwise_defect(a, psi1, a, psi2, sigma0, spec);
    worst = std::max(worst, *std::max_element(d.begin(), d.end()));
    per_fiber.push_back(d);
  }
  out.at_most("pointwise_theorem", worst, 1e-6);

  const auto unit = RealLineFunction::constant_in_T(e, GridFunction::sample(GridSpec{1, spec.n, spec.length, 1.0},
                                                                            [](std::span<const double>) {
                                                                              return Complex{1.0, 0.0};
                                                                            }));
  out.at_most("pointwise_unit", check_pointwise_theorem(alphas[0], psi1, unit, sigma0, spec), 1e-6);

  // mismatched covectors: Q_ab != 0 and the product deforms
  const auto neg = pointwise_defect(Covector{1.0, 1.0}, psi1, Covector{1.0, -1.0}, psi2, sigma0, spec);
  out.at_least("negative_control", *std::min_element(neg.begin(), neg.end()), 1e-2);

  out.parameters() = Json{{"grid", to_json(spec)}, {"fibers", e.size()}, {"per_fiber", per_fiber},
                          {"negative_control", neg}, {"seed", config.seed}};
  return out.finish();
}

SuiteReport suite_equivariance(const SuiteConfig& config) {
  ReportBuilder out("equivariance", config);
  const Spacetime& st = config.spacetime;
  const int d = st.dim();
  // band-limited trigonometric data make every shift exact on the lattice
  const GridSpec spec{d, 8, 8.0, 1.0};
  const SkewForm sigma0 = config.sigma();
  Rng rng(config.seed + 7);

  double phi = 0.0;
  for (int draw = 0; draw < 100; ++draw) {
    const GroupSample e = random_sample(st, rng, 2);
    std::vector<GridFunction> fibers;
    for (std::size_t i = 0; i < e.size(); ++i) fibers.push_back(random_trig_1d(rng, spec.n, spec.length, 2));
    const RealLineFunction psi(e, std::move(fibers));
    const Covector alpha = random_unit_covector(rng, d);
    const Vector x(random_vec(rng, d, -1.0, 1.0));
    phi = std::max(phi, check_phi_equivariance(alpha, x, psi, spec));
  }
  out.at_most("phi_equivariance", phi, 1e-9);

  const auto stab = sample_stabilizer(st, sigma0, 100, config.seed + 8);
  double gamma = 0.0;
  for (int draw = 0; draw < 100; ++draw) {
    const GroupSample e = random_sample(st, rng, 2);
    std::vector<GridFunction> fibers;
    for (std::size_t i = 0; i < e.size(); ++i) fibers.push_back(random_trig(rng, spec, 2, 6));
    const FiberedFunction f(e, std::move(fibers));
    const Vector x(random_vec(rng, d, -1.0, 1.0));
    gamma = std::max(gamma, check_gamma_covariance(stab[static_cast<std::size_t>(draw)], x, f));
  }
  out.at_most("gamma_covariance", gamma, 1e-9);

  out.parameters() = Json{{"grid", to_json(spec)}, {"draws", 100}, {"seed", config.seed}};
  return out.finish();
}

}  // namespace moyal::verify

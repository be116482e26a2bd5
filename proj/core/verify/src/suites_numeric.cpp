// FFT star product against the Weyl action, the quadrature oracle, the
// coordinate commutator, the left-regular representation and the theta -> 0
// sweep. All on d = 2 grids.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "fixtures.hpp"
#include "moyal/errors.hpp"
#include "moyal/representation.hpp"
#include "moyal/semiclassical.hpp"
#include "moyal/star.hpp"
#include "moyal/weyl_algebra.hpp"
#include "suites.hpp"

namespace moyal::verify {

namespace {

GridSpec planar(const SuiteConfig& config) {
  GridSpec spec = config.grid;
  spec.dim = 2;
  spec.validate();
  return spec;
}

// Flat-top window scaled with the box: plateau to 3L/8, edge 0.35 L/8.
GridFunction box_window(const GridSpec& spec) {
  return flat_top_window(spec, 0.375 * spec.length, 0.04375 * spec.length);
}

}  // namespace

double oracle_defect(const oracle::GaussianPacket& f, const oracle::GaussianPacket& g, const GridFunction& fg,
                     const SkewForm& sigma, Parallelism par) {
  const GridSpec& spec = fg.spec();
  if (f.dim() != spec.dim || g.dim() != spec.dim) throw DimensionError("oracle_defect: packet dimension");
  // sub-lattice of the central region, where the packets and their product
  // carry their mass
  const int stride = std::max(1, spec.n / 16);
  const double reach = 0.375 * spec.length;
  std::vector<std::size_t> index;
  for (std::size_t k = 0; k < spec.size(); ++k) {
    bool keep = true;
    std::size_t rest = k;
    for (int axis = 0; axis < spec.dim; ++axis) {
      const int j = static_cast<int>(rest % static_cast<std::size_t>(spec.n));
      rest /= static_cast<std::size_t>(spec.n);
      keep = keep && j % stride == 0 && std::abs(spec.coordinate(j)) <= reach;
    }
    if (keep) index.push_back(k);
  }

  // points are independent; the sum below runs in a fixed order
  std::vector<Complex> ref(index.size());
  {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < par.resolve(index.size()); ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < index.size(); k = next++) {
          const std::vector<double> q = spec.point(index[k]);
          ref[k] = oracle::star_at(f, g, sigma.matrix(), spec.theta,
                                   Eigen::Map<const Vec>(q.data(), static_cast<Eigen::Index>(q.size())));
        }
      });
    }
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < index.size(); ++k) {
    num += std::norm(fg[index[k]] - ref[k]);
    den += std::norm(ref[k]);
  }
  return std::sqrt(num / den);
}

SuiteReport suite_bridge(const SuiteConfig& config) {
  ReportBuilder out("bridge", config);
  const GridSpec spec = planar(config);
  const SkewForm sigma = standard_skew(2);
  const Parallelism par{config.workers};
  const GridFunction w = box_window(spec);
  const double interior = spec.length / 4.0;

  const std::vector<Vec> alphas = {(Vec(2) << 1.0, 0.0).finished(), (Vec(2) << 0.5, -0.75).finished(),
                                   (Vec(2) << -0.625, 0.375).finished()};
  double worst = 0.0;
  Json cases = Json::array();
  for (const Vec& a : alphas) {
    const Covector alpha(a);
    // e(alpha.q) w(q), phase taken from the coordinate sampler
    GridFunction wave(spec);
    const GridFunction lin = coordinate_function(spec, alpha);
    for (std::size_t i = 0; i < wave.size(); ++i) wave[i] = unit_phase(lin[i].real()) * w[i];
    // the Gaussian sits at theta sigma alpha so the shifted output is centered
    const Vec c = spec.theta * sigma.matrix() * a;
    const GridFunction g = sample_packet(spec, oracle::GaussianPacket::isotropic(c, 1.0));
    const GridFunction lhs = star_product(wave, g, sigma, par);
    const GridFunction rhs = pointwise(weyl_action(alpha, g, sigma), w);
    const double err = relative_l2_ball(lhs, rhs, interior);
    worst = std::max(worst, err);
    cases.push_back(Json{{"alpha", vec_json(a)}, {"relative_l2", err}});
  }
  out.at_most("lemma_bridge", worst, 1e-3);
  out.parameters() = Json{{"grid", to_json(spec)}, {"interior_radius", interior}, {"cases", cases}};
  return out.finish();
}

SuiteReport suite_oracle(const SuiteConfig& config) {
  ReportBuilder out("oracle", config);
  const GridSpec spec = planar(config);
  const SkewForm sigma = standard_skew(2);
  const Parallelism par{config.workers};
  Rng rng(config.seed + 4);

  double worst = 0.0;
  double degenerate = 0.0;
  for (int pair = 0; pair < 20; ++pair) {
    const auto pf = random_packet(rng, 2);
    const auto pg = random_packet(rng, 2);
    const GridFunction f = sample_packet(spec, pf);
    const GridFunction g = sample_packet(spec, pg);
    const GridFunction fg = star_product(f, g, sigma, par);

    worst = std::max(worst, oracle_defect(pf, pg, fg, sigma, par));

    const GridFunction flat = star_product(f, g, SkewForm::zero(2), par);
    degenerate = std::max(degenerate, relative_l2(flat, pointwise(f, g)));
  }
  out.at_most("oracle_relative_l2", worst, 1e-6);
  out.at_most("sigma_zero_pointwise", degenerate, 1e-10);
  out.parameters() = Json{{"grid", to_json(spec)}, {"pairs", 20}, {"seed", config.seed}};
  return out.finish();
}

SuiteReport suite_commutator(const SuiteConfig& config) {
  ReportBuilder out("commutator", config);
  const GridSpec spec = planar(config);
  const Parallelism par{config.workers};
  const GridFunction w = box_window(spec);
  const GridFunction w2 = pointwise(w, w);
  const double interior = spec.length / 4.0;
  Rng rng(config.seed + 5);

  // [alpha(q) w, beta(q) w]_* -> (theta / (pi i)) Q_ab w^2 in the interior
  double worst = 0.0;
  Json cases = Json::array();
  for (int trial = 0; trial < 10; ++trial) {
    const Covector a(random_vec(rng, 2, -1.0, 1.0));
    const Covector b(random_vec(rng, 2, -1.0, 1.0));
    const double scale = (rng.below(2) == 0 ? 1.0 : -1.0) * rng.uniform(0.5, 1.0);
    const SkewForm sigma = standard_skew(2).scaled(scale);
    const GridFunction f = pointwise(coordinate_function(spec, a), w);
    const GridFunction g = pointwise(coordinate_function(spec, b), w);
    const GridFunction comm = star_commutator(f, g, sigma, par);
    const double q = q_form(sigma, a, b);
    const Complex constant = spec.theta * q / Complex{0.0, std::numbers::pi};
    const double err = relative_l2_ball(comm, w2 * constant, interior);
    worst = std::max(worst, err);
    cases.push_back(Json{{"q_form", q}, {"relative_l2", err}});
  }
  out.at_most("commutator_constant", worst, 1e-3);
  out.parameters() = Json{{"grid", to_json(spec)}, {"interior_radius", interior}, {"cases", cases},
                          {"seed", config.seed}};
  return out.finish();
}

SuiteReport suite_cstar(const SuiteConfig& config) {
  ReportBuilder out("cstar", config);
  // N = 32 on the box where theta N / L^2 = 1: the finite Weyl system closes
  GridSpec spec = planar(config);
  spec.n = 32;
  spec.length = std::sqrt(spec.theta * spec.n);
  const SkewForm sigma = standard_skew(2);

  const GridFunction f = GridFunction::sample(spec, [](std::span<const double> x) {
    return std::exp(-std::numbers::pi * ((x[0] - 0.3) * (x[0] - 0.3) + x[1] * x[1])) * unit_phase(0.2 * x[0]);
  });
  const GridFunction g = GridFunction::sample(spec, [](std::span<const double> x) {
    return Complex{std::exp(-std::numbers::pi * (x[0] * x[0] / 1.5 + (x[1] + 0.2) * (x[1] + 0.2))), 0.0};
  });
  const auto defects = representation_defects(f, g, sigma);
  out.at_most("homomorphism", defects.homomorphism, 1e-3);
  out.at_most("adjoint", defects.adjoint, 1e-6);

  const GridFunction centered = sample_packet(spec, oracle::GaussianPacket::isotropic(Vec::Zero(2), 1.0));
  const auto gauss = cstar_identity_check(centered, sigma);
  out.at_most("cstar_identity_gaussian", gauss.defect, 0.05);
  out.at_least("positivity_gaussian", gauss.min_eigenvalue / (gauss.norm_f * gauss.norm_f), -1e-6);

  const auto window = cstar_identity_check(box_window(spec), sigma);
  out.at_most("cstar_identity_window", window.defect, 0.05);
  out.at_least("positivity_window", window.min_eigenvalue / (window.norm_f * window.norm_f), -1e-6);

  out.parameters() = Json{{"grid", to_json(spec)},
                          {"norm_L_f_gaussian", gauss.norm_f},
                          {"norm_L_ff_gaussian", gauss.norm_ff},
                          {"norm_L_f_window", window.norm_f}};
  return out.finish();
}

std::pair<GridFunction, GridFunction> semiclassical_pair(const GridSpec& spec) {
  if (spec.dim != 2) throw DimensionError("semiclassical_pair: d = 2 only");
  const GridFunction f = GridFunction::sample(spec, [](std::span<const double> x) {
    return Complex{std::exp(-std::numbers::pi * ((x[0] - 0.3) * (x[0] - 0.3) + x[1] * x[1]) / 2.0), 0.0};
  });
  const GridFunction g = GridFunction::sample(spec, [](std::span<const double> x) {
    return Complex{
        std::exp(-std::numbers::pi * ((x[0] + 0.2) * (x[0] + 0.2) / 1.3 + (x[1] - 0.25) * (x[1] - 0.25)) / 2.0), 0.0};
  });
  return {f, g};
}

SuiteReport suite_semiclassical(const SuiteConfig& config) {
  ReportBuilder out("semiclassical", config);
  const GridSpec spec = planar(config);
  const SkewForm sigma = standard_skew(2);
  const auto [f, g] = semiclassical_pair(spec);
  const std::vector<double> thetas{1.0, 0.5, 0.25, 0.125, 0.0625};
  const SweepResult sweep = semiclassical_sweep(f, g, sigma, thetas);
  out.within("slope_d1", sweep.slope_d1, 0.9, 1.1);
  out.within("slope_d2", sweep.slope_d2, 1.8, 2.2);
  double rises = 0.0;
  for (std::size_t i = 1; i < sweep.rows.size(); ++i) {
    rises = std::max(rises, sweep.rows[i].d2 - sweep.rows[i - 1].d2);
  }
  // largest step up of D2 along decreasing theta; monotone means <= 0
  out.at_most("d2_monotone", rises, 0.0);

  Json rows = Json::array();
  for (const auto& r : sweep.rows) rows.push_back(Json{{"theta", r.theta}, {"d1", r.d1}, {"d2", r.d2}});
  out.parameters() = Json{{"grid", to_json(spec)}, {"rows", rows}};
  return out.finish();
}

}  // namespace moyal::verify

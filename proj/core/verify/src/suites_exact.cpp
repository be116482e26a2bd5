// Exact twisted-group-algebra checks and orbit geometry.

#include <algorithm>
#include <cmath>
#include <limits>

#include "fixtures.hpp"
#include "moyal/star.hpp"
#include "moyal/weyl_algebra.hpp"
#include "suites.hpp"

namespace moyal::verify {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

WeylElement random_element(Rng& rng, const SkewForm& sigma, int terms) {
  WeylElement a(sigma);
  for (int t = 0; t < terms; ++t) {
    const Covector alpha(random_vec(rng, sigma.dim(), -1.0, 1.0));
    a.add_term(CovectorKey::from(alpha), Complex{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
  }
  return a;
}

double distance(const WeylElement& a, const WeylElement& b) { return (a - b).max_abs(); }

}  // namespace

SuiteReport suite_weyl(const SuiteConfig& config) {
  ReportBuilder out("weyl", config);
  const Spacetime& st = config.spacetime;
  const int d = st.dim();
  const SkewForm sigma0 = config.sigma();
  const auto orbit = sample_orbit(st, sigma0, 100, config.seed);
  Rng rng(config.seed + 1);

  // u_a u_b against e(Q_ab) u_{a+b}, Q from the floating-point geometry path
  double phase_err = 0.0;
  double gen_assoc = 0.0;
  double group_comm = 0.0;
  double unitarity = 0.0;
  for (const auto& point : orbit) {
    const SkewForm& sigma = point.form;
    const auto ka = CovectorKey::from(Covector(random_vec(rng, d, -1.0, 1.0)));
    const auto kb = CovectorKey::from(Covector(random_vec(rng, d, -1.0, 1.0)));
    const auto kc = CovectorKey::from(Covector(random_vec(rng, d, -1.0, 1.0)));
    const WeylElement ua = unit_u(ka, sigma);
    const WeylElement ub = unit_u(kb, sigma);
    const WeylElement uc = unit_u(kc, sigma);
    const WeylElement prod = ua * ub;
    const Complex expected = unit_phase(q_form(sigma, ka.covector(), kb.covector()));
    if (prod.size() != 1 || prod.terms().begin()->first != ka + kb) {
      phase_err = kInf;
    } else {
      phase_err = std::max(phase_err, std::abs(prod.terms().begin()->second - expected));
    }
    gen_assoc = std::max(gen_assoc, distance((ua * ub) * uc, ua * (ub * uc)));
    const WeylElement comm = ua * ub * star(ua) * star(ub);
    const Complex cp = commutator_phase(ka.covector(), kb.covector(), sigma).value;
    group_comm = std::max(group_comm, std::abs(comm.coefficient(CovectorKey::from(Covector(Vec::Zero(d)))) - cp));
    unitarity = std::max(unitarity, distance(ua * star(ua), WeylElement::unit(sigma)));
  }
  out.at_most("phase_error", phase_err, 1e-12);
  out.at_most("associativity_generators", gen_assoc, 1e-12);
  out.at_most("group_commutator_phase", group_comm, 1e-12);
  out.at_most("unitarity", unitarity, 0.0);

  double elem_assoc = 0.0;
  double anti_hom = 0.0;
  double centrality = 0.0;
  double line_comm = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const SkewForm& sigma = orbit[static_cast<std::size_t>(trial)].form;
    const WeylElement a = random_element(rng, sigma, 5);
    const WeylElement b = random_element(rng, sigma, 5);
    const WeylElement c = random_element(rng, sigma, 5);
    const double scale = std::max(1.0, (a * b * c).max_abs());
    elem_assoc = std::max(elem_assoc, distance((a * b) * c, a * (b * c)) / scale);
    anti_hom = std::max(anti_hom, distance(star(a * b), star(b) * star(a)));

    WeylElement central(sigma);
    central.add_term(CovectorKey::from(Covector(Vec::Zero(d))), Complex{rng.uniform(), rng.uniform()});
    centrality = std::max(centrality, distance(central * a, a * central));

    // keys on one line through the origin
    const auto dir = CovectorKey::from(Covector(random_vec(rng, d, -0.25, 0.25)));
    WeylElement p(sigma);
    WeylElement q(sigma);
    CovectorKey k = dir;
    for (int m = 1; m <= 4; ++m, k = k + dir) {
      p.add_term(k, Complex{rng.uniform(), rng.uniform()});
      q.add_term(-k, Complex{rng.uniform(), rng.uniform()});
    }
    line_comm = std::max(line_comm, distance(p * q, q * p));
  }
  out.at_most("associativity_elements", elem_assoc, 1e-12);
  out.at_most("anti_homomorphism", anti_hom, 1e-12);
  out.at_most("centrality", centrality, 0.0);
  out.at_most("commuting_line", line_comm, 0.0);

  // Weyl action on functions composes with the same phases (d = 2 grid)
  GridSpec spec = config.grid;
  spec.dim = 2;
  const SkewForm sigma2 = standard_skew(2);
  const GridFunction f = sample_packet(spec, oracle::GaussianPacket::isotropic(Vec::Zero(2), 1.2));
  double action = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    // dual-lattice covectors keep every modulation periodic on the box
    auto lattice = [&] {
      Vec v(2);
      for (int i = 0; i < 2; ++i) v(i) = rng.integer(-4, 4) / spec.length;
      return Covector(v);
    };
    const Covector a = lattice();
    const Covector b = lattice();
    const GridFunction lhs = weyl_action(a, weyl_action(b, f, sigma2), sigma2);
    const GridFunction rhs = weyl_action(Covector(a.coords + b.coords), f, sigma2) *
                             unit_phase(spec.theta * q_form(sigma2, a, b));
    action = std::max(action, max_abs(lhs - rhs) / max_abs(f));
  }
  out.at_most("weyl_action_composition", action, 1e-9);

  out.parameters() = Json{{"dim", d}, {"orbit_points", orbit.size()}, {"seed", config.seed}};
  return out.finish();
}

SuiteReport suite_orbit(const SuiteConfig& config) {
  ReportBuilder out("orbit", config);
  const Spacetime& st = config.spacetime;
  const int d = st.dim();
  const SkewForm sigma0 = config.sigma();
  const auto orbit = sample_orbit(st, sigma0, 1000, config.seed);
  const auto inv0 = orbit_invariants(sigma0, st);
  Rng rng(config.seed + 2);

  double inv_drift = 0.0;
  double metric = 0.0;
  double q_cov = 0.0;
  double largest_entry = 0.0;
  for (const auto& point : orbit) {
    const auto inv = orbit_invariants(point.form, st);
    for (std::size_t k = 0; k < inv.size(); ++k) {
      inv_drift = std::max(inv_drift, std::abs(inv[k] - inv0[k]) / std::max(1.0, std::abs(inv0[k])));
    }
    metric = std::max(metric, point.transform.metric_defect());
    const Covector a(random_vec(rng, d, -1.0, 1.0));
    const Covector b(random_vec(rng, d, -1.0, 1.0));
    q_cov = std::max(q_cov, std::abs(q_form(point.form, a, b) -
                                     q_form(sigma0, point.transform.pullback(a), point.transform.pullback(b))));
    largest_entry = std::max(largest_entry, point.form.matrix().cwiseAbs().maxCoeff());
  }
  out.at_most("invariant_drift", inv_drift, 1e-9);
  out.at_most("metric_defect", metric, 1e-12);
  out.at_most("q_covariance", q_cov, 1e-10);

  // left action: act(T1, act(T2, s)) = act(T1 T2, s), relative to the entry scale
  double action = 0.0;
  for (std::size_t i = 0; i + 1 < 200; ++i) {
    const auto& t1 = orbit[i].transform;
    const auto& t2 = orbit[i + 1].transform;
    const Mat lhs = act_on_form(t1, act_on_form(t2, sigma0)).matrix();
    const Mat rhs = act_on_form(t1 * t2, sigma0).matrix();
    action = std::max(action, (lhs - rhs).cwiseAbs().maxCoeff() / std::max(1.0, rhs.cwiseAbs().maxCoeff()));
  }
  out.at_most("left_action", action, 1e-10);

  const auto stab = sample_stabilizer(st, sigma0, 50, config.seed + 3);
  double closure = 0.0;
  double members = 0.0;
  for (std::size_t i = 0; i < stab.size(); ++i) {
    const LorentzTransform& s = stab[i];
    const LorentzTransform& s2 = stab[(i + 1) % stab.size()];
    members = std::max(members, (act_on_form(s, sigma0).matrix() - sigma0.matrix()).cwiseAbs().maxCoeff());
    closure = std::max(closure, (act_on_form(s * s2, sigma0).matrix() - sigma0.matrix()).cwiseAbs().maxCoeff());
  }
  out.at_most("stabilizer_members", members, 1e-9);
  out.at_most("stabilizer_closure", closure, 1e-9);

  const auto inv2 = orbit_invariants(sigma0.scaled(2.0), st);
  double separation = 0.0;
  for (std::size_t k = 0; k < inv2.size(); ++k) separation = std::max(separation, std::abs(inv2[k] - inv0[k]));
  out.at_least("scaled_form_separated", separation, 1e-3);

  out.parameters() = Json{{"dim", d},
                          {"samples", orbit.size()},
                          {"stabilizer_samples", stab.size()},
                          {"largest_form_entry", largest_entry},
                          {"seed", config.seed}};
  return out.finish();
}

}  // namespace moyal::verify

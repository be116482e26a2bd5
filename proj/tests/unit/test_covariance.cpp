#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "moyal/covariance.hpp"
#include "moyal/errors.hpp"

using namespace moyal;
using std::numbers::pi;

namespace {

// band-limited 1-D profile: sum_k c_k e(k r / L), |k| <= 2
GridFunction profile(const GridSpec& spec, double phase) {
  return GridFunction::sample(spec, [&](std::span<const double> r) {
    const double t = r[0] / spec.length;
    return Complex{1.0, 0.0} + Complex{0.5, phase} * test::turns(t) + Complex{-0.25, 0.1} * test::turns(-2.0 * t);
  });
}

// e(k.(x - shift) / L), exact under every lattice operation used here
GridFunction trig(const GridSpec& spec, std::vector<int> ks, std::vector<double> shift = {}) {
  shift.resize(ks.size(), 0.0);
  return GridFunction::sample(spec, [&](std::span<const double> x) {
    double t = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) t += ks[i] * (x[i] - shift[i]) / spec.length;
    return test::turns(t);
  });
}

GridFunction fiber_trig(const GridSpec& spec, int k0, int k1) { return trig(spec, {k0, k1, -k0, 1}); }

}  // namespace

TEST_SUITE("covariance") {
  TEST_CASE("group samples") {
    const Spacetime st;
    CHECK_THROWS_AS(GroupSample({}), InvariantError);
    CHECK_THROWS_AS(GroupSample({make_boost(st, 1, 2.0)}, 1.5), InvariantError);
    const GroupSample e({LorentzTransform::identity(st), parity(st)});
    CHECK(e.find(parity(st)) == std::optional<std::size_t>(1));
    CHECK_FALSE(e.find(make_boost(st, 1, 0.1)).has_value());
  }

  TEST_CASE("gamma needs a right-closed sample unless re-indexed") {
    const Spacetime st;
    const GridSpec spec{4, 8, 8.0, 1.0};
    const GroupSample e({LorentzTransform::identity(st), parity(st)});
    const FiberedFunction f(e, {fiber_trig(spec, 1, 0), fiber_trig(spec, 0, 2)});
    // {1, P} is a group, so gamma_P swaps the two fibers
    const FiberedFunction swapped = gamma_act(parity(st), f);
    CHECK(max_abs(swapped.fiber(0) - f.fiber(1)) == 0.0);
    CHECK(max_abs(swapped.fiber(1) - f.fiber(0)) == 0.0);
    CHECK_THROWS_AS(gamma_act(make_boost(st, 1, 0.3), f), SampleNotClosed);
    CHECK_NOTHROW(gamma_reindex(make_boost(st, 1, 0.3), f));
  }

  TEST_CASE("tau translates each fiber by T x") {
    const Spacetime st;
    const GridSpec spec{4, 8, 8.0, 1.0};
    const auto t = make_rotation(st, 1, 2, 0.5);
    const GroupSample e({t});
    const FiberedFunction f(e, {fiber_trig(spec, 1, -1)});
    const Vector x{0.3, -0.2, 0.1, 0.4};
    const FiberedFunction moved = tau_act(x, f);
    const Vector tx = t.apply(x);
    const auto ref = trig(spec, {1, -1, -1, 1}, {tx.coords(0), tx.coords(1), tx.coords(2), tx.coords(3)});
    CHECK(max_abs(moved.fiber(0) - ref) < 1e-12);
  }

  TEST_CASE("equivariance identities on band-limited data") {
    const Spacetime st;
    const GridSpec spec{4, 8, 8.0, 1.0};
    const GridSpec line{1, 8, 8.0, 1.0};
    const GroupSample e({make_boost(st, 1, 0.2), make_rotation(st, 2, 3, 1.0)});
    const RealLineFunction psi(e, {profile(line, 0.3), profile(line, -0.7)});
    const Covector alpha{1.0, 0.0, -1.0, 0.0};
    const Vector x{0.2, -0.5, 0.3, 0.1};
    CHECK(check_phi_equivariance(alpha, x, psi, spec) < 1e-10);

    const FiberedFunction f(e, {fiber_trig(spec, 1, 2), fiber_trig(spec, -1, 0)});
    CHECK(check_gamma_covariance(make_boost(st, 1, -0.4), x, f) < 1e-10);
  }

  TEST_CASE("restriction, orbit tables and lifting") {
    const Spacetime st;
    const GridSpec spec{4, 8, 8.0, 1.0};
    const SkewForm s0 = standard_skew(st);
    const GroupSample e({make_boost(st, 1, 0.2), make_boost(st, 2, 0.5), parity(st)});
    const FiberedFunction f(e, {fiber_trig(spec, 1, 0), fiber_trig(spec, 0, 1), fiber_trig(spec, 2, 1)});

    const FiberedFunction r = restrict_to_E(f, {2, 0});
    CHECK(r.size() == 2);
    CHECK(max_abs(r.fiber(0) - f.fiber(2)) == 0.0);
    CHECK_THROWS_AS(restrict_to_E(f, {}), InvariantError);
    CHECK_THROWS_AS(restrict_to_E(f, {3}), DimensionError);

    // the boost along axis 1 fixes sigma0; the one along axis 3 does not
    const auto lifted = lift_from_sigma([&](const SkewForm& s) { return fiber_trig(spec, s.matrix()(0, 2) > 0.1 ? 1 : 0, 1); }, e, s0);
    const OrbitTable table = evaluate_on_orbit(lifted, s0);
    const FiberedFunction again = lift_from_sigma(table, e, s0);
    CHECK(max_defect(again, lifted) == 0.0);
    const OrbitTable partial(table.begin(), table.begin() + 1);
    const GroupSample other({make_boost(st, 3, 0.9)});
    CHECK_THROWS_AS(lift_from_sigma(partial, other, s0), MissingOrbitPoint);
  }

  TEST_CASE("Lipschitz estimate and modulus of continuity") {
    auto phi = [](double r) { return Complex{std::sin(2.0 * pi * r), 0.0}; };
    const double lip = lipschitz_estimate(phi, 0.0, 1.0);
    CHECK(lip == doctest::Approx(2.0 * pi).epsilon(1e-3));
    const Spacetime st;
    const GroupSample e({make_boost(st, 1, 0.3), make_rotation(st, 1, 2, 0.7)});
    std::vector<double> rs;
    for (int i = 0; i < 200; ++i) rs.push_back(-1.0 + i / 100.0);
    const auto rows = modulus_of_continuity(Covector{0.0, 1.0, 0.0, 0.0}, phi, e,
                                            {Vector{0.0, 0.01, 0.0, 0.0}, Vector{0.1, 0.1, 0.0, 0.0}}, rs, lip);
    REQUIRE(rows.size() == 2);
    for (const auto& row : rows) CHECK(row.modulus <= row.bound * (1.0 + 1e-9));
    CHECK(rows[0].modulus < rows[1].modulus);
  }

  TEST_CASE("modulus: zero at x = 0, growing along unbounded boosts") {
    auto phi = [](double r) { return Complex{std::sin(2.0 * pi * r), 0.0}; };
    const Spacetime st;
    std::vector<double> rs;
    for (int i = 0; i < 400; ++i) rs.push_back(-1.0 + i / 200.0);
    const Covector time{1.0, 0.0, 0.0, 0.0};
    const GroupSample e({make_boost(st, 1, 0.5)});
    CHECK(modulus_of_continuity(time, phi, e, {Vector{0.0, 0.0, 0.0, 0.0}}, rs, 2.0 * pi)[0].modulus == 0.0);

    // alpha(T x) = sinh(eta) |x| for x along axis 1
    double previous = 0.0;
    for (double eta : {1.0, 2.0, 3.0, 4.0, 5.0}) {
      const GroupSample boosts({LorentzTransform::identity(st), make_boost(st, 1, eta)});
      const double m = modulus_of_continuity(time, phi, boosts, {Vector{0.0, 1e-3, 0.0, 0.0}}, rs, 2.0 * pi)[0].modulus;
      CHECK(m > previous);
      previous = m;
    }
    CHECK(previous > 0.4);
  }

  TEST_CASE("pointwise theorem: matching covectors give the plain product") {
    const Spacetime st = Spacetime::minkowski(2);
    const GridSpec spec{2, 64, 8.0, 1.0};
    const GridSpec line{1, 64, 8.0, 1.0};
    const GroupSample e({LorentzTransform::identity(st), make_boost(st, 1, 0.4)});
    auto gauss = [&](double c, double w) {
      return GridFunction::sample(line, [=](std::span<const double> r) {
        return Complex{std::exp(-pi * (r[0] - c) * (r[0] - c) / (w * w)), 0.0};
      });
    };
    const auto psi1 = RealLineFunction::constant_in_T(e, gauss(0.0, 1.0));
    const auto psi2 = RealLineFunction::constant_in_T(e, gauss(0.2, 1.1));
    CHECK(check_pointwise_theorem(Covector{1.0, 1.0}, psi1, psi2, standard_skew(2), spec) < 1e-6);
    const auto mixed = pointwise_defect(Covector{1.0, 1.0}, psi1, Covector{1.0, -1.0}, psi2, standard_skew(2), spec);
    for (double d : mixed) CHECK(d > 1e-2);
  }
}

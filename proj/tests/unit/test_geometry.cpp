#include <cmath>

#include "doctest.h"
#include "moyal/errors.hpp"
#include "moyal/geometry.hpp"

using namespace moyal;

namespace {

// Pf of a 4x4 skew matrix, written out
double pfaffian4(const Mat& a) { return a(0, 1) * a(2, 3) - a(0, 2) * a(1, 3) + a(0, 3) * a(1, 2); }

Mat random_skew(Rng& rng, int d) {
  Mat m = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      m(i, j) = rng.uniform(-1.0, 1.0);
      m(j, i) = -m(i, j);
    }
  }
  return m;
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("boosts and rotations preserve the metric") {
    const Spacetime st;
    for (double r : {-1.0, 0.3, 2.0}) {
      const auto b = make_boost(st, 1, r);
      CHECK(b.metric_defect() < 1e-13);
      CHECK(b.matrix()(0, 0) == doctest::Approx(std::cosh(r)).epsilon(1e-15));
      CHECK(std::abs(b.matrix()(0, 1)) == doctest::Approx(std::sinh(std::abs(r))).epsilon(1e-15));
    }
    // large rapidities stay constructible; the defect is rounding relative to cosh^2
    const auto far = make_boost(st, 1, 8.0);
    CHECK(far.metric_defect() / std::pow(std::cosh(8.0), 2) < 1e-15);
    CHECK(make_rotation(st, 2, 3, 1.1).metric_defect() < 1e-15);
    CHECK(parity(st).metric_defect() == 0.0);
    CHECK(time_reversal(st).metric_defect() == 0.0);
  }

  TEST_CASE("non-Lorentz matrices and bad axes are rejected") {
    const Spacetime st;
    CHECK_THROWS_AS(LorentzTransform(st, 2.0 * Mat::Identity(4, 4)), InvariantError);
    CHECK_THROWS_AS(make_boost(st, 0, 0.1), DimensionError);
    CHECK_THROWS_AS(make_rotation(st, 1, 1, 0.1), DimensionError);
  }

  TEST_CASE("skew forms must be exactly antisymmetric") {
    Mat m = Mat::Zero(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = -1.0 + 1e-15;
    CHECK_THROWS_AS(SkewForm{m}, InvariantError);
    m(1, 0) = -1.0;
    CHECK_NOTHROW(SkewForm{m});
    CHECK_FALSE(SkewForm::zero(2).invertible());
  }

  TEST_CASE("q_form is b^t sigma a and antisymmetric") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const SkewForm s(random_skew(rng, 4));
      Vec a(4);
      Vec b(4);
      for (int i = 0; i < 4; ++i) {
        a(i) = rng.uniform(-1.0, 1.0);
        b(i) = rng.uniform(-1.0, 1.0);
      }
      long double ref = 0.0L;
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) ref += static_cast<long double>(b(i)) * s.matrix()(i, j) * a(j);
      }
      CHECK(q_form(s, Covector(a), Covector(b)) == doctest::Approx(static_cast<double>(ref)).epsilon(1e-14));
      CHECK(q_form(s, Covector(a), Covector(b)) == -q_form(s, Covector(b), Covector(a)));
    }
  }

  TEST_CASE("standard form: pfaffian and invariants by hand") {
    const Spacetime st;
    const SkewForm s0 = standard_skew(st);
    CHECK(pfaffian(s0) == doctest::Approx(pfaffian4(s0.matrix())));
    CHECK(pfaffian(s0) == doctest::Approx(1.0));
    // eta sigma0 has blocks [[0,1],[1,0]] and [[0,-1],[1,0]]: traces of its
    // square and fourth power are 2 - 2 and 2 + 2
    const auto inv = orbit_invariants(s0, st);
    REQUIRE(inv.size() == 3);
    CHECK(inv[0] == doctest::Approx(0.0));
    CHECK(inv[1] == doctest::Approx(4.0));
    CHECK(inv[2] == doctest::Approx(1.0));
  }

  TEST_CASE("pfaffian of random 4x4 forms") {
    Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      const SkewForm s(random_skew(rng, 4));
      CHECK(pfaffian(s) == doctest::Approx(pfaffian4(s.matrix())).epsilon(1e-13));
      CHECK(pfaffian(s) * pfaffian(s) == doctest::Approx(s.matrix().determinant()).epsilon(1e-12));
    }
  }

  TEST_CASE("orbit: covariance of Q, constant invariants, seed reproducibility") {
    const Spacetime st;
    const SkewForm s0 = standard_skew(st);
    const auto orbit = sample_orbit(st, s0, 50, 7);
    const auto again = sample_orbit(st, s0, 50, 7);
    const auto inv0 = orbit_invariants(s0, st);
    Rng rng(5);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      CHECK(orbit[i].transform.matrix() == again[i].transform.matrix());
      const auto inv = orbit_invariants(orbit[i].form, st);
      for (std::size_t k = 0; k < inv.size(); ++k) CHECK(std::abs(inv[k] - inv0[k]) <= 1e-9 * std::max(1.0, std::abs(inv0[k])));
      const Covector a{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
      const Covector b{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
      const auto& t = orbit[i].transform;
      CHECK(std::abs(q_form(orbit[i].form, a, b) - q_form(s0, t.pullback(a), t.pullback(b))) < 1e-10);
    }
  }

  TEST_CASE("stabilizer samples fix the form and compose") {
    const Spacetime st;
    const SkewForm s0 = standard_skew(st);
    const auto stab = sample_stabilizer(st, s0, 30, 9);
    REQUIRE(stab.size() == 30);
    for (std::size_t i = 0; i < stab.size(); ++i) {
      CHECK(in_stabilizer(stab[i], s0, 1e-9));
      CHECK(in_stabilizer(stab[i] * stab[(i + 1) % stab.size()], s0, 1e-9));
    }
    // a boost along the axis outside the first block does not fix sigma0
    CHECK_FALSE(in_stabilizer(make_boost(st, 2, 0.4), s0, 1e-9));
  }

  TEST_CASE("pullback is T^t alpha and pairs with apply") {
    const Spacetime st;
    const auto t = make_boost(st, 1, 0.7) * make_rotation(st, 1, 3, 0.4);
    const Vector x{0.3, -1.0, 0.5, 2.0};
    const Covector a{1.0, 0.2, -0.4, 0.1};
    CHECK(pair(t.apply(x), a) == doctest::Approx(pair(x, t.pullback(a))).epsilon(1e-14));
    CHECK((t * t.inverse()).matrix().isIdentity(1e-12));
  }
}

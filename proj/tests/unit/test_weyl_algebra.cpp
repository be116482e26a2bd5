#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "moyal/errors.hpp"
#include "moyal/weyl_algebra.hpp"

using namespace moyal;

namespace {

WeylElement random_element(Rng& rng, const SkewForm& s, int terms) {
  WeylElement a(s);
  for (int t = 0; t < terms; ++t) {
    Vec v(s.dim());
    for (int i = 0; i < s.dim(); ++i) v(i) = rng.uniform(-1.0, 1.0);
    a.add_term(CovectorKey::from(Covector(v)), Complex{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
  }
  return a;
}

}  // namespace

TEST_SUITE("weyl_algebra") {
  TEST_CASE("unit_phase is exact at quarter periods") {
    CHECK(unit_phase(0.0) == Complex{1.0, 0.0});
    CHECK(unit_phase(0.25) == Complex{0.0, 1.0});
    CHECK(unit_phase(-0.25) == Complex{0.0, -1.0});
    CHECK(unit_phase(0.5) == Complex{-1.0, 0.0});
    CHECK(unit_phase(3.0) == Complex{1.0, 0.0});
    CHECK(std::abs(unit_phase(0.1) - test::turns(0.1)) < 1e-15);
  }

  TEST_CASE("u_a u_b = e(Q_ab) u_{a+b} on dyadic covectors") {
    const SkewForm s = standard_skew(2);
    // Q = b^t sigma a = (0, 1/2).(0, -1/2) = -1/4, so the phase is exactly -i
    const WeylElement prod = unit_u(Covector{0.5, 0.0}, s) * unit_u(Covector{0.0, 0.5}, s);
    REQUIRE(prod.size() == 1);
    CHECK(prod.terms().begin()->first == CovectorKey::from(Covector{0.5, 0.5}));
    CHECK(prod.terms().begin()->second == Complex{0.0, -1.0});
    CHECK(commutator_phase(Covector{0.5, 0.0}, Covector{0.0, 0.5}, s).value == Complex{-1.0, 0.0});
  }

  TEST_CASE("generic covectors: phase against a direct evaluation") {
    Rng rng(21);
    const Spacetime st;
    const SkewForm s = sample_orbit(st, standard_skew(st), 1, 4).front().form;
    for (int trial = 0; trial < 20; ++trial) {
      Vec a(4);
      Vec b(4);
      for (int i = 0; i < 4; ++i) {
        a(i) = rng.uniform(-1.0, 1.0);
        b(i) = rng.uniform(-1.0, 1.0);
      }
      const auto ka = CovectorKey::from(Covector(a));
      const auto kb = CovectorKey::from(Covector(b));
      const Vec ar = ka.covector().coords;
      const Vec br = kb.covector().coords;
      const WeylElement prod = unit_u(ka, s) * unit_u(kb, s);
      REQUIRE(prod.size() == 1);
      CHECK(std::abs(prod.terms().begin()->second - test::turns(br.dot(s.matrix() * ar))) < 1e-12);
    }
  }

  TEST_CASE("keys sit on the 2^-32 lattice") {
    const auto k = CovectorKey::from(Covector{0.1, -0.3});
    CHECK(k.units()[0] == std::llround(0.1 * 0x1p32));
    CHECK(k.units()[1] == std::llround(-0.3 * 0x1p32));
    CHECK((k + (-k)).is_zero());
  }

  TEST_CASE("associativity, involution, unit") {
    Rng rng(2);
    const SkewForm s = standard_skew(4);
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = random_element(rng, s, 4);
      const auto b = random_element(rng, s, 4);
      const auto c = random_element(rng, s, 4);
      CHECK(((a * b) * c - a * (b * c)).max_abs() < 1e-12);
      CHECK((star(a * b) - star(b) * star(a)).max_abs() < 1e-12);
      CHECK(star(star(a)) == a);
      CHECK(a * WeylElement::unit(s) == a);
    }
  }

  TEST_CASE("u_a is unitary exactly") {
    const SkewForm s = standard_skew(4);
    const auto u = unit_u(Covector{0.3, -0.2, 0.7, 0.1}, s);
    CHECK(u * star(u) == WeylElement::unit(s));
  }

  TEST_CASE("zero coefficients are pruned") {
    const SkewForm s = standard_skew(2);
    WeylElement a(s);
    const auto k = CovectorKey::from(Covector{0.25, 0.0});
    a.add_term(k, {1.0, 0.0});
    a.add_term(k, {-1.0, 0.0});
    CHECK(a.size() == 0);
    CHECK(a.coefficient(k) == Complex{});
  }

  TEST_CASE("elements over different forms do not mix") {
    const auto a = unit_u(Covector{0.1, 0.2}, standard_skew(2));
    const auto b = unit_u(Covector{0.1, 0.2}, standard_skew(2).scaled(2.0));
    CHECK_THROWS_AS(a * b, ContextMismatch);
    CHECK_THROWS_AS(a + b, ContextMismatch);
  }

  TEST_CASE("eval_function sums plane waves") {
    const SkewForm s = standard_skew(2);
    WeylElement a(s);
    a.add_term(CovectorKey::from(Covector{0.5, 0.0}), {2.0, 0.0});
    a.add_term(CovectorKey::from(Covector{0.0, -0.25}), {0.0, 1.0});
    const Vector q{0.3, 1.1};
    const Complex ref = 2.0 * test::turns(0.15) + Complex{0.0, 1.0} * test::turns(-0.275);
    CHECK(std::abs(eval_function(a, q) - ref) < 1e-14);
  }

  TEST_CASE("phases reject non-unit values") {
    CHECK_THROWS_AS(Phase(Complex{1.0, 1e-6}), InvariantError);
    CHECK_NOTHROW(Phase(Complex{0.0, 1.0}));
  }
}

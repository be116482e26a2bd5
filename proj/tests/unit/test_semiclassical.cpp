#include <cmath>
#include <numbers>

#include "doctest.h"
#include "moyal/errors.hpp"
#include "moyal/semiclassical.hpp"

using namespace moyal;
using std::numbers::pi;

namespace {

std::pair<GridFunction, GridFunction> pair_on(const GridSpec& spec, Eigen::Vector2d a, Eigen::Vector2d b) {
  auto gauss = [&spec](Eigen::Vector2d c) {
    return GridFunction::sample(spec, [c](std::span<const double> x) {
      return Complex{std::exp(-pi * (Eigen::Vector2d(x[0], x[1]) - c).squaredNorm()), 0.0};
    });
  };
  return {gauss(a), gauss(b)};
}

}  // namespace

TEST_SUITE("semiclassical") {
  TEST_CASE("least-squares slope") {
    CHECK(fit_slope({0.0, 1.0, 2.0, 3.0}, {1.0, 4.0, 7.0, 10.0}) == doctest::Approx(3.0));
    CHECK(fit_slope({1.0, 2.0, 3.0}, {2.0, 1.0, 3.0}) == doctest::Approx(0.5));
  }

  TEST_CASE("theta lists are validated") {
    const GridSpec spec{2, 32, 8.0, 1.0};
    const auto [f, g] = pair_on(spec, {0.2, 0.0}, {0.0, -0.2});
    const SkewForm s = standard_skew(2);
    CHECK_THROWS_AS(semiclassical_sweep(f, g, s, {}), InvariantError);
    CHECK_THROWS_AS(semiclassical_sweep(f, g, s, {0.5, 1.0}), InvariantError);
    CHECK_THROWS_AS(semiclassical_sweep(f, g, s, {1.0, 0.0}), InvariantError);
    CHECK_THROWS_AS(semiclassical_sweep(f, g, s, {0.5, 0.5}), InvariantError);
    const auto one = semiclassical_sweep(f, g, s, {0.25});
    CHECK(one.rows.size() == 1);
    CHECK(std::isnan(one.slope_d1));
  }

  TEST_CASE("first-order term: D1 / theta -> ||{f,g}|| / (2 pi)") {
    // {f, g} = 4 pi^2 f g (x-a)^t sigma (x-b) for unit Gaussians at a and b
    const GridSpec spec{2, 64, 8.0, 1.0};
    const Eigen::Vector2d a(0.3, -0.2);
    const Eigen::Vector2d b(-0.1, 0.4);
    const auto [f, g] = pair_on(spec, a, b);
    const SkewForm s = standard_skew(2);
    const auto bracket = GridFunction::sample(spec, [&](std::span<const double> x) {
      const Eigen::Vector2d p(x[0], x[1]);
      return Complex{4.0 * pi * pi * std::exp(-pi * ((p - a).squaredNorm() + (p - b).squaredNorm())) *
                         (p - a).dot(s.matrix() * (p - b)),
                     0.0};
    });
    const double theta = 1.0 / 64.0;
    const auto sweep = semiclassical_sweep(f, g, s, {theta});
    CHECK(sweep.rows[0].d1 / theta == doctest::Approx(norm_l2(bracket) / (2.0 * pi)).epsilon(0.02));
  }
}

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "helpers.hpp"
#include "moyal/errors.hpp"
#include "moyal/fft.hpp"
#include "moyal/grid.hpp"
#include "moyal/spectral.hpp"

using namespace moyal;
using std::numbers::pi;

namespace {

// sum_k c_k e(k (x + L/2) / L) in 1-D, |k| <= 3
Complex trig(double x, double length) {
  const double t = (x + 0.5 * length) / length;
  return Complex{0.5, 0.0} + Complex{1.0, -0.3} * test::turns(t) + Complex{0.2, 0.4} * test::turns(-3 * t) +
         Complex{-0.7, 0.1} * test::turns(2 * t);
}

}  // namespace

TEST_SUITE("grid") {
  TEST_CASE("specs validate") {
    CHECK_THROWS_AS((GridSpec{2, 48, 8.0, 1.0}.validate()), InvariantError);
    CHECK_THROWS_AS((GridSpec{2, 4, 8.0, 1.0}.validate()), InvariantError);
    CHECK_THROWS_AS((GridSpec{2, 64, -1.0, 1.0}.validate()), InvariantError);
    CHECK_NOTHROW((GridSpec{3, 8, 2.0, 0.5}.validate()));
    const GridSpec s{2, 8, 4.0, 1.0};
    CHECK(s.coordinate(0) == -2.0);
    CHECK(s.dual_coordinate(4) == 0.0);
    CHECK(s.point(9) == std::vector<double>{-1.5, -1.5});
  }

  TEST_CASE("the Gaussian is its own Fourier transform") {
    // int exp(-pi |x|^2) e(-x.p) dx = exp(-pi |p|^2)
    const GridSpec spec{2, 64, 8.0, 1.0};
    const auto g = GridFunction::sample(spec, [](std::span<const double> x) {
      return Complex{std::exp(-pi * (x[0] * x[0] + x[1] * x[1])), 0.0};
    });
    const GridFunction ghat = fft_forward(g);
    double err = 0.0;
    for (std::size_t i = 0; i < ghat.size(); ++i) {
      const auto p = spec.dual_point(i);
      err = std::max(err, std::abs(ghat[i] - std::exp(-pi * (p[0] * p[0] + p[1] * p[1]))));
    }
    CHECK(err < 1e-13);
    CHECK(max_abs(fft_inverse(ghat) - g) < 1e-14);
  }

  TEST_CASE("shifted Gaussian picks up the modulation e(-c.p)") {
    const GridSpec spec{1, 64, 10.0, 1.0};
    const double c = 0.7;
    const auto g = GridFunction::sample(spec, [&](std::span<const double> x) {
      return Complex{std::exp(-pi * (x[0] - c) * (x[0] - c)), 0.0};
    });
    const GridFunction ghat = fft_forward(g);
    double err = 0.0;
    for (std::size_t i = 0; i < ghat.size(); ++i) {
      const double p = spec.dual_point(i)[0];
      err = std::max(err, std::abs(ghat[i] - std::exp(-pi * p * p) * test::turns(-c * p)));
    }
    CHECK(err < 1e-13);
  }

  TEST_CASE("spectral shift and derivative are exact on trigonometric data") {
    const GridSpec spec{1, 16, 4.0, 1.0};
    const auto f = GridFunction::sample(spec, [&](std::span<const double> x) { return trig(x[0], spec.length); });
    const double s = 0.37;
    const GridFunction shifted = spectral_shift(f, std::span<const double>(&s, 1));
    const auto ref = GridFunction::sample(spec, [&](std::span<const double> x) { return trig(x[0] - s, spec.length); });
    CHECK(max_abs(shifted - ref) < 1e-13);

    // d/dx e(k (x + L/2)/L) = (2 pi i k / L) e(...)
    const GridFunction df = spectral_derivative(f, 0);
    const auto dref = GridFunction::sample(spec, [&](std::span<const double> x) {
      const double t = (x[0] + 0.5 * spec.length) / spec.length;
      const Complex w{0.0, 2.0 * pi / spec.length};
      return w * (Complex{1.0, -0.3} * test::turns(t) - 3.0 * Complex{0.2, 0.4} * test::turns(-3 * t) +
                  2.0 * Complex{-0.7, 0.1} * test::turns(2 * t));
    });
    CHECK(max_abs(df - dref) < 1e-12);

    const SpectralInterpolant interp(f);
    for (double x : {-1.9, -0.33, 0.0, 1.234}) CHECK(std::abs(interp(std::span<const double>(&x, 1)) - trig(x, spec.length)) < 1e-13);
  }

  TEST_CASE("the Nyquist mode has no derivative") {
    const GridSpec spec{1, 16, 4.0, 1.0};
    const auto f = GridFunction::sample(spec, [&](std::span<const double> x) {
      return test::turns(-(spec.n / 2) * (x[0] + 0.5 * spec.length) / spec.length);
    });
    CHECK(max_abs(spectral_derivative(f, 0)) < 1e-13);
  }

  TEST_CASE("norms and pointwise arithmetic") {
    const GridSpec spec{2, 32, 8.0, 1.0};
    // ||exp(-pi|x|^2)||^2 = int exp(-2 pi |x|^2) = 1/2
    const auto g = GridFunction::sample(spec, [](std::span<const double> x) {
      return Complex{std::exp(-pi * (x[0] * x[0] + x[1] * x[1])), 0.0};
    });
    // h = 1/4 leaves an aliasing error near 1e-11
    CHECK(norm_l2(g) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
    CHECK(relative_l2(g * Complex{2.0, 0.0}, g) == doctest::Approx(1.0));
    CHECK_THROWS_AS(pointwise(g, GridFunction(GridSpec{2, 16, 8.0, 1.0})), DimensionError);
  }
}

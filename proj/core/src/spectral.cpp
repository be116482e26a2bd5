#include "moyal/spectral.hpp"

#include <cmath>
#include <numbers>

#include "fft_plan.hpp"
#include "moyal/errors.hpp"
#include "moyal/weyl_algebra.hpp"

namespace moyal {

double wrapped_frequency(const GridSpec& spec, int m) {
  const int k = (m < spec.n / 2) ? m : m - spec.n;
  return k / spec.length;
}

namespace {

std::vector<Complex> raw_forward(const GridFunction& f) {
  std::vector<Complex> out(f.size());
  detail::FftPlan::get(f.spec().dim, f.spec().n).forward(f.values().data(), out.data());
  return out;
}

GridFunction raw_backward(const GridSpec& spec, const std::vector<Complex>& coeffs) {
  std::vector<Complex> out(coeffs.size());
  detail::FftPlan::get(spec.dim, spec.n).backward(coeffs.data(), out.data());
  const double scale = 1.0 / static_cast<double>(spec.size());
  for (auto& v : out) v *= scale;
  return GridFunction(spec, std::move(out));
}

// Multiplies coefficients (FFT ordering) by prod_axis ramp[axis][m_axis].
void apply_separable(const GridSpec& spec, const std::vector<std::vector<Complex>>& ramp,
                     std::vector<Complex>& coeffs) {
  const auto n = static_cast<std::size_t>(spec.n);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::size_t rest = i;
    Complex w{1.0, 0.0};
    for (int axis = spec.dim - 1; axis >= 0; --axis) {
      w *= ramp[static_cast<std::size_t>(axis)][rest % n];
      rest /= n;
    }
    coeffs[i] *= w;
  }
}

}  // namespace

GridFunction spectral_shift(const GridFunction& f, std::span<const double> s) {
  const GridSpec& spec = f.spec();
  if (static_cast<int>(s.size()) != spec.dim) throw DimensionError("shift vector dimension");
  std::vector<std::vector<Complex>> ramp(static_cast<std::size_t>(spec.dim),
                                         std::vector<Complex>(static_cast<std::size_t>(spec.n)));
  for (int axis = 0; axis < spec.dim; ++axis) {
    for (int m = 0; m < spec.n; ++m) {
      ramp[static_cast<std::size_t>(axis)][static_cast<std::size_t>(m)] =
          unit_phase(-wrapped_frequency(spec, m) * s[static_cast<std::size_t>(axis)]);
    }
  }
  auto coeffs = raw_forward(f);
  apply_separable(spec, ramp, coeffs);
  return raw_backward(spec, coeffs);
}

GridFunction spectral_derivative(const GridFunction& f, int axis) {
  const GridSpec& spec = f.spec();
  if (axis < 0 || axis >= spec.dim) throw DimensionError("derivative axis out of range");
  std::vector<std::vector<Complex>> factor(static_cast<std::size_t>(spec.dim),
                                           std::vector<Complex>(static_cast<std::size_t>(spec.n), 1.0));
  auto& row = factor[static_cast<std::size_t>(axis)];
  for (int m = 0; m < spec.n; ++m) {
    row[static_cast<std::size_t>(m)] =
        (m == spec.n / 2) ? Complex{}
                          : Complex{0.0, 2.0 * std::numbers::pi * wrapped_frequency(spec, m)};
  }
  auto coeffs = raw_forward(f);
  apply_separable(spec, factor, coeffs);
  return raw_backward(spec, coeffs);
}

SpectralInterpolant::SpectralInterpolant(const GridFunction& f)
    : spec_(f.spec()), coeffs_(raw_forward(f)) {
  const double scale = 1.0 / static_cast<double>(spec_.size());
  for (auto& c : coeffs_) c *= scale;
}

Complex SpectralInterpolant::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != spec_.dim) throw DimensionError("interpolation point dimension");
  const auto n = static_cast<std::size_t>(spec_.n);
  std::vector<std::vector<Complex>> wave(static_cast<std::size_t>(spec_.dim), std::vector<Complex>(n));
  for (int axis = 0; axis < spec_.dim; ++axis) {
    const double offset = x[static_cast<std::size_t>(axis)] + 0.5 * spec_.length;
    for (int m = 0; m < spec_.n; ++m) {
      wave[static_cast<std::size_t>(axis)][static_cast<std::size_t>(m)] =
          unit_phase(wrapped_frequency(spec_, m) * offset);
    }
  }
  Complex sum{};
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::size_t rest = i;
    Complex w{1.0, 0.0};
    for (int axis = spec_.dim - 1; axis >= 0; --axis) {
      w *= wave[static_cast<std::size_t>(axis)][rest % n];
      rest /= n;
    }
    sum += coeffs_[i] * w;
  }
  return sum;
}

}  // namespace moyal

#pragma once

// Band-limited periodic model: a grid function is identified with its
// trigonometric interpolant, sum_m c_m e(k_m (x + L/2)), with wrapped
// frequencies k_m in [-N/(2L), N/(2L)). The Nyquist mode is taken at -N/(2L)
// in every operation, matching the dual lattice of fft_forward.

#include <span>
#include <vector>

#include "moyal/grid.hpp"

namespace moyal {

/// x -> f(x - s), by a Fourier phase ramp. Exact for the band-limited model.
GridFunction spectral_shift(const GridFunction& f, std::span<const double> s);

/// d f / d x_axis with the Nyquist coefficient dropped.
GridFunction spectral_derivative(const GridFunction& f, int axis);

/// Evaluates the trigonometric interpolant of f at arbitrary points.
class SpectralInterpolant {
 public:
  explicit SpectralInterpolant(const GridFunction& f);
  Complex operator()(std::span<const double> x) const;

 private:
  GridSpec spec_;
  std::vector<Complex> coeffs_;  ///< raw DFT / N^d, FFT ordering
};

/// Wrapped frequency of raw DFT index m (FFT ordering).
double wrapped_frequency(const GridSpec& spec, int m);

}  // namespace moyal

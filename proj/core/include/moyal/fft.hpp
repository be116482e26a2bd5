#pragma once

#include "moyal/grid.hpp"

namespace moyal {

/// g^(p) = sum_x g(x) e(-x.p) (L/N)^d on the centered dual lattice
/// p = (m - N/2)/L. The result is indexed like a grid function; read its
/// nodes with GridSpec::dual_point.
GridFunction fft_forward(const GridFunction& g);

/// g(x) = sum_p g^(p) e(x.p) (1/L)^d; inverse of fft_forward.
GridFunction fft_inverse(const GridFunction& ghat);

}  // namespace moyal

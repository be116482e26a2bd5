#pragma once

// Deformed (Weyl-Moyal) product on one fiber,
//
//   (f * g)(q) = int_{V'} f(q - theta sigma p) g^(p) e(q.p) dp,
//
// the absolutely convergent single-integral form of the oscillatory double
// integral. The p-integral is the Riemann sum over the dual lattice of the
// box; each shift of f is a Fourier phase ramp.
//
// With this convention
//   u_a * f       = e(q.a) f(q + theta sigma a)
//   [x_a, x_b]_*  = (theta / (pi i)) Q_ab          (x_a(q) = a(q))
//   f * g         = f g - (theta / (2 pi i)) {f, g}_sigma + O(theta^2)

#include <cstddef>

#include "moyal/geometry.hpp"
#include "moyal/grid.hpp"

namespace moyal {

/// Worker threads for the data-parallel kernels; 0 selects the hardware
/// concurrency. The result does not depend on this value.
struct Parallelism {
  unsigned workers = 0;

  /// Threads to use for `jobs` independent tasks.
  unsigned resolve(std::size_t jobs) const;
};

/// Throws DimensionError unless f and g share a spec and sigma has the grid
/// dimension.
GridFunction star_product(const GridFunction& f, const GridFunction& g, const SkewForm& sigma,
                          Parallelism par = {});

GridFunction involution(const GridFunction& f);

/// q -> e(q.alpha) f(q + theta sigma alpha).
GridFunction weyl_action(const Covector& alpha, const GridFunction& f, const SkewForm& sigma);

/// f * g - g * f.
GridFunction star_commutator(const GridFunction& f, const GridFunction& g, const SkewForm& sigma,
                             Parallelism par = {});

/// int conj(xi) eta dv, Riemann sum with weight (L/N)^d.
Complex inner_product_B(const GridFunction& xi, const GridFunction& eta);

/// sum_jk sigma_jk d_j f d_k g with spectral derivatives.
GridFunction poisson_bracket(const GridFunction& f, const GridFunction& g, const SkewForm& sigma);

/// q -> alpha(q).
GridFunction coordinate_function(const GridSpec& spec, const Covector& alpha);

}  // namespace moyal

#pragma once

// Point-state compression of the left-regular operator L_f at q0 = 0 on the
// identity fiber, as a dense matrix on grid values:
//
//   (L_f eta)(x) = sum_k f(x - theta sigma k) e(x.k) eta^(k)
//
// with eta^(k) the discrete Fourier coefficients of eta on the dual lattice.
// Restricted to d <= 2 so the side N^d stays at most 4096.

#include <string>

#include <Eigen/Dense>

#include "moyal/geometry.hpp"
#include "moyal/grid.hpp"

namespace moyal {

struct OperatorMatrix {
  Eigen::MatrixXcd matrix;
  std::string provenance;  ///< which f, sigma, theta produced it
};

/// Throws DimensionError for d > 2 or a form of the wrong dimension.
OperatorMatrix build_left_regular_matrix(const GridFunction& f, const SkewForm& sigma);

/// Largest singular value.
double spectral_norm(const Eigen::MatrixXcd& m);

struct CstarReport {
  double norm_f = 0.0;        ///< ||L_f||
  double norm_ff = 0.0;       ///< ||L_{f* * f}||
  double defect = 0.0;        ///< | ||L_{f* * f}|| - ||L_f||^2 | / ||L_f||^2
  double min_eigenvalue = 0.0;  ///< of the Hermitian part of L_{f* * f}
};

CstarReport cstar_identity_check(const GridFunction& f, const SkewForm& sigma);

struct RepresentationDefects {
  /// ||L_{f*g} - L_f L_g|| / (||L_f|| ||L_g||)
  double homomorphism = 0.0;
  /// ||L_{f*} - L_f^H|| / ||L_f||
  double adjoint = 0.0;
};

RepresentationDefects representation_defects(const GridFunction& f, const GridFunction& g,
                                             const SkewForm& sigma);

}  // namespace moyal

#pragma once

// Reference evaluation of the deformed product by adaptive quadrature, kept
// apart from the FFT path: analytic Gaussian packets and their analytic
// Fourier transforms, integrated with nested Gauss-Kronrod rules.
//
//   (f * g)(q) = int f(q - theta sigma p) g^(p) e(q.p) dp

#include <complex>

#include <Eigen/Dense>

namespace moyal::oracle {

using Complex = std::complex<double>;

/// amp exp(-pi (x-c)^t A (x-c) + 2 pi i k.x), A symmetric positive definite.
struct GaussianPacket {
  Eigen::VectorXd center;
  Eigen::MatrixXd precision;
  Eigen::VectorXd freq;
  Complex amp{1.0, 0.0};

  /// Isotropic packet exp(-pi |x - c|^2 / width^2).
  static GaussianPacket isotropic(const Eigen::VectorXd& center, double width);

  int dim() const { return static_cast<int>(center.size()); }
  /// Throws std::invalid_argument on inconsistent shapes or non-SPD A.
  void validate() const;

  Complex value(const Eigen::VectorXd& x) const;
  /// int g(x) e(-x.p) dx
  Complex fourier(const Eigen::VectorXd& p) const;
};

struct QuadratureOptions {
  /// Error target relative to |amp_f amp_g|, which bounds |f * g| everywhere.
  /// Values far below that bound are resolved to an absolute accuracy.
  double tolerance = 1e-12;
  unsigned max_depth = 15;
};

/// Value of the deformed product of two packets at q (dimension 1 or 2).
Complex star_at(const GaussianPacket& f, const GaussianPacket& g, const Eigen::MatrixXd& sigma,
                double theta, const Eigen::VectorXd& q, const QuadratureOptions& opt = {});

/// int f(x) dx over R^d for a packet, in closed form.
Complex packet_integral(const GaussianPacket& f);

}  // namespace moyal::oracle

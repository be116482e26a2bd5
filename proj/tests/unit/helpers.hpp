#pragma once

// Test-only references. Nothing here calls into the library's numerics.

#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

#include "moyal/oracle.hpp"

namespace moyal::test {

using Complex = std::complex<double>;

inline Complex turns(double t) { return std::polar(1.0, 2.0 * std::numbers::pi * t); }

// Closed form of int f(q - S p) g^(p) e(q.p) dp for packets f, g with
// S = theta sigma. Collecting the exponent gives
//   -pi p^t M p + 2 pi h.p + c0,   M = S^t A_f S + A_g^-1,
//   h = S^t A_f (q - c_f) + A_g^-1 k_g + i (q - c_g - S^t k_f),
// and int exp(-pi p^t M p + 2 pi h.p) dp = det(M)^-1/2 exp(pi h^t M^-1 h)
// for complex h.
inline Complex gaussian_star(const oracle::GaussianPacket& f, const oracle::GaussianPacket& g,
                             const Eigen::MatrixXd& sigma, double theta, const Eigen::VectorXd& q) {
  using std::numbers::pi;
  const Eigen::MatrixXd s = theta * sigma;
  const Eigen::MatrixXd b = g.precision.inverse();
  const Eigen::MatrixXd m = s.transpose() * f.precision * s + b;
  const Eigen::VectorXd r = q - f.center;
  const Eigen::VectorXcd h = (s.transpose() * f.precision * r + b * g.freq).cast<Complex>() +
                             Complex{0.0, 1.0} * (q - g.center - s.transpose() * f.freq).cast<Complex>();
  const Complex quad = (h.transpose() * m.inverse().cast<Complex>() * h)(0, 0);
  const Complex c0 = -pi * r.dot(f.precision * r) + Complex{0.0, 2.0 * pi * f.freq.dot(q)} -
                     pi * g.freq.dot(b * g.freq) + Complex{0.0, 2.0 * pi * g.center.dot(g.freq)};
  return f.amp * g.amp / std::sqrt(g.precision.determinant() * m.determinant()) * std::exp(c0 + pi * quad);
}

}  // namespace moyal::test

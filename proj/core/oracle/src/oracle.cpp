#include "moyal/oracle.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace moyal::oracle {

namespace {

Complex e(double turns) { return std::polar(1.0, 2.0 * std::numbers::pi * turns); }

}  // namespace

GaussianPacket GaussianPacket::isotropic(const Eigen::VectorXd& center, double width) {
  const auto d = center.size();
  return {center, Eigen::MatrixXd::Identity(d, d) / (width * width), Eigen::VectorXd::Zero(d), {1.0, 0.0}};
}

void GaussianPacket::validate() const {
  const auto d = center.size();
  if (d < 1 || precision.rows() != d || precision.cols() != d || freq.size() != d) {
    throw std::invalid_argument("Gaussian packet: inconsistent shapes");
  }
  if ((precision - precision.transpose()).cwiseAbs().maxCoeff() > 0.0) {
    throw std::invalid_argument("Gaussian packet: precision is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(precision);
  if (!(eig.eigenvalues().minCoeff() > 0.0)) {
    throw std::invalid_argument("Gaussian packet: precision is not positive definite");
  }
}

Complex GaussianPacket::value(const Eigen::VectorXd& x) const {
  const Eigen::VectorXd y = x - center;
  return amp * std::exp(-std::numbers::pi * y.dot(precision * y)) * e(freq.dot(x));
}

Complex GaussianPacket::fourier(const Eigen::VectorXd& p) const {
  const Eigen::VectorXd dp = p - freq;
  const double quad = dp.dot(precision.ldlt().solve(dp));
  return amp / std::sqrt(precision.determinant()) * std::exp(-std::numbers::pi * quad) * e(-center.dot(dp));
}

Complex packet_integral(const GaussianPacket& f) {
  return f.fourier(Eigen::VectorXd::Zero(f.dim()));
}

namespace {

// Packet data with the inverse precision and normalization precomputed, in
// small fixed-size storage so the integrand never allocates.
struct Prepared {
  int d;
  double c[2], k[2], a[2][2], ainv[2][2];
  Complex amp;
  double norm;  // det(A)^-1/2

  explicit Prepared(const GaussianPacket& g) : d(g.dim()), amp(g.amp) {
    const Eigen::MatrixXd inv = g.precision.inverse();
    for (int i = 0; i < d; ++i) {
      c[i] = g.center(i);
      k[i] = g.freq(i);
      for (int j = 0; j < d; ++j) {
        a[i][j] = g.precision(i, j);
        ainv[i][j] = inv(i, j);
      }
    }
    norm = 1.0 / std::sqrt(g.precision.determinant());
  }

  static double quad(const double m[2][2], const double* v, int d) {
    double s = 0.0;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) s += v[i] * m[i][j] * v[j];
    }
    return s;
  }

  Complex value(const double* x) const {
    double y[2];
    double kx = 0.0;
    for (int i = 0; i < d; ++i) {
      y[i] = x[i] - c[i];
      kx += k[i] * x[i];
    }
    return amp * std::exp(-std::numbers::pi * quad(a, y, d)) * e(kx);
  }

  Complex fourier(const double* p) const {
    double dp[2];
    double cd = 0.0;
    for (int i = 0; i < d; ++i) {
      dp[i] = p[i] - k[i];
      cd += c[i] * dp[i];
    }
    return amp * norm * std::exp(-std::numbers::pi * quad(ainv, dp, d)) * e(-cd);
  }
};

// Adaptive bisection on the 31-point Gauss-Kronrod rule with an absolute
// error target. Boost's own driver measures error relative to the estimate,
// which never terminates when the integral cancels to almost nothing.
template <class F>
Complex bisect(F& fn, double a, double b, double tol, unsigned depth) {
  using boost::math::quadrature::gauss_kronrod;
  double err = 0.0;
  const Complex r = gauss_kronrod<double, 31>::integrate(fn, a, b, 0, 0.0, &err);
  if (depth == 0 || err <= tol) return r;
  const double mid = 0.5 * (a + b);
  return bisect(fn, a, mid, 0.5 * tol, depth - 1) + bisect(fn, mid, b, 0.5 * tol, depth - 1);
}

}  // namespace

Complex star_at(const GaussianPacket& f, const GaussianPacket& g, const Eigen::MatrixXd& sigma,
                double theta, const Eigen::VectorXd& q, const QuadratureOptions& opt) {
  f.validate();
  g.validate();
  const int d = f.dim();
  if (g.dim() != d || q.size() != d || sigma.rows() != d || sigma.cols() != d) {
    throw std::invalid_argument("star_at: dimension mismatch");
  }
  if (d > 2) throw std::invalid_argument("star_at: nested quadrature supports d <= 2");
  // The modulus of the integrand is a Gaussian in p with precision
  //   M = theta^2 sigma^t A_f sigma + A_g^-1
  // and center p*; integrate over the box where it exceeds e^-40 of its peak.
  const Eigen::MatrixXd ts = theta * sigma;
  const Eigen::MatrixXd ag_inv = g.precision.inverse();
  const Eigen::MatrixXd m = ts.transpose() * f.precision * ts + ag_inv;
  const Eigen::MatrixXd m_inv = m.inverse();
  const Eigen::VectorXd center = m_inv * (ts.transpose() * f.precision * (q - f.center) + ag_inv * g.freq);
  double lo[2];
  double hi[2];
  for (int i = 0; i < d; ++i) {
    const double half = std::sqrt(40.0 * m_inv(i, i) / std::numbers::pi);
    lo[i] = center(i) - half;
    hi[i] = center(i) + half;
  }

  // |f * g| <= |amp_f amp_g| everywhere, so the error target is absolute.
  // Each inner integral gets a share scaled by the outer interval length.
  const double target = opt.tolerance * std::abs(f.amp * g.amp);

  const Prepared pf(f);
  const Prepared pg(g);
  double qv[2];
  double tsm[2][2];
  for (int i = 0; i < d; ++i) {
    qv[i] = q(i);
    for (int j = 0; j < d; ++j) tsm[i][j] = ts(i, j);
  }
  double p[2] = {0.0, 0.0};
  auto integrand = [&]() {
    double x[2];
    double qp = 0.0;
    for (int i = 0; i < d; ++i) {
      double s = 0.0;
      for (int j = 0; j < d; ++j) s += tsm[i][j] * p[j];
      x[i] = qv[i] - s;
      qp += qv[i] * p[i];
    }
    return pf.value(x) * pg.fourier(p) * e(qp);
  };

  // Innermost axis last; each level integrates the next over its own range.
  std::function<Complex(int, double)> level = [&](int axis, double tol) -> Complex {
    const double inner_tol = 0.1 * tol / (hi[axis] - lo[axis]);
    auto slice = [&](double t) {
      p[axis] = t;
      return axis + 1 == d ? integrand() : level(axis + 1, inner_tol);
    };
    return bisect(slice, lo[axis], hi[axis], tol, opt.max_depth);
  };
  return level(0, target);
}

}  // namespace moyal::oracle

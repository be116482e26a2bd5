#include "moyal/semiclassical.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "moyal/errors.hpp"
#include "moyal/star.hpp"

namespace moyal {

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw DimensionError("fit_slope: length mismatch");
  const auto n = static_cast<double>(x.size());
  if (x.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

SweepResult semiclassical_sweep(const GridFunction& f, const GridFunction& g, const SkewForm& sigma,
                                const std::vector<double>& thetas) {
  if (thetas.empty()) throw InvariantError("theta list is empty");
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (!(thetas[i] > 0.0)) throw InvariantError("theta values must be positive");
    if (i > 0 && !(thetas[i] < thetas[i - 1])) throw InvariantError("theta list must be strictly decreasing");
  }
  require_same_lattice(f.spec(), g.spec(), "semiclassical_sweep");

  const GridFunction fg = pointwise(f, g);
  // (1/(pi i)) {f, g}_sigma; note 1/(pi i) = -i/pi
  const GridFunction bracket = poisson_bracket(f, g, sigma) * Complex{0.0, -1.0 / std::numbers::pi};

  SweepResult out;
  std::vector<double> lt;
  std::vector<double> l1;
  std::vector<double> l2;
  for (double theta : thetas) {
    const GridFunction ft = f.with_theta(theta);
    const GridFunction gt = g.with_theta(theta);
    const GridFunction a = star_product(ft, gt, sigma);
    const GridFunction b = star_product(gt, ft, sigma);
    SweepRow row;
    row.theta = theta;
    row.d1 = norm_l2(a - fg);
    row.d2 = norm_l2((a - b) * Complex{1.0 / theta, 0.0} + bracket);
    out.rows.push_back(row);
    lt.push_back(std::log(theta));
    l1.push_back(std::log(row.d1));
    l2.push_back(std::log(row.d2));
  }
  out.slope_d1 = fit_slope(lt, l1);
  out.slope_d2 = fit_slope(lt, l2);
  return out;
}

}  // namespace moyal

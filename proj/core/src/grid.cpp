#include "moyal/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "moyal/errors.hpp"

namespace moyal {

void GridSpec::validate() const {
  if (dim < 1) throw InvariantError("grid dimension must be >= 1");
  if (n < 8 || (n & (n - 1)) != 0) {
    throw InvariantError("points per axis must be a power of two >= 8, got " + std::to_string(n));
  }
  if (!(length > 0.0) || !std::isfinite(length)) throw InvariantError("box length must be positive");
  if (!(theta > 0.0) || !std::isfinite(theta)) throw InvariantError("theta must be positive");
}

std::size_t GridSpec::size() const {
  std::size_t s = 1;
  for (int i = 0; i < dim; ++i) s *= static_cast<std::size_t>(n);
  return s;
}

std::vector<double> GridSpec::point(std::size_t index) const {
  std::vector<double> x(static_cast<std::size_t>(dim));
  for (int axis = dim - 1; axis >= 0; --axis) {
    x[static_cast<std::size_t>(axis)] = coordinate(static_cast<int>(index % static_cast<std::size_t>(n)));
    index /= static_cast<std::size_t>(n);
  }
  return x;
}

std::vector<double> GridSpec::dual_point(std::size_t index) const {
  std::vector<double> p(static_cast<std::size_t>(dim));
  for (int axis = dim - 1; axis >= 0; --axis) {
    p[static_cast<std::size_t>(axis)] = dual_coordinate(static_cast<int>(index % static_cast<std::size_t>(n)));
    index /= static_cast<std::size_t>(n);
  }
  return p;
}

void require_same_lattice(const GridSpec& a, const GridSpec& b, const char* what) {
  if (!a.same_lattice(b)) throw DimensionError(std::string(what) + ": grid specs differ");
}

GridFunction::GridFunction(GridSpec spec) : spec_(spec) {
  spec_.validate();
  values_.assign(spec_.size(), Complex{});
}

GridFunction::GridFunction(GridSpec spec, std::vector<Complex> values)
    : spec_(spec), values_(std::move(values)) {
  spec_.validate();
  if (values_.size() != spec_.size()) throw InvariantError("value count does not match N^d");
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw InvariantError("grid function has non-finite entries");
    }
  }
}

GridFunction GridFunction::sample(const GridSpec& spec,
                                  const std::function<Complex(std::span<const double>)>& fn) {
  GridFunction f(spec);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto x = spec.point(i);
    f.values_[i] = fn(x);
  }
  return f;
}

GridFunction GridFunction::sample_dual(const GridSpec& spec,
                                       const std::function<Complex(std::span<const double>)>& fn) {
  GridFunction f(spec);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto p = spec.dual_point(i);
    f.values_[i] = fn(p);
  }
  return f;
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
  require_same_lattice(spec_, other.spec_, "grid addition");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
  require_same_lattice(spec_, other.spec_, "grid subtraction");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

GridFunction& GridFunction::operator*=(Complex c) {
  for (auto& v : values_) v *= c;
  return *this;
}

GridFunction GridFunction::with_theta(double theta) const {
  GridSpec s = spec_;
  s.theta = theta;
  return GridFunction(s, values_);
}

GridFunction pointwise(const GridFunction& a, const GridFunction& b) {
  require_same_lattice(a.spec(), b.spec(), "pointwise product");
  GridFunction out(a.spec());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

double norm_l2(const GridFunction& f) {
  double s = 0.0;
  for (const auto& v : f.values()) s += std::norm(v);
  return std::sqrt(s * std::pow(f.spec().spacing(), f.spec().dim));
}

double max_abs(const GridFunction& f) {
  double m = 0.0;
  for (const auto& v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

double relative_l2(const GridFunction& a, const GridFunction& b) {
  return norm_l2(a - b) / norm_l2(b);
}

double norm_l2_ball(const GridFunction& f, double radius) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto x = f.spec().point(i);
    double r2 = 0.0;
    for (double c : x) r2 += c * c;
    if (r2 <= radius * radius) s += std::norm(f[i]);
  }
  return std::sqrt(s * std::pow(f.spec().spacing(), f.spec().dim));
}

double relative_l2_ball(const GridFunction& a, const GridFunction& b, double radius) {
  return norm_l2_ball(a - b, radius) / norm_l2_ball(b, radius);
}

}  // namespace moyal

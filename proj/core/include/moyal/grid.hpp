#pragma once

// Discretized functions on a periodic d-dimensional box. Lattice nodes sit at
// x_j = -L/2 + j L/N on every axis; values are stored row-major (last axis
// fastest). The dual lattice used by fft_forward sits at p_m = (m - N/2)/L.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace moyal {

using Complex = std::complex<double>;

struct GridSpec {
  int dim = 2;
  int n = 64;          ///< points per axis, a power of two >= 8
  double length = 8.0; ///< box side L
  double theta = 1.0;  ///< deformation scale multiplying sigma

  /// Throws InvariantError when the spec is unusable.
  void validate() const;

  std::size_t size() const;
  double spacing() const { return length / n; }
  double coordinate(int j) const { return -0.5 * length + j * spacing(); }
  double dual_coordinate(int m) const { return (m - n / 2) / length; }
  /// Lattice point of a flat index.
  std::vector<double> point(std::size_t index) const;
  std::vector<double> dual_point(std::size_t index) const;

  /// Same lattice (dim, n, length); theta may differ.
  bool same_lattice(const GridSpec& other) const {
    return dim == other.dim && n == other.n && length == other.length;
  }
  bool operator==(const GridSpec&) const = default;
};

class GridFunction {
 public:
  explicit GridFunction(GridSpec spec);
  GridFunction(GridSpec spec, std::vector<Complex> values);

  /// Samples fn at every lattice point.
  static GridFunction sample(const GridSpec& spec,
                             const std::function<Complex(std::span<const double>)>& fn);
  /// Samples fn at every dual lattice point.
  static GridFunction sample_dual(const GridSpec& spec,
                                  const std::function<Complex(std::span<const double>)>& fn);

  const GridSpec& spec() const { return spec_; }
  std::span<const Complex> values() const { return values_; }
  std::span<Complex> values() { return values_; }
  std::size_t size() const { return values_.size(); }

  const Complex& operator[](std::size_t i) const { return values_[i]; }
  Complex& operator[](std::size_t i) { return values_[i]; }

  GridFunction& operator+=(const GridFunction& other);
  GridFunction& operator-=(const GridFunction& other);
  GridFunction& operator*=(Complex c);

  friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
  friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
  friend GridFunction operator*(GridFunction a, Complex c) { return a *= c; }
  friend GridFunction operator*(Complex c, GridFunction a) { return a *= c; }

  GridFunction with_theta(double theta) const;

 private:
  GridSpec spec_;
  std::vector<Complex> values_;
};

/// Pointwise product.
GridFunction pointwise(const GridFunction& a, const GridFunction& b);

/// Grid L2 norm with weight (L/N)^d.
double norm_l2(const GridFunction& f);
double max_abs(const GridFunction& f);
/// ||a - b||_2 / ||b||_2.
double relative_l2(const GridFunction& a, const GridFunction& b);

/// Restriction of the L2 norm to lattice points inside the ball |x| <= radius.
double norm_l2_ball(const GridFunction& f, double radius);
double relative_l2_ball(const GridFunction& a, const GridFunction& b, double radius);

/// Throws DimensionError unless the two lattices agree.
void require_same_lattice(const GridSpec& a, const GridSpec& b, const char* what);

}  // namespace moyal

#pragma once

// Vector space / dual bookkeeping over a pseudo-Euclidean spacetime: Lorentz
// transforms, skew forms (operators V' -> V), their orbit under the Lorentz
// group, the stabilizer of a form and the central functions Q_ab.
//
// Index 0 is the time axis. A boost along axis k mixes coordinates 0 and k;
// a rotation in plane (i, j) mixes two axes of equal metric sign.

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "moyal/random.hpp"

namespace moyal {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

class Spacetime {
 public:
  /// Minkowski space of dimension 4, signature (+,-,-,-).
  Spacetime();
  Spacetime(int dim, std::vector<int> metric);

  /// Signature (+,-,...,-) in the given dimension.
  static Spacetime minkowski(int dim);

  int dim() const { return dim_; }
  const std::vector<int>& metric() const { return metric_; }
  Mat eta() const;

  bool operator==(const Spacetime&) const = default;

 private:
  int dim_;
  std::vector<int> metric_;
};

/// Element of the dual space V'.
struct Covector {
  Vec coords;

  Covector() = default;
  explicit Covector(Vec c);
  Covector(std::initializer_list<double> c);

  int dim() const { return static_cast<int>(coords.size()); }
};

/// Element of V.
struct Vector {
  Vec coords;

  Vector() = default;
  explicit Vector(Vec c);
  Vector(std::initializer_list<double> c);

  int dim() const { return static_cast<int>(coords.size()); }
};

/// Pairing v . p between V and V'.
double pair(const Vector& v, const Covector& p);

inline constexpr double kLorentzTolerance = 1e-12;

class LorentzTransform {
 public:
  /// Throws InvariantError unless max|T^t eta T - eta| <= tol.
  LorentzTransform(const Spacetime& st, Mat matrix,
                   double tol = kLorentzTolerance);

  static LorentzTransform identity(const Spacetime& st);

  const Mat& matrix() const { return matrix_; }
  const Spacetime& spacetime() const { return spacetime_; }
  int dim() const { return spacetime_.dim(); }

  /// Largest entry of |T^t eta T - eta|.
  double metric_defect() const;
  /// Largest singular value.
  double operator_norm() const;

  LorentzTransform inverse() const;
  Vector apply(const Vector& x) const;
  /// alpha o T, i.e. T^t alpha.
  Covector pullback(const Covector& alpha) const;

  friend LorentzTransform operator*(const LorentzTransform& a,
                                    const LorentzTransform& b);
  friend LorentzTransform make_boost(const Spacetime& st, int axis, double rapidity);

 private:
  struct Unchecked {};
  LorentzTransform(Unchecked, Spacetime st, Mat matrix);

  Spacetime spacetime_;
  Mat matrix_;
};

class SkewForm {
 public:
  /// Throws InvariantError unless matrix is square with m(i,j) == -m(j,i)
  /// exactly (zero diagonal).
  explicit SkewForm(Mat matrix);

  /// Zero form of the given dimension.
  static SkewForm zero(int dim);

  const Mat& matrix() const { return matrix_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

  bool invertible(double tol = 1e-12) const;
  /// Throws InvariantError if not invertible.
  void require_invertible(double tol = 1e-12) const;

  SkewForm scaled(double factor) const;
  /// The vector sigma(alpha).
  Vector apply(const Covector& alpha) const;

  bool operator==(const SkewForm& other) const {
    return matrix_ == other.matrix_;
  }

 private:
  Mat matrix_;
};

/// Block-diagonal form with dim/2 blocks [[0,1],[-1,0]].
SkewForm standard_skew(int dim);
SkewForm standard_skew(const Spacetime& st);

/// T sigma T^t, re-skewed from its upper triangle.
SkewForm act_on_form(const LorentzTransform& t, const SkewForm& sigma);

LorentzTransform make_boost(const Spacetime& st, int axis, double rapidity);
LorentzTransform make_rotation(const Spacetime& st, int i, int j, double angle);
/// Reflects every axis whose metric sign differs from the time axis.
LorentzTransform parity(const Spacetime& st);
LorentzTransform time_reversal(const Spacetime& st);

struct OrbitPoint {
  LorentzTransform transform;
  SkewForm form;
};

/// Random word of length 1..8 in boosts (rapidity in [-1,1]), rotations
/// (angle in [0, 2pi)), parity and time reversal.
LorentzTransform random_lorentz(const Spacetime& st, Rng& rng);

/// n pairs (T, T sigma0 T^t); deterministic for a fixed seed.
std::vector<OrbitPoint> sample_orbit(const Spacetime& st, const SkewForm& sigma0,
                                     int n, std::uint64_t seed);

/// Random elements of the stabilizer of sigma: words of length 1..4 in the
/// one-parameter boost and rotation subgroups that fix sigma (rapidity in
/// [-1/2, 1/2], angle in [0, 2pi)) and in -1 when it fixes sigma. The short
/// words keep products of two samples well conditioned.
std::vector<LorentzTransform> sample_stabilizer(const Spacetime& st, const SkewForm& sigma,
                                                int n, std::uint64_t seed);

/// Q_ab(sigma) = beta(sigma(alpha)) = beta^t sigma alpha. Exactly
/// antisymmetric under swapping alpha and beta.
double q_form(const SkewForm& sigma, const Covector& alpha, const Covector& beta);

double pfaffian(const SkewForm& sigma);

/// (tr((eta sigma)^2), tr((eta sigma)^4), ..., tr((eta sigma)^d), Pf(sigma)^2).
std::vector<double> orbit_invariants(const SkewForm& sigma, const Spacetime& st);

/// True iff max|S sigma S^t - sigma| <= tol.
bool in_stabilizer(const LorentzTransform& s, const SkewForm& sigma, double tol);

}  // namespace moyal

#pragma once

// Group actions on functions over E x V, where E is a finite sample of
// Lorentz transforms and every fiber is a GridFunction on V.
//
// Function-level conventions (pulled back through the point maps):
//   (tau_x F)(T, q)        = F(T, q - T x)
//   (gamma_S F)(T, q)      = F(T S^-1, q)
//   (rho_x^a psi)(T, r)    = psi(T, r - a(T x))
//   (Phi^a psi)(T, q)      = psi(T, a(q))
// With these, Phi^a rho_x^a = tau_x Phi^a and tau_x gamma_S = gamma_S tau_{Sx}
// hold exactly.

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "moyal/geometry.hpp"
#include "moyal/grid.hpp"
#include "moyal/star.hpp"

namespace moyal {

class GroupSample {
 public:
  /// Throws InvariantError for an empty list, or when a declared bound is
  /// exceeded by some operator norm.
  explicit GroupSample(std::vector<LorentzTransform> transforms,
                       std::optional<double> bound = std::nullopt);

  const std::vector<LorentzTransform>& transforms() const { return transforms_; }
  std::size_t size() const { return transforms_.size(); }
  const LorentzTransform& operator[](std::size_t i) const { return transforms_[i]; }
  bool bounded() const { return bound_.has_value(); }
  std::optional<double> bound() const { return bound_; }

  /// Index of a transform equal to t within tol (max entry), if any.
  std::optional<std::size_t> find(const LorentzTransform& t, double tol = 1e-9) const;

 private:
  std::vector<LorentzTransform> transforms_;
  std::optional<double> bound_;
};

class FiberedFunction {
 public:
  /// One fiber per transform, all on the same lattice.
  FiberedFunction(GroupSample sample, std::vector<GridFunction> fibers);

  const GroupSample& sample() const { return sample_; }
  const std::vector<GridFunction>& fibers() const { return fibers_; }
  const GridFunction& fiber(std::size_t i) const { return fibers_[i]; }
  const GridSpec& spec() const { return fibers_.front().spec(); }
  std::size_t size() const { return fibers_.size(); }

 private:
  GroupSample sample_;
  std::vector<GridFunction> fibers_;
};

/// psi(T, r) as one 1-D grid function per sampled T, r in [-L/2, L/2).
class RealLineFunction {
 public:
  RealLineFunction(GroupSample sample, std::vector<GridFunction> fibers);
  /// The same 1-D profile on every fiber.
  static RealLineFunction constant_in_T(GroupSample sample, const GridFunction& profile);

  const GroupSample& sample() const { return sample_; }
  const std::vector<GridFunction>& fibers() const { return fibers_; }
  const GridFunction& fiber(std::size_t i) const { return fibers_[i]; }
  std::size_t size() const { return fibers_.size(); }

 private:
  GroupSample sample_;
  std::vector<GridFunction> fibers_;
};

FiberedFunction tau_act(const Vector& x, const FiberedFunction& f);

/// Fiber at T receives the old fiber at T S^-1. Throws SampleNotClosed
/// unless T S^-1 is in the sample (within 1e-9) for every sampled T.
FiberedFunction gamma_act(const LorentzTransform& s, const FiberedFunction& f);

/// gamma_S with the output carried on the sample {T S}: the fiber at T S is
/// the old fiber at T. Defined for every S.
FiberedFunction gamma_reindex(const LorentzTransform& s, const FiberedFunction& f);

RealLineFunction rho_act(const Covector& alpha, const Vector& x, const RealLineFunction& psi);

/// Fibers q -> psi(T, alpha(q)) on the given lattice, by 1-D spectral
/// interpolation of psi (periodic with period L of psi's grid).
FiberedFunction phi_alpha(const Covector& alpha, const RealLineFunction& psi, const GridSpec& spec);

/// Max entry difference; throws DimensionError on shape mismatch.
double max_defect(const FiberedFunction& a, const FiberedFunction& b);

/// || Phi^a(rho_x^a psi) - tau_x Phi^a psi ||_max.
double check_phi_equivariance(const Covector& alpha, const Vector& x, const RealLineFunction& psi,
                              const GridSpec& spec);

/// || tau_x gamma_S F - gamma_S tau_{Sx} F ||_max. Both sides live on the
/// re-indexed sample {T S}.
double check_gamma_covariance(const LorentzTransform& s, const Vector& x, const FiberedFunction& f);

/// Fibers listed in indices, in that order. Throws InvariantError when empty
/// and DimensionError for an out-of-range index.
FiberedFunction restrict_to_E(const FiberedFunction& f, const std::vector<std::size_t>& indices);

struct ModulusRow {
  double x_norm = 0.0;  ///< Euclidean |x|
  double modulus = 0.0; ///< sup_{T, r} |phi(r - a(T x)) - phi(r)|
  double bound = 0.0;   ///< Lip(phi) sup_T |T^t a| |x|
};

/// Lipschitz constant of phi over [lo, hi], by finite differences on
/// `samples` equally spaced points.
double lipschitz_estimate(const std::function<Complex(double)>& phi, double lo, double hi,
                          std::size_t samples = 4097);

/// One row per x. The r sup runs over r_grid; lip enters the bound column.
std::vector<ModulusRow> modulus_of_continuity(const Covector& alpha,
                                              const std::function<Complex(double)>& phi,
                                              const GroupSample& e, const std::vector<Vector>& xs,
                                              const std::vector<double>& r_grid, double lip);

/// Fiberwise star_product with sigma_T = T sigma0 T^t.
FiberedFunction fibered_star_product(const FiberedFunction& f, const FiberedFunction& g,
                                     const SkewForm& sigma0, Parallelism par = {});

/// Relative L2 defect per fiber of
///   fibered_star(Phi^a psi1, Phi^b psi2) against Phi^a psi1 . Phi^b psi2.
/// The pointwise-product theorem is the case a = b.
std::vector<double> pointwise_defect(const Covector& alpha, const RealLineFunction& psi1,
                                     const Covector& beta, const RealLineFunction& psi2,
                                     const SkewForm& sigma0, const GridSpec& spec);

/// Max over fibers of pointwise_defect(alpha, psi1, alpha, psi2).
double check_pointwise_theorem(const Covector& alpha, const RealLineFunction& psi1,
                               const RealLineFunction& psi2, const SkewForm& sigma0,
                               const GridSpec& spec);

using OrbitTable = std::vector<std::pair<SkewForm, GridFunction>>;

/// Fiber T -> h(T sigma0 T^t).
FiberedFunction lift_from_sigma(const std::function<GridFunction(const SkewForm&)>& h,
                                const GroupSample& e, const SkewForm& sigma0);

/// As above with h tabulated; an orbit point matches a table entry within
/// tol (max entry). Throws MissingOrbitPoint otherwise.
FiberedFunction lift_from_sigma(const OrbitTable& h, const GroupSample& e, const SkewForm& sigma0,
                                double tol = 1e-9);

/// (T sigma0 T^t, F_T) for every sampled T.
OrbitTable evaluate_on_orbit(const FiberedFunction& f, const SkewForm& sigma0);

}  // namespace moyal

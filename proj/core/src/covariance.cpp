#include "moyal/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "moyal/errors.hpp"
#include "moyal/spectral.hpp"

namespace moyal {

namespace {

double max_entry_diff(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  return (a - b).cwiseAbs().maxCoeff();
}

void require_fiber_count(const GroupSample& sample, std::size_t fibers, const char* what) {
  if (sample.size() != fibers) {
    throw DimensionError(std::string(what) + ": need one fiber per sampled transform");
  }
}

GridFunction shifted(const GridFunction& f, const Vec& s) {
  return spectral_shift(f, std::span<const double>(s.data(), static_cast<std::size_t>(s.size())));
}

}  // namespace

GroupSample::GroupSample(std::vector<LorentzTransform> transforms, std::optional<double> bound)
    : transforms_(std::move(transforms)), bound_(bound) {
  if (transforms_.empty()) throw InvariantError("group sample is empty");
  const int d = transforms_.front().dim();
  for (const auto& t : transforms_) {
    if (t.dim() != d) throw DimensionError("group sample mixes dimensions");
  }
  if (bound_) {
    for (const auto& t : transforms_) {
      if (t.operator_norm() > *bound_) throw InvariantError("sampled transform exceeds the declared bound");
    }
  }
}

std::optional<std::size_t> GroupSample::find(const LorentzTransform& t, double tol) const {
  for (std::size_t i = 0; i < transforms_.size(); ++i) {
    if (max_entry_diff(transforms_[i].matrix(), t.matrix()) <= tol) return i;
  }
  return std::nullopt;
}

FiberedFunction::FiberedFunction(GroupSample sample, std::vector<GridFunction> fibers)
    : sample_(std::move(sample)), fibers_(std::move(fibers)) {
  require_fiber_count(sample_, fibers_.size(), "fibered function");
  for (const auto& f : fibers_) require_same_lattice(fibers_.front().spec(), f.spec(), "fibered function");
}

RealLineFunction::RealLineFunction(GroupSample sample, std::vector<GridFunction> fibers)
    : sample_(std::move(sample)), fibers_(std::move(fibers)) {
  require_fiber_count(sample_, fibers_.size(), "real-line function");
  for (const auto& f : fibers_) {
    if (f.spec().dim != 1) throw DimensionError("real-line function fibers must be 1-D");
  }
}

RealLineFunction RealLineFunction::constant_in_T(GroupSample sample, const GridFunction& profile) {
  std::vector<GridFunction> fibers(sample.size(), profile);
  return RealLineFunction(std::move(sample), std::move(fibers));
}

FiberedFunction tau_act(const Vector& x, const FiberedFunction& f) {
  if (x.dim() != f.spec().dim) throw DimensionError("tau_act: dimension mismatch");
  std::vector<GridFunction> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Vec tx = f.sample()[i].matrix() * x.coords;
    out.push_back(shifted(f.fiber(i), tx));
  }
  return FiberedFunction(f.sample(), std::move(out));
}

FiberedFunction gamma_act(const LorentzTransform& s, const FiberedFunction& f) {
  const LorentzTransform s_inv = s.inverse();
  std::vector<GridFunction> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto j = f.sample().find(f.sample()[i] * s_inv);
    if (!j) throw SampleNotClosed("gamma_act: T S^-1 is not in the sample for fiber " + std::to_string(i));
    out.push_back(f.fiber(*j));
  }
  return FiberedFunction(f.sample(), std::move(out));
}

FiberedFunction gamma_reindex(const LorentzTransform& s, const FiberedFunction& f) {
  std::vector<LorentzTransform> moved;
  moved.reserve(f.size());
  for (const auto& t : f.sample().transforms()) moved.push_back(t * s);
  return FiberedFunction(GroupSample(std::move(moved)), f.fibers());
}

RealLineFunction rho_act(const Covector& alpha, const Vector& x, const RealLineFunction& psi) {
  std::vector<GridFunction> out;
  out.reserve(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const LorentzTransform& t = psi.sample()[i];
    if (alpha.dim() != t.dim() || x.dim() != t.dim()) throw DimensionError("rho_act: dimension mismatch");
    Vec s(1);
    s(0) = alpha.coords.dot(t.matrix() * x.coords);
    out.push_back(shifted(psi.fiber(i), s));
  }
  return RealLineFunction(psi.sample(), std::move(out));
}

FiberedFunction phi_alpha(const Covector& alpha, const RealLineFunction& psi, const GridSpec& spec) {
  if (alpha.dim() != spec.dim) throw DimensionError("phi_alpha: dimension mismatch");
  std::vector<GridFunction> out;
  out.reserve(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const SpectralInterpolant interp(psi.fiber(i));
    out.push_back(GridFunction::sample(spec, [&](std::span<const double> q) {
      double r = 0.0;
      for (int a = 0; a < spec.dim; ++a) r += alpha.coords(a) * q[static_cast<std::size_t>(a)];
      return interp(std::span<const double>(&r, 1));
    }));
  }
  return FiberedFunction(psi.sample(), std::move(out));
}

double max_defect(const FiberedFunction& a, const FiberedFunction& b) {
  if (a.size() != b.size()) throw DimensionError("max_defect: fiber counts differ");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, max_abs(a.fiber(i) - b.fiber(i)));
  return m;
}

double check_phi_equivariance(const Covector& alpha, const Vector& x, const RealLineFunction& psi,
                              const GridSpec& spec) {
  const FiberedFunction lhs = phi_alpha(alpha, rho_act(alpha, x, psi), spec);
  const FiberedFunction rhs = tau_act(x, phi_alpha(alpha, psi, spec));
  return max_defect(lhs, rhs);
}

double check_gamma_covariance(const LorentzTransform& s, const Vector& x, const FiberedFunction& f) {
  const Vector sx(s.matrix() * x.coords);
  const FiberedFunction lhs = tau_act(x, gamma_reindex(s, f));
  const FiberedFunction rhs = gamma_reindex(s, tau_act(sx, f));
  return max_defect(lhs, rhs);
}

FiberedFunction restrict_to_E(const FiberedFunction& f, const std::vector<std::size_t>& indices) {
  if (indices.empty()) throw InvariantError("restriction to an empty subset");
  std::vector<LorentzTransform> ts;
  std::vector<GridFunction> fibers;
  for (std::size_t i : indices) {
    if (i >= f.size()) throw DimensionError("restriction index out of range");
    ts.push_back(f.sample()[i]);
    fibers.push_back(f.fiber(i));
  }
  return FiberedFunction(GroupSample(std::move(ts), f.sample().bound()), std::move(fibers));
}

double lipschitz_estimate(const std::function<Complex(double)>& phi, double lo, double hi,
                          std::size_t samples) {
  if (samples < 2 || !(hi > lo)) throw InvariantError("lipschitz_estimate: empty interval");
  const double h = (hi - lo) / static_cast<double>(samples - 1);
  double lip = 0.0;
  Complex prev = phi(lo);
  for (std::size_t i = 1; i < samples; ++i) {
    const Complex cur = phi(lo + h * static_cast<double>(i));
    lip = std::max(lip, std::abs(cur - prev) / h);
    prev = cur;
  }
  return lip;
}

std::vector<ModulusRow> modulus_of_continuity(const Covector& alpha,
                                              const std::function<Complex(double)>& phi,
                                              const GroupSample& e, const std::vector<Vector>& xs,
                                              const std::vector<double>& r_grid, double lip) {
  double sup_pull = 0.0;
  for (const auto& t : e.transforms()) {
    if (alpha.dim() != t.dim()) throw DimensionError("modulus_of_continuity: dimension mismatch");
    sup_pull = std::max(sup_pull, (t.matrix().transpose() * alpha.coords).norm());
  }
  std::vector<Complex> base(r_grid.size());
  for (std::size_t k = 0; k < r_grid.size(); ++k) base[k] = phi(r_grid[k]);

  std::vector<ModulusRow> rows;
  rows.reserve(xs.size());
  for (const auto& x : xs) {
    ModulusRow row;
    row.x_norm = x.coords.norm();
    for (const auto& t : e.transforms()) {
      const double s = alpha.coords.dot(t.matrix() * x.coords);
      for (std::size_t k = 0; k < r_grid.size(); ++k) {
        row.modulus = std::max(row.modulus, std::abs(phi(r_grid[k] - s) - base[k]));
      }
    }
    row.bound = lip * sup_pull * row.x_norm;
    rows.push_back(row);
  }
  return rows;
}

FiberedFunction fibered_star_product(const FiberedFunction& f, const FiberedFunction& g,
                                     const SkewForm& sigma0, Parallelism par) {
  if (f.size() != g.size()) throw DimensionError("fibered_star_product: fiber counts differ");
  if (!(f.spec() == g.spec())) throw DimensionError("fibered_star_product: grid specs differ");
  std::vector<GridFunction> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (max_entry_diff(f.sample()[i].matrix(), g.sample()[i].matrix()) > 1e-12) {
      throw DimensionError("fibered_star_product: samples differ");
    }
    const SkewForm sigma_t = act_on_form(f.sample()[i], sigma0);
    out.push_back(star_product(f.fiber(i), g.fiber(i), sigma_t, par));
  }
  return FiberedFunction(f.sample(), std::move(out));
}

std::vector<double> pointwise_defect(const Covector& alpha, const RealLineFunction& psi1,
                                     const Covector& beta, const RealLineFunction& psi2,
                                     const SkewForm& sigma0, const GridSpec& spec) {
  const FiberedFunction a = phi_alpha(alpha, psi1, spec);
  const FiberedFunction b = phi_alpha(beta, psi2, spec);
  const FiberedFunction prod = fibered_star_product(a, b, sigma0);
  std::vector<double> defects;
  defects.reserve(prod.size());
  for (std::size_t i = 0; i < prod.size(); ++i) {
    defects.push_back(relative_l2(prod.fiber(i), pointwise(a.fiber(i), b.fiber(i))));
  }
  return defects;
}

double check_pointwise_theorem(const Covector& alpha, const RealLineFunction& psi1,
                               const RealLineFunction& psi2, const SkewForm& sigma0,
                               const GridSpec& spec) {
  const auto d = pointwise_defect(alpha, psi1, alpha, psi2, sigma0, spec);
  return *std::max_element(d.begin(), d.end());
}

FiberedFunction lift_from_sigma(const std::function<GridFunction(const SkewForm&)>& h,
                                const GroupSample& e, const SkewForm& sigma0) {
  std::vector<GridFunction> fibers;
  fibers.reserve(e.size());
  for (const auto& t : e.transforms()) fibers.push_back(h(act_on_form(t, sigma0)));
  return FiberedFunction(e, std::move(fibers));
}

FiberedFunction lift_from_sigma(const OrbitTable& h, const GroupSample& e, const SkewForm& sigma0,
                                double tol) {
  return lift_from_sigma(
      [&](const SkewForm& sigma) -> GridFunction {
        for (const auto& [key, value] : h) {
          if (max_entry_diff(key.matrix(), sigma.matrix()) <= tol) return value;
        }
        throw MissingOrbitPoint("lift_from_sigma: no table entry for an orbit point");
      },
      e, sigma0);
}

OrbitTable evaluate_on_orbit(const FiberedFunction& f, const SkewForm& sigma0) {
  OrbitTable out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.emplace_back(act_on_form(f.sample()[i], sigma0), f.fiber(i));
  return out;
}

}  // namespace moyal

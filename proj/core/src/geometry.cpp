#include "moyal/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <utility>

#include "moyal/errors.hpp"

namespace moyal {

namespace {

void require_finite(const Vec& v, const char* what) {
  if (!v.allFinite()) throw InvariantError(std::string(what) + " has non-finite entries");
}

void require_dim(int a, int b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension " + std::to_string(a) +
                         " vs " + std::to_string(b));
  }
}

}  // namespace

Spacetime::Spacetime() : Spacetime(minkowski(4)) {}

Spacetime::Spacetime(int dim, std::vector<int> metric)
    : dim_(dim), metric_(std::move(metric)) {
  if (dim_ < 2 || dim_ % 2 != 0) {
    throw DimensionError("spacetime dimension must be even and >= 2, got " +
                         std::to_string(dim_));
  }
  if (static_cast<int>(metric_.size()) != dim_) {
    throw DimensionError("metric length does not match dimension");
  }
  for (int s : metric_) {
    if (s != 1 && s != -1) throw InvariantError("metric entries must be +1 or -1");
  }
}

Spacetime Spacetime::minkowski(int dim) {
  std::vector<int> m(dim > 0 ? static_cast<std::size_t>(dim) : 0, -1);
  if (!m.empty()) m[0] = 1;
  return Spacetime(dim, std::move(m));
}

Mat Spacetime::eta() const {
  Mat e = Mat::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) e(i, i) = metric_[i];
  return e;
}

Covector::Covector(Vec c) : coords(std::move(c)) { require_finite(coords, "covector"); }
Covector::Covector(std::initializer_list<double> c)
    : Covector(Vec(Eigen::Map<const Vec>(c.begin(), static_cast<Eigen::Index>(c.size())))) {}

Vector::Vector(Vec c) : coords(std::move(c)) { require_finite(coords, "vector"); }
Vector::Vector(std::initializer_list<double> c)
    : Vector(Vec(Eigen::Map<const Vec>(c.begin(), static_cast<Eigen::Index>(c.size())))) {}

double pair(const Vector& v, const Covector& p) {
  require_dim(v.dim(), p.dim(), "pairing");
  return v.coords.dot(p.coords);
}

// ---------------------------------------------------------------------------

LorentzTransform::LorentzTransform(Unchecked, Spacetime st, Mat matrix)
    : spacetime_(std::move(st)), matrix_(std::move(matrix)) {}

LorentzTransform::LorentzTransform(const Spacetime& st, Mat matrix, double tol)
    : spacetime_(st), matrix_(std::move(matrix)) {
  if (matrix_.rows() != st.dim() || matrix_.cols() != st.dim()) {
    throw DimensionError("Lorentz matrix must be d x d");
  }
  if (!matrix_.allFinite()) throw InvariantError("Lorentz matrix has non-finite entries");
  const double defect = metric_defect();
  if (defect > tol) {
    throw InvariantError("matrix does not preserve the metric (defect " +
                         std::to_string(defect) + ")");
  }
}

LorentzTransform LorentzTransform::identity(const Spacetime& st) {
  return LorentzTransform(Unchecked{}, st, Mat::Identity(st.dim(), st.dim()));
}

double LorentzTransform::metric_defect() const {
  const Mat eta = spacetime_.eta();
  return (matrix_.transpose() * eta * matrix_ - eta).cwiseAbs().maxCoeff();
}

double LorentzTransform::operator_norm() const {
  Eigen::JacobiSVD<Mat> svd(matrix_);
  return svd.singularValues()(0);
}

LorentzTransform LorentzTransform::inverse() const {
  // T^{-1} = eta T^t eta
  const Mat eta = spacetime_.eta();
  return LorentzTransform(Unchecked{}, spacetime_, eta * matrix_.transpose() * eta);
}

Vector LorentzTransform::apply(const Vector& x) const {
  require_dim(x.dim(), dim(), "Lorentz apply");
  return Vector(Vec(matrix_ * x.coords));
}

Covector LorentzTransform::pullback(const Covector& alpha) const {
  require_dim(alpha.dim(), dim(), "Lorentz pullback");
  return Covector(Vec(matrix_.transpose() * alpha.coords));
}

LorentzTransform operator*(const LorentzTransform& a, const LorentzTransform& b) {
  if (!(a.spacetime_ == b.spacetime_)) throw DimensionError("composing transforms of different spacetimes");
  return LorentzTransform(LorentzTransform::Unchecked{}, a.spacetime_, a.matrix_ * b.matrix_);
}

// ---------------------------------------------------------------------------

SkewForm::SkewForm(Mat matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw DimensionError("skew form must be square");
  if (!matrix_.allFinite()) throw InvariantError("skew form has non-finite entries");
  for (Eigen::Index i = 0; i < matrix_.rows(); ++i) {
    for (Eigen::Index j = i; j < matrix_.cols(); ++j) {
      if (matrix_(i, j) != -matrix_(j, i)) {
        throw InvariantError("matrix is not exactly skew-symmetric");
      }
    }
  }
}

SkewForm SkewForm::zero(int dim) { return SkewForm(Mat::Zero(dim, dim)); }

bool SkewForm::invertible(double tol) const {
  if (matrix_.rows() == 0) return false;
  return std::abs(matrix_.determinant()) > tol;
}

void SkewForm::require_invertible(double tol) const {
  if (!invertible(tol)) throw InvariantError("skew form is singular");
}

SkewForm SkewForm::scaled(double factor) const { return SkewForm(Mat(factor * matrix_)); }

Vector SkewForm::apply(const Covector& alpha) const {
  require_dim(alpha.dim(), dim(), "skew form apply");
  return Vector(Vec(matrix_ * alpha.coords));
}

SkewForm standard_skew(int dim) {
  if (dim < 2 || dim % 2 != 0) {
    throw DimensionError("standard skew form needs an even dimension >= 2, got " +
                         std::to_string(dim));
  }
  Mat m = Mat::Zero(dim, dim);
  for (int k = 0; k < dim; k += 2) {
    m(k, k + 1) = 1.0;
    m(k + 1, k) = -1.0;
  }
  return SkewForm(std::move(m));
}

SkewForm standard_skew(const Spacetime& st) { return standard_skew(st.dim()); }

SkewForm act_on_form(const LorentzTransform& t, const SkewForm& sigma) {
  require_dim(t.dim(), sigma.dim(), "act_on_form");
  const Mat r = t.matrix() * sigma.matrix() * t.matrix().transpose();
  const int d = sigma.dim();
  Mat s = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const double v = 0.5 * (r(i, j) - r(j, i));
      s(i, j) = v;
      s(j, i) = -v;
    }
  }
  return SkewForm(std::move(s));
}

LorentzTransform make_boost(const Spacetime& st, int axis, double rapidity) {
  if (axis < 1 || axis >= st.dim()) throw DimensionError("boost axis out of range");
  if (st.metric()[axis] == st.metric()[0]) {
    throw InvariantError("boost axis must have metric sign opposite to the time axis");
  }
  Mat m = Mat::Identity(st.dim(), st.dim());
  m(0, 0) = m(axis, axis) = std::cosh(rapidity);
  m(0, axis) = m(axis, 0) = std::sinh(rapidity);
  // Lorentz by construction; the rounding in cosh^2 - sinh^2 grows like
  // e^(2 |rapidity|) and would trip the absolute check past rapidity ~4
  return LorentzTransform(LorentzTransform::Unchecked{}, st, std::move(m));
}

LorentzTransform make_rotation(const Spacetime& st, int i, int j, double angle) {
  if (i < 0 || j < 0 || i >= st.dim() || j >= st.dim() || i == j) {
    throw DimensionError("rotation plane out of range");
  }
  if (st.metric()[i] != st.metric()[j]) {
    throw InvariantError("rotation plane must span axes of equal metric sign");
  }
  Mat m = Mat::Identity(st.dim(), st.dim());
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  m(i, i) = c;
  m(j, j) = c;
  m(i, j) = -s;
  m(j, i) = s;
  return LorentzTransform(st, std::move(m));
}

LorentzTransform parity(const Spacetime& st) {
  Mat m = Mat::Identity(st.dim(), st.dim());
  for (int k = 0; k < st.dim(); ++k) {
    if (st.metric()[k] != st.metric()[0]) m(k, k) = -1.0;
  }
  return LorentzTransform(st, std::move(m));
}

LorentzTransform time_reversal(const Spacetime& st) {
  Mat m = Mat::Identity(st.dim(), st.dim());
  m(0, 0) = -1.0;
  return LorentzTransform(st, std::move(m));
}

LorentzTransform random_lorentz(const Spacetime& st, Rng& rng) {
  std::vector<int> boost_axes;
  std::vector<std::pair<int, int>> planes;
  for (int k = 1; k < st.dim(); ++k) {
    if (st.metric()[k] != st.metric()[0]) boost_axes.push_back(k);
  }
  for (int i = 0; i < st.dim(); ++i) {
    for (int j = i + 1; j < st.dim(); ++j) {
      if (st.metric()[i] == st.metric()[j]) planes.emplace_back(i, j);
    }
  }

  LorentzTransform t = LorentzTransform::identity(st);
  const int length = rng.integer(1, 8);
  for (int letter = 0; letter < length; ++letter) {
    // 9/20 boost, 9/20 rotation, 1/20 parity, 1/20 time reversal
    const auto kind = rng.below(20);
    if (kind < 9 && !boost_axes.empty()) {
      const int axis = boost_axes[rng.below(boost_axes.size())];
      t = t * make_boost(st, axis, rng.uniform(-1.0, 1.0));
    } else if (kind < 18 && !planes.empty()) {
      const auto [i, j] = planes[rng.below(planes.size())];
      t = t * make_rotation(st, i, j, rng.uniform(0.0, 2.0 * std::numbers::pi));
    } else if (kind < 18) {
      // no rotation planes (d = 2): fall back to a boost
      const int axis = boost_axes[rng.below(boost_axes.size())];
      t = t * make_boost(st, axis, rng.uniform(-1.0, 1.0));
    } else if (kind == 18) {
      t = t * parity(st);
    } else {
      t = t * time_reversal(st);
    }
  }
  return t;
}

std::vector<OrbitPoint> sample_orbit(const Spacetime& st, const SkewForm& sigma0,
                                     int n, std::uint64_t seed) {
  if (n < 1) throw InvariantError("sample_orbit needs n >= 1");
  require_dim(st.dim(), sigma0.dim(), "sample_orbit");
  Rng rng(seed);
  std::vector<OrbitPoint> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    LorentzTransform t = random_lorentz(st, rng);
    SkewForm form = act_on_form(t, sigma0);
    out.push_back({std::move(t), std::move(form)});
  }
  return out;
}

std::vector<LorentzTransform> sample_stabilizer(const Spacetime& st, const SkewForm& sigma,
                                                int n, std::uint64_t seed) {
  if (n < 1) throw InvariantError("sample_stabilizer needs n >= 1");
  require_dim(st.dim(), sigma.dim(), "sample_stabilizer");
  const double tol = 1e-12 * std::max(1.0, sigma.matrix().cwiseAbs().maxCoeff());
  // a one-parameter subgroup is kept when two generic members fix sigma
  std::vector<std::function<LorentzTransform(Rng&)>> letters;
  for (int k = 1; k < st.dim(); ++k) {
    if (st.metric()[k] == st.metric()[0]) continue;
    if (in_stabilizer(make_boost(st, k, 0.37), sigma, tol) && in_stabilizer(make_boost(st, k, -0.81), sigma, tol)) {
      letters.emplace_back([&st, k](Rng& r) { return make_boost(st, k, r.uniform(-0.5, 0.5)); });
    }
  }
  for (int i = 0; i < st.dim(); ++i) {
    for (int j = i + 1; j < st.dim(); ++j) {
      if (st.metric()[i] != st.metric()[j]) continue;
      if (in_stabilizer(make_rotation(st, i, j, 0.37), sigma, tol) &&
          in_stabilizer(make_rotation(st, i, j, 2.3), sigma, tol)) {
        letters.emplace_back([&st, i, j](Rng& r) {
          return make_rotation(st, i, j, r.uniform(0.0, 2.0 * std::numbers::pi));
        });
      }
    }
  }
  const LorentzTransform minus_one(st, -Mat::Identity(st.dim(), st.dim()));
  if (in_stabilizer(minus_one, sigma, tol)) {
    letters.emplace_back([minus_one](Rng&) { return minus_one; });
  }

  Rng rng(seed);
  std::vector<LorentzTransform> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    LorentzTransform t = LorentzTransform::identity(st);
    if (!letters.empty()) {
      const int length = rng.integer(1, 4);
      for (int l = 0; l < length; ++l) t = t * letters[rng.below(letters.size())](rng);
    }
    out.push_back(std::move(t));
  }
  return out;
}

double q_form(const SkewForm& sigma, const Covector& alpha, const Covector& beta) {
  require_dim(sigma.dim(), alpha.dim(), "q_form");
  require_dim(sigma.dim(), beta.dim(), "q_form");
  const Mat& s = sigma.matrix();
  const Vec& a = alpha.coords;
  const Vec& b = beta.coords;
  // sum_{i<j} s_ij (b_i a_j - b_j a_i): swapping a and b negates every term
  double q = 0.0;
  for (int i = 0; i < sigma.dim(); ++i) {
    for (int j = i + 1; j < sigma.dim(); ++j) {
      q += s(i, j) * (b(i) * a(j) - b(j) * a(i));
    }
  }
  return q;
}

double pfaffian(const SkewForm& sigma) {
  const int n = sigma.dim();
  if (n % 2 != 0) return 0.0;
  Mat a = sigma.matrix();
  double pf = 1.0;
  // skew Gaussian elimination with partial pivoting
  for (int k = 0; k < n - 1; k += 2) {
    Eigen::Index rel = 0;
    a.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&rel);
    const int kp = k + 1 + static_cast<int>(rel);
    if (kp != k + 1) {
      a.row(k + 1).swap(a.row(kp));
      a.col(k + 1).swap(a.col(kp));
      pf = -pf;
    }
    if (a(k + 1, k) == 0.0) return 0.0;
    pf *= a(k, k + 1);
    if (k + 2 < n) {
      const int m = n - k - 2;
      const Vec tau = a.row(k).tail(m).transpose() / a(k, k + 1);
      const Vec col = a.col(k + 1).tail(m);
      a.bottomRightCorner(m, m) += tau * col.transpose() - col * tau.transpose();
    }
  }
  return pf;
}

std::vector<double> orbit_invariants(const SkewForm& sigma, const Spacetime& st) {
  require_dim(sigma.dim(), st.dim(), "orbit_invariants");
  const Mat m = st.eta() * sigma.matrix();
  const Mat m2 = m * m;
  std::vector<double> out;
  Mat power = m2;
  for (int k = 2; k <= st.dim(); k += 2) {
    out.push_back(power.trace());
    power = power * m2;
  }
  const double pf = pfaffian(sigma);
  out.push_back(pf * pf);
  return out;
}

bool in_stabilizer(const LorentzTransform& s, const SkewForm& sigma, double tol) {
  require_dim(s.dim(), sigma.dim(), "in_stabilizer");
  const Mat r = s.matrix() * sigma.matrix() * s.matrix().transpose();
  return (r - sigma.matrix()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace moyal

#include "moyal/weyl_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "moyal/errors.hpp"

namespace moyal {

namespace {
__extension__ using Int128 = __int128;
}  // namespace

Complex unit_phase(double turns) {
  const double r = turns - std::round(turns);
  const double quarter = 4.0 * r;
  if (quarter == std::round(quarter)) {
    switch (static_cast<int>(quarter)) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case -1: return {0.0, -1.0};
      default: return {-1.0, 0.0};  // r = +-1/2
    }
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * r);
}

Phase::Phase(Complex v) : value(v) {
  if (std::abs(std::abs(v) - 1.0) > 1e-14) throw InvariantError("phase is not of unit modulus");
}

// ---------------------------------------------------------------------------

CovectorKey CovectorKey::from(const Covector& alpha) {
  std::vector<std::int64_t> u(static_cast<std::size_t>(alpha.dim()));
  for (int i = 0; i < alpha.dim(); ++i) {
    const double scaled = alpha.coords(i) / kQuantum;
    if (!(std::abs(scaled) < 0x1p62)) throw InvariantError("covector coordinate too large for key");
    u[static_cast<std::size_t>(i)] = std::llround(scaled);
  }
  return CovectorKey(std::move(u));
}

bool CovectorKey::is_zero() const {
  for (auto v : units_) {
    if (v != 0) return false;
  }
  return true;
}

Covector CovectorKey::covector() const {
  Vec c(dim());
  for (int i = 0; i < dim(); ++i) c(i) = static_cast<double>(units_[static_cast<std::size_t>(i)]) * kQuantum;
  return Covector(std::move(c));
}

CovectorKey CovectorKey::operator+(const CovectorKey& other) const {
  if (dim() != other.dim()) throw DimensionError("adding keys of different dimension");
  std::vector<std::int64_t> u(units_.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (__builtin_add_overflow(units_[i], other.units_[i], &u[i])) {
      throw InvariantError("covector key overflow");
    }
  }
  return CovectorKey(std::move(u));
}

CovectorKey CovectorKey::operator-() const {
  std::vector<std::int64_t> u(units_.size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = -units_[i];
  return CovectorKey(std::move(u));
}

double q_form(const SkewForm& sigma, const CovectorKey& alpha, const CovectorKey& beta) {
  if (sigma.dim() != alpha.dim() || sigma.dim() != beta.dim()) {
    throw DimensionError("q_form: key dimension does not match form");
  }
  const auto& a = alpha.units();
  const auto& b = beta.units();
  const Mat& s = sigma.matrix();
  double q = 0.0;
  for (int i = 0; i < sigma.dim(); ++i) {
    for (int j = i + 1; j < sigma.dim(); ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      const Int128 cross = static_cast<Int128>(b[ui]) * a[uj] -
                           static_cast<Int128>(b[uj]) * a[ui];
      if (cross == 0) continue;
      q += s(i, j) * (static_cast<double>(cross) * 0x1p-64);
    }
  }
  return q;
}

// ---------------------------------------------------------------------------

WeylElement::WeylElement(SkewForm sigma) : sigma_(std::move(sigma)) {}

WeylElement WeylElement::unit(SkewForm sigma) {
  const int d = sigma.dim();
  WeylElement e(std::move(sigma));
  e.terms_.emplace(CovectorKey(std::vector<std::int64_t>(static_cast<std::size_t>(d), 0)),
                   Complex{1.0, 0.0});
  return e;
}

Complex WeylElement::coefficient(const CovectorKey& alpha) const {
  const auto it = terms_.find(alpha);
  return it == terms_.end() ? Complex{} : it->second;
}

void WeylElement::add_term(const CovectorKey& alpha, Complex c) {
  if (alpha.dim() != dim()) throw DimensionError("term key dimension does not match form");
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
    throw InvariantError("non-finite Weyl coefficient");
  }
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) it->second += c;
  if (it->second == Complex{}) terms_.erase(it);
}

void WeylElement::require_same_context(const WeylElement& other) const {
  if (!(sigma_ == other.sigma_)) throw ContextMismatch("Weyl elements over different skew forms");
}

WeylElement& WeylElement::operator+=(const WeylElement& other) {
  require_same_context(other);
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

WeylElement WeylElement::operator+(const WeylElement& other) const {
  WeylElement out = *this;
  out += other;
  return out;
}

WeylElement WeylElement::operator-(const WeylElement& other) const {
  return *this + other.scaled(-1.0);
}

WeylElement WeylElement::scaled(Complex c) const {
  WeylElement out(sigma_);
  for (const auto& [k, v] : terms_) out.add_term(k, v * c);
  return out;
}

double WeylElement::max_abs() const {
  double m = 0.0;
  for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

WeylElement unit_u(const CovectorKey& alpha, const SkewForm& sigma) {
  WeylElement e(sigma);
  e.add_term(alpha, Complex{1.0, 0.0});
  return e;
}

WeylElement unit_u(const Covector& alpha, const SkewForm& sigma) {
  if (alpha.dim() != sigma.dim()) throw DimensionError("unit_u: covector dimension does not match form");
  return unit_u(CovectorKey::from(alpha), sigma);
}

WeylElement mul(const WeylElement& a, const WeylElement& b) {
  if (!(a.sigma() == b.sigma())) throw ContextMismatch("Weyl elements over different skew forms");
  // Contributions landing on one key are summed in a canonical order (by the
  // unordered key pair, then value) so that commuting products agree bit for
  // bit in either order.
  struct Contribution {
    CovectorKey lo;
    CovectorKey hi;
    Complex value;
  };
  std::map<CovectorKey, std::vector<Contribution>> buckets;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const Complex phase = unit_phase(q_form(a.sigma(), ka, kb));
      const bool ordered = ka <= kb;
      buckets[ka + kb].push_back({ordered ? ka : kb, ordered ? kb : ka, ca * cb * phase});
    }
  }
  WeylElement out(a.sigma());
  for (auto& [key, parts] : buckets) {
    std::sort(parts.begin(), parts.end(), [](const Contribution& x, const Contribution& y) {
      if (x.lo != y.lo) return x.lo < y.lo;
      if (x.hi != y.hi) return x.hi < y.hi;
      if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
      return x.value.imag() < y.value.imag();
    });
    Complex sum{};
    for (const auto& part : parts) sum += part.value;
    out.add_term(key, sum);
  }
  return out;
}

WeylElement star(const WeylElement& a) {
  WeylElement out(a.sigma());
  for (const auto& [k, c] : a.terms()) out.add_term(-k, std::conj(c));
  return out;
}

Phase commutator_phase(const Covector& alpha, const Covector& beta, const SkewForm& sigma) {
  return Phase::of_turns(2.0 * q_form(sigma, alpha, beta));
}

Complex eval_function(const WeylElement& a, const Vector& q) {
  if (q.dim() != a.dim()) throw DimensionError("eval_function: point dimension does not match");
  Complex sum{};
  for (const auto& [k, c] : a.terms()) {
    sum += c * unit_phase(pair(q, k.covector()));
  }
  return sum;
}

}  // namespace moyal

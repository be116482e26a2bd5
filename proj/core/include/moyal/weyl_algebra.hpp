#pragma once

// Twisted group algebra of the Weyl unitaries u_alpha at one fixed skew form:
//
//   u_a * u_b = e(Q_ab) u_{a+b},   e(t) = exp(2 pi i t),   Q_ab = b^t sigma a.
//
// Covectors are keyed on a 2^-32 lattice so that key arithmetic (sums,
// negation, the cross products entering Q) is exact integer arithmetic.

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "moyal/geometry.hpp"

namespace moyal {

using Complex = std::complex<double>;

/// e(turns) = exp(2 pi i turns), exact at quarter periods.
Complex unit_phase(double turns);

struct Phase {
  Complex value{1.0, 0.0};

  Phase() = default;
  /// Throws InvariantError if | |v| - 1 | > 1e-14.
  explicit Phase(Complex v);
  static Phase of_turns(double turns) { return Phase(unit_phase(turns)); }
};

class CovectorKey {
 public:
  static constexpr double kQuantum = 0x1p-32;

  CovectorKey() = default;
  explicit CovectorKey(std::vector<std::int64_t> units) : units_(std::move(units)) {}
  /// Rounds every coordinate to the nearest multiple of kQuantum.
  static CovectorKey from(const Covector& alpha);

  const std::vector<std::int64_t>& units() const { return units_; }
  int dim() const { return static_cast<int>(units_.size()); }
  bool is_zero() const;
  Covector covector() const;

  CovectorKey operator+(const CovectorKey& other) const;
  CovectorKey operator-() const;

  auto operator<=>(const CovectorKey&) const = default;

 private:
  std::vector<std::int64_t> units_;
};

/// Q_ab evaluated on keys; cross terms b_i a_j - b_j a_i are formed exactly.
double q_form(const SkewForm& sigma, const CovectorKey& alpha, const CovectorKey& beta);

class WeylElement {
 public:
  using Terms = std::map<CovectorKey, Complex>;

  /// The zero element over sigma.
  explicit WeylElement(SkewForm sigma);

  static WeylElement unit(SkewForm sigma);

  const SkewForm& sigma() const { return sigma_; }
  const Terms& terms() const { return terms_; }
  int dim() const { return sigma_.dim(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient at alpha (zero when absent).
  Complex coefficient(const CovectorKey& alpha) const;

  /// Accumulates c at alpha; exact zeros are pruned.
  void add_term(const CovectorKey& alpha, Complex c);

  WeylElement& operator+=(const WeylElement& other);
  WeylElement operator+(const WeylElement& other) const;
  WeylElement operator-(const WeylElement& other) const;
  WeylElement scaled(Complex c) const;

  /// Largest coefficient modulus.
  double max_abs() const;

  bool operator==(const WeylElement& other) const {
    return sigma_ == other.sigma_ && terms_ == other.terms_;
  }

 private:
  void require_same_context(const WeylElement& other) const;

  SkewForm sigma_;
  Terms terms_;
};

WeylElement unit_u(const Covector& alpha, const SkewForm& sigma);
WeylElement unit_u(const CovectorKey& alpha, const SkewForm& sigma);

/// Bilinear extension of u_a u_b = e(Q_ab) u_{a+b}. Throws ContextMismatch.
WeylElement mul(const WeylElement& a, const WeylElement& b);
inline WeylElement operator*(const WeylElement& a, const WeylElement& b) { return mul(a, b); }

/// (alpha, c) -> (-alpha, conj c).
WeylElement star(const WeylElement& a);

/// u_a u_b u_a^-1 u_b^-1 = e(2 Q_ab).
Phase commutator_phase(const Covector& alpha, const Covector& beta, const SkewForm& sigma);

/// sum c_alpha e(alpha . q).
Complex eval_function(const WeylElement& a, const Vector& q);

}  // namespace moyal

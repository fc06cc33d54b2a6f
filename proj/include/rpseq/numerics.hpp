#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "rpseq/complex.hpp"
#include "rpseq/real.hpp"

namespace rpseq {

/// Raised when an operation is applied outside its mathematical domain
/// (argument of zero, vanishing denominator, violated precondition).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Working precision and the tolerances every verdict is measured against.
struct PrecisionConfig {
  int mantissa_bits = 128;
  /// Magnitudes at or below zero_tol * (scale + 1) count as zero.
  Real zero_tol = Real::pow2(-64, 128);
  /// Largest denominator accepted when recognizing Arg(z) / 2pi as rational.
  long angle_qmax = 512;
  Real angle_tol = Real::pow2(-32, 128);

  /// Defaults derived from the mantissa width: zero_tol = 2^(-bits/2),
  /// angle_tol = 2^(-bits/4).
  static PrecisionConfig with_bits(int bits);

  /// Throws std::invalid_argument when an invariant is broken.
  void validate() const;

  /// |value| <= zero_tol * (scale + 1)
  bool negligible(const Real& magnitude, const Real& scale) const;

  Real real(double v) const { return Real(v, mantissa_bits); }
  Real real(long v) const { return Real(v, mantissa_bits); }
  Complex complex(double re, double im = 0.0) const { return {re, im, mantissa_bits}; }
};

/// The angle 2*pi*q/p with gcd(p, |q|) = 1 and -p/2 < q <= p/2.
/// Argument 0 is (1, 0). p is the angular order p*(z) of any z with this
/// argument.
struct RationalAngle {
  long p = 1;
  long q = 0;

  /// Reduces (q, p) to lowest terms and folds q into (-p/2, p/2].
  static RationalAngle normalized(long q, long p);

  Real radians(mpfr_prec_t bits) const;
  /// "q/p"
  std::string to_string() const;

  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;
};

/// sqrt(|z|) * e^(i Arg(z) / 2) with Arg in (-pi, pi]. The result lies in
/// the open right half-plane or on the nonnegative imaginary axis.
Complex principal_sqrt(const Complex& z);

/// As above, but inputs within zero_tol of the negative real axis are taken
/// to lie on it, which pins the result to the upper half of the imaginary
/// axis.
Complex principal_sqrt(const Complex& z, const PrecisionConfig& cfg);

/// Arg(z) in (-pi, pi]; inputs within zero_tol of the cut map to pi.
/// Throws DomainError for z = 0.
Real principal_arg(const Complex& z, const PrecisionConfig& cfg);

/// Best rational approximation q/p of `turns` by continued-fraction
/// convergents, accepted only when p <= qmax and |turns - q/p| <= tol.
std::optional<RationalAngle> best_rational(const Real& turns, long qmax, const Real& tol);

/// Detects Arg(z) = 2*pi*q/p. Returns nullopt when no convergent with
/// denominator <= cfg.angle_qmax lands within cfg.angle_tol.
/// Throws DomainError when |z| <= cfg.zero_tol.
std::optional<RationalAngle> rational_angle_of(const Complex& z, const PrecisionConfig& cfg);

/// a and b are orthogonal as plane vectors. Zero is perpendicular to all.
bool is_perpendicular(const Complex& a, const Complex& b, const PrecisionConfig& cfg);

/// a and b are collinear as plane vectors. Zero is parallel to all.
bool is_parallel(const Complex& a, const Complex& b, const PrecisionConfig& cfg);

}  // namespace rpseq

#include "rpseq/numerics.hpp"

#include <numeric>
#include <stdexcept>

namespace rpseq {

PrecisionConfig PrecisionConfig::with_bits(int bits) {
  if (bits < 53) throw std::invalid_argument("mantissa_bits must be >= 53");
  PrecisionConfig cfg;
  cfg.mantissa_bits = bits;
  cfg.zero_tol = Real::pow2(-(bits / 2), bits);
  cfg.angle_tol = Real::pow2(-(bits / 4), bits);
  return cfg;
}

void PrecisionConfig::validate() const {
  if (mantissa_bits < 53) throw std::invalid_argument("mantissa_bits must be >= 53");
  if (!(zero_tol.sign() > 0)) throw std::invalid_argument("zero_tol must be > 0");
  if (!(angle_tol.sign() > 0)) throw std::invalid_argument("angle_tol must be > 0");
  if (angle_qmax < 2) throw std::invalid_argument("angle_qmax must be >= 2");
}

bool PrecisionConfig::negligible(const Real& magnitude, const Real& scale) const {
  return magnitude <= zero_tol * (scale + Real(1L, mantissa_bits));
}

RationalAngle RationalAngle::normalized(long q, long p) {
  if (p <= 0) throw std::invalid_argument("angle denominator must be positive");
  const long g = std::gcd(p, q < 0 ? -q : q);
  p /= g;
  q /= g;
  // Fold into (-p/2, p/2].
  q %= p;
  if (2 * q > p) q -= p;
  if (2 * q <= -p) q += p;
  if (q == 0) p = 1;
  return {p, q};
}

Real RationalAngle::radians(mpfr_prec_t bits) const {
  return Real::pi(bits) * (2 * q) / p;
}

std::string RationalAngle::to_string() const {
  return std::to_string(q) + "/" + std::to_string(p);
}

Complex principal_sqrt(const Complex& z) {
  const mpfr_prec_t bits = z.precision();
  if (z.is_zero()) return Complex(bits);
  // w = sqrt((|z| + |re|) / 2)
  const Real w = sqrt((abs(z) + abs(z.re)) / 2L);
  if (z.re.sign() >= 0) return {w, z.im / (2L * w)};
  // Left half-plane: Arg(z)/2 is in (pi/4, pi/2] or (-pi/2, -pi/4).
  const Real re = abs(z.im) / (2L * w);
  return {re, z.im.sign() < 0 ? -w : w};
}

Complex principal_sqrt(const Complex& z, const PrecisionConfig& cfg) {
  if (z.re.sign() < 0 && z.im.sign() < 0 && abs(z.im) <= cfg.zero_tol * abs(z)) {
    const Real w = sqrt((abs(z) + abs(z.re)) / 2L);
    return {abs(z.im) / (2L * w), w};
  }
  return principal_sqrt(z);
}

Real principal_arg(const Complex& z, const PrecisionConfig& cfg) {
  if (z.is_zero()) throw DomainError("argument of zero is undefined");
  if (z.re.sign() < 0 && abs(z.im) <= cfg.zero_tol * abs(z)) {
    return Real::pi(z.precision());
  }
  return atan2(z.im, z.re);
}

std::optional<RationalAngle> best_rational(const Real& turns, long qmax, const Real& tol) {
  const mpfr_prec_t bits = turns.precision();
  // Convergents h/k of the continued fraction of `turns`.
  long h_prev = 1, h_prev2 = 0;
  long k_prev = 0, k_prev2 = 1;
  Real x = turns;
  const Real limit(qmax, bits);
  for (int step = 0; step < 64; ++step) {
    const Real a_real = floor(x);
    if (k_prev > 0 && a_real > limit) break;
    const long a = a_real.to_long();
    const long h = a * h_prev + h_prev2;
    const long k = a * k_prev + k_prev2;
    if (k > qmax) break;
    if (abs(turns * k - Real(h, bits)) <= tol * k) {
      return RationalAngle::normalized(h, k);
    }
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    const Real frac = x - a_real;
    if (frac.is_zero()) break;
    x = Real(1L, bits) / frac;
  }
  return std::nullopt;
}

std::optional<RationalAngle> rational_angle_of(const Complex& z, const PrecisionConfig& cfg) {
  if (abs(z) <= cfg.zero_tol) {
    throw DomainError("rational_angle_of: |z| <= zero_tol, argument undefined");
  }
  const mpfr_prec_t bits = z.precision();
  const Real turns = principal_arg(z, cfg) / (2L * Real::pi(bits));
  return best_rational(turns, cfg.angle_qmax, cfg.angle_tol);
}

bool is_perpendicular(const Complex& a, const Complex& b, const PrecisionConfig& cfg) {
  // Re(conj(a) b) = a.re b.re + a.im b.im
  const Real dot = a.re * b.re + a.im * b.im;
  return cfg.negligible(abs(dot), abs(a) * abs(b));
}

bool is_parallel(const Complex& a, const Complex& b, const PrecisionConfig& cfg) {
  // Im(conj(a) b) = a.re b.im - a.im b.re
  const Real cross = a.re * b.im - a.im * b.re;
  return cfg.negligible(abs(cross), abs(a) * abs(b));
}

}  // namespace rpseq

#pragma once

#include <complex>
#include <string>
#include <utility>

#include "rpseq/real.hpp"

namespace rpseq {

/// Complex scalar at working precision. Both parts share one mantissa width.
struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t bits = Real::kDefaultBits) : re(bits), im(bits) {}
  Complex(Real real, Real imag) : re(std::move(real)), im(std::move(imag)) {}
  explicit Complex(const Real& real) : re(real), im(real.precision()) {}
  Complex(double real, double imag, mpfr_prec_t bits) : re(real, bits), im(imag, bits) {}

  static Complex from_polar(const Real& modulus, const Real& angle);
  /// e^(i*angle)
  static Complex unit(const Real& angle);
  static Complex i(mpfr_prec_t bits) { return {Real(bits), Real(1L, bits)}; }

  mpfr_prec_t precision() const { return re.precision(); }
  Complex with_precision(mpfr_prec_t bits) const;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }
  std::complex<double> to_std() const { return {re.to_double(), im.to_double()}; }

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& s);
Complex operator*(const Real& s, const Complex& a);
Complex operator/(const Complex& a, const Real& s);
Complex operator*(const Complex& a, long s);
Complex operator/(const Complex& a, long s);

bool operator==(const Complex& a, const Complex& b);

Complex conj(const Complex& z);
/// |z|
Real abs(const Complex& z);
/// |z|^2
Real norm(const Complex& z);
/// z^n by repeated squaring; n may be negative for nonzero z.
Complex pow(const Complex& z, long n);

}  // namespace rpseq

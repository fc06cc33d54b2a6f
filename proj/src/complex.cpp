#include "rpseq/complex.hpp"

namespace rpseq {

Complex Complex::from_polar(const Real& modulus, const Real& angle) {
  return {modulus * cos(angle), modulus * sin(angle)};
}

Complex Complex::unit(const Real& angle) { return {cos(angle), sin(angle)}; }

Complex Complex::with_precision(mpfr_prec_t bits) const {
  return {re.with_precision(bits), im.with_precision(bits)};
}

Complex& Complex::operator+=(const Complex& rhs) { return *this = *this + rhs; }
Complex& Complex::operator-=(const Complex& rhs) { return *this = *this - rhs; }
Complex& Complex::operator*=(const Complex& rhs) { return *this = *this * rhs; }
Complex& Complex::operator/=(const Complex& rhs) { return *this = *this / rhs; }

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator/(const Complex& a, const Complex& b) {
  // Smith's algorithm.
  if (abs(b.re) >= abs(b.im)) {
    const Real ratio = b.im / b.re;
    const Real den = b.re + b.im * ratio;
    return {(a.re + a.im * ratio) / den, (a.im - a.re * ratio) / den};
  }
  const Real ratio = b.re / b.im;
  const Real den = b.re * ratio + b.im;
  return {(a.re * ratio + a.im) / den, (a.im * ratio - a.re) / den};
}

Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
Complex operator*(const Real& s, const Complex& a) { return a * s; }
Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }
Complex operator*(const Complex& a, long s) { return {a.re * s, a.im * s}; }
Complex operator/(const Complex& a, long s) { return {a.re / s, a.im / s}; }

bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

Complex conj(const Complex& z) { return {z.re, -z.im}; }
Real abs(const Complex& z) { return hypot(z.re, z.im); }
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Complex pow(const Complex& z, long n) {
  if (n < 0) {
    Complex one(Real(1L, z.precision()));
    return one / pow(z, -n);
  }
  Complex result(Real(1L, z.precision()));
  Complex base = z;
  auto e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

}  // namespace rpseq

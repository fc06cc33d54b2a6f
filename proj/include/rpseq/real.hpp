#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace rpseq {

/// Binary floating-point scalar backed by MPFR.
///
/// Every value carries its own mantissa width. Binary operations round to the
/// wider of the two operand precisions, so a computation started at N bits
/// stays at N bits without any process- or thread-wide precision setting.
class Real {
 public:
  static constexpr mpfr_prec_t kDefaultBits = 128;

  explicit Real(mpfr_prec_t bits = kDefaultBits);
  Real(double value, mpfr_prec_t bits);
  Real(long value, mpfr_prec_t bits);
  Real(int value, mpfr_prec_t bits) : Real(static_cast<long>(value), bits) {}

  /// Parses a decimal ("-1.25e-3") or a rational ("-7/12") literal.
  /// Throws std::invalid_argument on malformed input.
  static Real parse(std::string_view text, mpfr_prec_t bits);

  static Real pi(mpfr_prec_t bits);
  /// 2^exponent, exact.
  static Real pow2(long exponent, mpfr_prec_t bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  /// Same value rounded to a new width.
  Real with_precision(mpfr_prec_t bits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(value_, MPFR_RNDN); }

  /// Scientific notation with `decimals` digits after the point.
  std::string to_scientific(int decimals) const;
  /// Shortest decimal string that parses back to the identical value at
  /// this precision.
  std::string to_exact_decimal() const;

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b);

  friend bool operator==(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real floor(const Real& x);
/// Nearest integer, ties away from zero.
Real round(const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& base, long exponent);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

}  // namespace rpseq

#include "rpseq/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace rpseq {

namespace {

mpfr_prec_t wider(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

std::string owned(char* buffer) {
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

// Strict decimal parse: the whole string must be consumed.
bool parse_decimal(mpfr_ptr out, const std::string& text) {
  if (text.empty()) return false;
  char* end = nullptr;
  mpfr_strtofr(out, text.c_str(), &end, 10, MPFR_RNDN);
  return end != text.c_str() && *end == '\0' && mpfr_number_p(out);
}

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t");
  return std::string(text.substr(first, last - first + 1));
}

}  // namespace

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(double value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real Real::parse(std::string_view text, mpfr_prec_t bits) {
  const std::string s = trim(text);
  Real out(bits);
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!parse_decimal(out.value_, s)) {
      throw std::invalid_argument("not a number: '" + s + "'");
    }
    return out;
  }
  Real den(bits);
  if (!parse_decimal(out.value_, trim(s.substr(0, slash))) ||
      !parse_decimal(den.value_, trim(s.substr(slash + 1)))) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  if (den.is_zero()) {
    throw std::invalid_argument("zero denominator: '" + s + "'");
  }
  out /= den;
  return out;
}

Real Real::pi(mpfr_prec_t bits) {
  Real out(bits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

Real Real::pow2(long exponent, mpfr_prec_t bits) {
  Real out(bits);
  mpfr_set_ui_2exp(out.value_, 1, exponent, MPFR_RNDN);
  return out;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Steal the limb buffer; the moved-from object is left empty and only
  // valid for destruction or assignment.
  value_[0] = other.value_[0];
  other.value_[0]._mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  if (value_[0]._mpfr_d == nullptr) {
    mpfr_init2(value_, other.precision());
  } else if (precision() != other.precision()) {
    mpfr_set_prec(value_, other.precision());
  }
  mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) std::swap(value_[0], other.value_[0]);
  return *this;
}

Real::~Real() {
  if (value_[0]._mpfr_d != nullptr) mpfr_clear(value_);
}

Real Real::with_precision(mpfr_prec_t bits) const {
  Real out(bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

std::string Real::to_scientific(int decimals) const {
  // -0 prints as 0.
  const Real positive_zero(precision());
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", decimals, is_zero() ? positive_zero.value_ : value_);
  return owned(buf);
}

std::string Real::to_exact_decimal() const {
  if (is_zero()) return "0";
  const auto digits = static_cast<int>(mpfr_get_str_ndigits(10, precision()));
  return to_scientific(digits - 1);
}

Real Real::operator-() const {
  Real out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real operator+(const Real& a, const Real& b) {
  Real out(wider(a, b));
  mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator-(const Real& a, const Real& b) {
  Real out(wider(a, b));
  mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator*(const Real& a, const Real& b) {
  Real out(wider(a, b));
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator/(const Real& a, const Real& b) {
  Real out(wider(a, b));
  mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator*(const Real& a, long b) {
  Real out(a.precision());
  mpfr_mul_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

Real operator/(const Real& a, long b) {
  Real out(a.precision());
  mpfr_div_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

bool operator==(const Real& a, const Real& b) {
  return mpfr_equal_p(a.value_, b.value_) != 0;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

#define RPSEQ_UNARY(name, fn)                    \
  Real name(const Real& x) {                     \
    Real out(x.precision());                     \
    fn(out.get(), x.get(), MPFR_RNDN);           \
    return out;                                  \
  }

RPSEQ_UNARY(abs, mpfr_abs)
RPSEQ_UNARY(sqrt, mpfr_sqrt)
RPSEQ_UNARY(sin, mpfr_sin)
RPSEQ_UNARY(cos, mpfr_cos)
RPSEQ_UNARY(tan, mpfr_tan)
RPSEQ_UNARY(exp, mpfr_exp)
RPSEQ_UNARY(log, mpfr_log)

#undef RPSEQ_UNARY

Real floor(const Real& x) {
  Real out(x.precision());
  mpfr_floor(out.get(), x.get());
  return out;
}

Real round(const Real& x) {
  Real out(x.precision());
  mpfr_round(out.get(), x.get());
  return out;
}

Real atan2(const Real& y, const Real& x) {
  Real out(wider(y, x));
  mpfr_atan2(out.get(), y.get(), x.get(), MPFR_RNDN);
  return out;
}

Real hypot(const Real& x, const Real& y) {
  Real out(wider(x, y));
  mpfr_hypot(out.get(), x.get(), y.get(), MPFR_RNDN);
  return out;
}

Real pow(const Real& base, long exponent) {
  Real out(base.precision());
  mpfr_pow_si(out.get(), base.get(), exponent, MPFR_RNDN);
  return out;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

}  // namespace rpseq

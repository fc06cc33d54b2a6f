#include "rpseq/polyseq.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rpseq {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::trim(const Real& rel_tol) {
  if (coeffs_.empty()) return;
  Real largest(rel_tol.precision());
  for (const auto& a : coeffs_) largest = max(largest, abs(a));
  const Real cutoff = rel_tol * largest;
  while (!coeffs_.empty() && (coeffs_.back().is_zero() || abs(coeffs_.back()) <= cutoff)) {
    coeffs_.pop_back();
  }
}

bool Polynomial::has_real_coefficients(const PrecisionConfig& cfg) const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [&](const Complex& a) {
    return cfg.negligible(abs(a.im), abs(a.re));
  });
}

Polynomial Polynomial::derivative() const {
  std::vector<Complex> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out.push_back(coeffs_[k] * static_cast<long>(k));
  }
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const auto& longer = a.coeffs_.size() >= b.coeffs_.size() ? a.coeffs_ : b.coeffs_;
  const auto& shorter = a.coeffs_.size() >= b.coeffs_.size() ? b.coeffs_ : a.coeffs_;
  std::vector<Complex> out = longer;
  for (std::size_t k = 0; k < shorter.size(); ++k) out[k] += shorter[k];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const mpfr_prec_t bits = std::max(a.coeffs_[0].precision(), b.coeffs_[0].precision());
  std::vector<Complex> out(a.coeffs_.size() + b.coeffs_.size() - 1, Complex(bits));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Complex eval_poly(const Polynomial& p, const Complex& c) {
  Complex acc(c.precision());
  const auto& a = p.coeffs();
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * c + *it;
  return acc;
}

Real eval_abs_poly(const Polynomial& p, const Real& r) {
  Real acc(r.precision());
  const auto& a = p.coeffs();
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * r + abs(*it);
  return acc;
}

SequenceSpec::SequenceSpec(Polynomial a, Polynomial b, Polynomial w1, PrecisionConfig config)
    : A(std::move(a)), B(std::move(b)), W1(std::move(w1)), cfg(std::move(config)) {
  cfg.validate();
  if (B.is_zero()) {
    throw std::invalid_argument("B must not be the zero polynomial");
  }
}

bool SequenceSpec::has_real_coefficients() const {
  return A.has_real_coefficients(cfg) && B.has_real_coefficients(cfg) &&
         W1.has_real_coefficients(cfg);
}

PointValues values_at(const SequenceSpec& spec, const Complex& c) {
  const Real r = abs(c);
  return {eval_poly(spec.A, c),           eval_poly(spec.B, c),
          eval_poly(spec.W1, c),          eval_abs_poly(spec.A, r),
          eval_abs_poly(spec.B, r),       eval_abs_poly(spec.W1, r)};
}

Complex discriminant(const SequenceSpec& spec, const Complex& c) {
  const Complex a = eval_poly(spec.A, c);
  return a * a + eval_poly(spec.B, c) * 4L;
}

bool delta_vanishes(const Complex& delta, const Complex& a, const Complex& b, const PrecisionConfig& cfg) {
  return cfg.negligible(abs(delta), norm(a) + abs(b) * 4L);
}

ClosedFormParts closed_form_parts(const SequenceSpec& spec, const Complex& c) {
  const Complex a = eval_poly(spec.A, c);
  const Complex b = eval_poly(spec.B, c);
  const Complex w1 = eval_poly(spec.W1, c);
  ClosedFormParts parts{a * a + b * 4L, Complex(c.precision()), Complex(c.precision()),
                        Complex(c.precision())};
  parts.sqrt_delta = principal_sqrt(parts.delta, spec.cfg);
  const Complex lead = w1 * 2L - a;
  parts.g_plus = (lead + parts.sqrt_delta) / 2L;
  parts.g_minus = (lead - parts.sqrt_delta) / 2L;
  return parts;
}

std::vector<Complex> recurrence_eval(const SequenceSpec& spec, const Complex& c, int nmax) {
  if (nmax < 0) throw std::invalid_argument("recurrence_eval: nmax must be >= 0");
  const mpfr_prec_t bits = spec.cfg.mantissa_bits;
  std::vector<Complex> w;
  w.reserve(static_cast<std::size_t>(nmax) + 1);
  w.emplace_back(Real(1L, bits));
  if (nmax == 0) return w;
  w.push_back(eval_poly(spec.W1, c));
  const Complex a = eval_poly(spec.A, c);
  const Complex b = eval_poly(spec.B, c);
  for (int n = 2; n <= nmax; ++n) {
    w.push_back(a * w[n - 1] + b * w[n - 2]);
  }
  return w;
}

Complex closed_form(const SequenceSpec& spec, const Complex& c, int n) {
  if (n < 0) throw std::invalid_argument("closed_form: n must be >= 0");
  const mpfr_prec_t bits = spec.cfg.mantissa_bits;
  if (n == 0) return Complex(Real(1L, bits));
  const Complex a = eval_poly(spec.A, c);
  const Complex b = eval_poly(spec.B, c);
  const Complex w1 = eval_poly(spec.W1, c);
  const Complex delta = a * a + b * 4L;
  const Real two_n = Real::pow2(n, bits);
  if (delta_vanishes(delta, a, b, spec.cfg)) {
    // A^(n-1) (A + n (2 W_1 - A)) / 2^n
    return pow(a, n - 1) * (a + (w1 * 2L - a) * static_cast<long>(n)) / two_n;
  }
  const ClosedFormParts parts = closed_form_parts(spec, c);
  const Complex plus = pow(a + parts.sqrt_delta, n);
  const Complex minus = pow(a - parts.sqrt_delta, n);
  return (parts.g_plus * plus - parts.g_minus * minus) / (parts.sqrt_delta * two_n);
}

bool is_real_point(const Complex& c, const PrecisionConfig& cfg) {
  return cfg.negligible(abs(c.im), abs(c.re));
}

Real real_theta(const Real& a_value, const Real& delta, const PrecisionConfig& cfg) {
  if (!(delta.sign() < 0)) throw DomainError("real_theta: requires Delta(c) < 0");
  const Real root = sqrt(-delta);
  if (cfg.negligible(abs(a_value), root)) return Real::pi(cfg.mantissa_bits) / 2L;
  // atan2 lands in (0, pi) because the numerator is positive.
  return atan2(root, a_value);
}

Complex closed_form_real_trig(const SequenceSpec& spec, const Complex& c, int n) {
  const auto& cfg = spec.cfg;
  if (n < 0) throw std::invalid_argument("closed_form_real_trig: n must be >= 0");
  if (!spec.has_real_coefficients()) {
    throw DomainError("closed_form_real_trig: A, B, W1 must have real coefficients");
  }
  if (!is_real_point(c, cfg)) throw DomainError("closed_form_real_trig: c must be real");
  const PointValues v = values_at(spec, c);
  const Real a = v.a.re;
  const Real b = v.b.re;
  const Real delta = a * a + b * 4L;
  if (!(delta < -cfg.zero_tol)) {
    throw DomainError("closed_form_real_trig: requires Delta(c) < 0");
  }
  const Real theta = real_theta(a, delta, cfg);
  const Real angle = theta * static_cast<long>(n);
  const Real radius = pow(sqrt(abs(b)), n);
  const Real lead = v.w1.re * 2L - a;
  const Real value = radius * (cos(angle) + lead * sin(angle) / sqrt(-delta));
  return Complex(value);
}

}  // namespace rpseq

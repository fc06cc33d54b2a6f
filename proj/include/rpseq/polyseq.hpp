#pragma once

#include <vector>

#include "rpseq/complex.hpp"
#include "rpseq/numerics.hpp"

namespace rpseq {

/// Dense univariate polynomial, coefficients in ascending degree. The empty
/// coefficient list is the zero polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  /// Drops exactly-zero trailing coefficients.
  explicit Polynomial(std::vector<Complex> coeffs);

  static Polynomial constant(const Complex& value) { return Polynomial({value}); }

  const std::vector<Complex>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Complex& leading() const { return coeffs_.back(); }

  /// Removes trailing coefficients with |a_k| <= rel_tol * max_j |a_j|.
  void trim(const Real& rel_tol);
  /// True when every imaginary part is negligible against its real part.
  bool has_real_coefficients(const PrecisionConfig& cfg) const;

  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Complex> coeffs_;
};

/// Horner evaluation. The zero polynomial evaluates to 0 at c's precision.
Complex eval_poly(const Polynomial& p, const Complex& c);

/// sum_k |a_k| r^k, the magnitude scale against which eval_poly rounding is
/// measured.
Real eval_abs_poly(const Polynomial& p, const Real& r);

/// W_n = A W_{n-1} + B W_{n-2} with W_0 = 1 and W_1 given.
struct SequenceSpec {
  Polynomial A;
  Polynomial B;
  Polynomial W1;
  PrecisionConfig cfg;

  /// Throws std::invalid_argument when B is the zero polynomial.
  SequenceSpec(Polynomial a, Polynomial b, Polynomial w1, PrecisionConfig config = {});

  bool has_real_coefficients() const;
};

/// A(c), B(c), W_1(c) together with their rounding scales.
struct PointValues {
  Complex a, b, w1;
  Real a_scale, b_scale, w1_scale;
};

PointValues values_at(const SequenceSpec& spec, const Complex& c);

/// Delta, its principal root and g^(+/-) = (2 W_1 - A +/- sqrt(Delta)) / 2 at
/// one point.
struct ClosedFormParts {
  Complex delta;
  Complex sqrt_delta;
  Complex g_plus;
  Complex g_minus;
};

ClosedFormParts closed_form_parts(const SequenceSpec& spec, const Complex& c);

/// A(c)^2 + 4 B(c)
Complex discriminant(const SequenceSpec& spec, const Complex& c);

/// True when |Delta| <= zero_tol * (|A|^2 + 4|B| + 1); this selects the
/// double-root branch of the closed form.
bool delta_vanishes(const Complex& delta, const Complex& a, const Complex& b, const PrecisionConfig& cfg);

/// [W_0(c), ..., W_nmax(c)] by the literal recurrence. Every closed form in
/// this library is validated against this.
std::vector<Complex> recurrence_eval(const SequenceSpec& spec, const Complex& c, int nmax);

/// W_n(c) from the explicit two-branch solution of the recurrence.
/// n = 0 returns 1 by normalization.
Complex closed_form(const SequenceSpec& spec, const Complex& c, int n);

/// Angle theta in (0, pi) with tan(theta) = sqrt(-Delta) / A for real A and
/// Delta < 0; theta = pi/2 when A = 0.
Real real_theta(const Real& a_value, const Real& delta, const PrecisionConfig& cfg);

/// Real trigonometric form |B|^(n/2) (cos n theta + (2W_1 - A) sin n theta /
/// sqrt(-Delta)). Requires real coefficients, real c and Delta(c) < 0;
/// throws DomainError naming the first failed condition otherwise.
Complex closed_form_real_trig(const SequenceSpec& spec, const Complex& c, int n);

/// |im c| negligible against |re c|.
bool is_real_point(const Complex& c, const PrecisionConfig& cfg);

}  // namespace rpseq

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rpseq/polyseq.hpp"
#include "support.hpp"

using namespace rpseq;
using namespace rpseq::testing;

namespace {

Polynomial P(std::initializer_list<Complex> c) { return Polynomial(std::vector<Complex>(c)); }

SequenceSpec quadratic_spec() {
  const Complex mid(R(1) - sqrt(R(3)), R(0));
  return SequenceSpec(P({C(1.0), mid, C(1.0)}), P({C(0.0), C(0.0), C(-0.5)}), P({C(0.0), C(1.0)}));
}

SequenceSpec constants(double a, double b, double w1) {
  return SequenceSpec(P({C(a)}), P({C(b)}), P({C(w1)}));
}

Real running_max(const std::vector<Complex>& w, int n) {
  Real m(kBits);
  for (int k = 0; k <= n; ++k) m = max(m, abs(w[k]));
  return m;
}

}  // namespace

TEST_CASE("Polynomial basics") {
  CHECK(Polynomial().degree() == -1);
  CHECK(eval_poly(Polynomial(), C(3.0, 4.0)).is_zero());
  CHECK(P({C(1.0), C(2.0), C(0.0)}).degree() == 1);
  CHECK(abs(eval_poly(P({C(1.0), C(0.0), C(1.0)}), Complex::i(kBits))) == R(0));
  const Polynomial d = P({C(5.0), C(3.0), C(2.0)}).derivative();
  CHECK(d == P({C(3.0), C(4.0)}));
  Polynomial t = P({C(1.0), C(1e-30), C(1e-40)});
  t.trim(R("1e-20"));
  CHECK(t.degree() == 0);
  CHECK(P({C(0.0, 1e-30)}).has_real_coefficients(PrecisionConfig{}));
  CHECK_FALSE(P({C(0.0, 1e-3)}).has_real_coefficients(PrecisionConfig{}));
}

TEST_CASE("product and sum agree with pointwise evaluation") {
  Gen gen(21);
  for (int k = 0; k < 50; ++k) {
    const Polynomial a = gen.poly(4, false);
    const Polynomial b = gen.poly(4, false);
    const Complex z = gen.box();
    const Complex fa = eval_poly(a, z);
    const Complex fb = eval_poly(b, z);
    CHECK(abs(eval_poly(a * b, z) - fa * fb) <= Real::pow2(-110, kBits));
    CHECK(abs(eval_poly(a + b, z) - (fa + fb)) <= Real::pow2(-110, kBits));
  }
}

TEST_CASE("SequenceSpec rejects B = 0") {
  CHECK_THROWS_AS(SequenceSpec(P({C(1.0)}), Polynomial(), P({C(1.0)})), std::invalid_argument);
  PrecisionConfig bad;
  bad.mantissa_bits = 40;
  CHECK_THROWS(SequenceSpec(P({C(1.0)}), P({C(1.0)}), P({C(1.0)}), bad));
}

TEST_CASE("quadratic example: A(c) = c and Delta(c) = -c^2") {
  const SequenceSpec spec = quadratic_spec();
  const Complex c = cis_pi(1, 6);
  const Real tol = Real::pow2(-120, kBits);
  CHECK(abs(eval_poly(spec.A, c) - c) <= tol);
  CHECK(abs(discriminant(spec, c) + c * c) <= tol);
}

TEST_CASE("discriminant examples") {
  CHECK(discriminant(constants(0, 1, 1), C(0.3, 0.2)) == C(4.0));
  CHECK(discriminant(constants(1, -1, 1), C(0.7)) == C(-3.0));
}

TEST_CASE("recurrence_eval: normalization and Fibonacci") {
  const auto w = recurrence_eval(constants(1, 1, 1), C(0.25, -3.0), 5);
  REQUIRE(w.size() == 6);
  const long fib[] = {1, 1, 2, 3, 5, 8};
  for (int n = 0; n <= 5; ++n) CHECK(w[n] == C(static_cast<double>(fib[n])));
  CHECK(recurrence_eval(quadratic_spec(), C(9.0), 0).size() == 1);
  CHECK(recurrence_eval(quadratic_spec(), C(9.0), 0)[0] == C(1.0));
}

TEST_CASE("quadratic example recurrence vanishes exactly at n = 3 mod 4") {
  const SequenceSpec spec = quadratic_spec();
  const auto w = recurrence_eval(spec, cis_pi(1, 6), 48);
  CHECK(small_indices(w, spec.cfg.zero_tol) == progression(3, 4, 48));
}

TEST_CASE("closed_form examples") {
  const SequenceSpec flat = constants(2, -1, 1);
  for (int n = 1; n <= 20; ++n) CHECK(abs(closed_form(flat, C(0.5), n) - C(1.0)) <= Real::pow2(-100, kBits));
  CHECK(abs(closed_form(constants(1, 1, 1), C(0.0), 5) - C(8.0)) <= Real::pow2(-100, kBits));
  CHECK(closed_form(constants(1, 1, 1), C(0.0), 0) == C(1.0));
  CHECK(abs(closed_form(quadratic_spec(), cis_pi(1, 6), 3)) <= PrecisionConfig{}.zero_tol);
}

TEST_CASE("closed_form matches the recurrence on random specs") {
  Gen gen(22);
  const Real bound = Real::pow2(-64, kBits);
  for (int k = 0; k < 100; ++k) {
    const SequenceSpec spec = gen.spec(3, false);
    const Complex c = gen.box();
    const auto w = recurrence_eval(spec, c, 50);
    Real scale(kBits);
    for (int n = 1; n <= 50; ++n) {
      scale = max(scale, abs(w[n]));
      CHECK(abs(closed_form(spec, c, n) - w[n]) <= bound * scale);
    }
  }
}

TEST_CASE("Delta = 0 branch matches the recurrence") {
  Gen gen(23);
  for (int k = 0; k < 30; ++k) {
    const Polynomial a = gen.poly(2, false);
    if (a.is_zero()) continue;
    // B = -A^2/4 makes Delta vanish identically.
    const Polynomial b = (a * a) * Polynomial::constant(C(-0.25));
    const SequenceSpec spec(a, b, gen.poly(2, false));
    const Complex c = gen.box();
    if (eval_poly(b, c).is_zero()) continue;
    REQUIRE(delta_vanishes(discriminant(spec, c), eval_poly(a, c), eval_poly(b, c), spec.cfg));
    const auto w = recurrence_eval(spec, c, 50);
    for (int n = 1; n <= 50; ++n) {
      CHECK(abs(closed_form(spec, c, n) - w[n]) <= Real::pow2(-64, kBits) * running_max(w, n));
    }
  }
}

TEST_CASE("closed form parts invariants") {
  Gen gen(24);
  for (int k = 0; k < 200; ++k) {
    const SequenceSpec spec = gen.spec(3, false);
    const Complex c = gen.box();
    const ClosedFormParts parts = closed_form_parts(spec, c);
    const Real scale = abs(parts.delta) + R(1);
    CHECK(abs(parts.g_plus - parts.g_minus - parts.sqrt_delta) <= Real::pow2(-120, kBits) * scale);
    CHECK(abs(parts.sqrt_delta * parts.sqrt_delta - parts.delta) <= Real::pow2(-120, kBits) * scale);
    CHECK((parts.sqrt_delta.re > R(0) || (parts.sqrt_delta.re.is_zero() && parts.sqrt_delta.im >= R(0))));
  }
}

TEST_CASE("closed_form_real_trig examples") {
  const SequenceSpec rot = constants(0, -1, 0);
  const double expect[] = {0, -1, 0, 1, 0, -1, 0, 1};
  for (int n = 1; n <= 8; ++n) {
    CHECK(abs(closed_form_real_trig(rot, C(0.3), n) - C(expect[n - 1])) <= Real::pow2(-110, kBits));
  }
  // theta = pi/3 family member with a = 0, b = 1: W1 = z, A = 1, B = -1.
  const SequenceSpec fam(P({C(1.0)}), P({C(-1.0)}), P({C(0.0), C(1.0)}));
  CHECK(abs(closed_form_real_trig(fam, C(1.0), 2)) <= PrecisionConfig{}.zero_tol);
}

TEST_CASE("closed_form_real_trig preconditions") {
  const SequenceSpec complex_spec(P({C(0.0, 1.0)}), P({C(-1.0)}), P({C(0.0)}));
  CHECK_THROWS_AS(closed_form_real_trig(complex_spec, C(0.5), 3), DomainError);
  CHECK_THROWS_AS(closed_form_real_trig(constants(0, -1, 0), C(0.5, 0.5), 3), DomainError);
  CHECK_THROWS_AS(closed_form_real_trig(constants(1, 1, 1), C(0.5), 3), DomainError);
}

TEST_CASE("real trig form matches recurrence and closed form") {
  Gen gen(25);
  int used = 0;
  while (used < 100) {
    const SequenceSpec spec = gen.spec(3, true);
    const Complex c = gen.real_box();
    if (!(discriminant(spec, c).re < -R("1e-3"))) continue;
    ++used;
    const auto w = recurrence_eval(spec, c, 30);
    for (int n = 1; n <= 30; ++n) {
      const Complex trig = closed_form_real_trig(spec, c, n);
      const Real scale = running_max(w, n);
      CHECK(abs(trig - w[n]) <= Real::pow2(-64, kBits) * scale);
      CHECK(abs(trig - closed_form(spec, c, n)) <= Real::pow2(-64, kBits) * scale);
    }
  }
}

TEST_CASE("real_theta convention") {
  const PrecisionConfig cfg;
  CHECK(real_theta(R(0), R(-4), cfg) == Real::pi(kBits) / 2);
  CHECK(abs(real_theta(R(1), R(-3), cfg) - Real::pi(kBits) / 3) <= Real::pow2(-120, kBits));
  CHECK(abs(real_theta(R(-1), R(-3), cfg) - Real::pi(kBits) * 2 / 3) <= Real::pow2(-120, kBits));
}

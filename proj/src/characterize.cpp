#include "rpseq/characterize.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

namespace rpseq {

namespace {

Classification reject(Reason reason, const PrecisionConfig& cfg, Residuals diagnostics = {}) {
  Classification out;
  out.verdict = Verdict::kNotCommonZero;
  out.reason = reason;
  out.qmax_used = cfg.angle_qmax;
  out.diagnostics = std::move(diagnostics);
  return out;
}

Real angle_residual(const Complex& z, const RationalAngle& angle, const PrecisionConfig& cfg) {
  const Real turns = principal_arg(z, cfg) / (2L * Real::pi(cfg.mantissa_bits));
  return abs(turns - Real(angle.q, cfg.mantissa_bits) / angle.p);
}

struct CertifyResult {
  std::optional<CommonZeroCertificate> cert;
  Reason reason = Reason::kNone;
  Residuals diagnostics;
};

// Condition (iii) plus the search for r. Conditions (i) and (ii) are the
// caller's business.
CertifyResult certify(const SequenceSpec& spec, const Complex& c, const PointValues& vals,
                      const Complex& delta, const UVPair& uv) {
  const auto& cfg = spec.cfg;
  const mpfr_prec_t bits = cfg.mantissa_bits;
  const Real one(1L, bits);
  CertifyResult out;
  out.diagnostics["abs_u_minus_1"] = abs(abs(uv.u) - one);
  out.diagnostics["abs_v_minus_1"] = abs(abs(uv.v) - one);

  std::optional<RationalAngle> angle_v;
  std::optional<RationalAngle> angle_u;
  try {
    angle_v = rational_angle_of(uv.v, cfg);
    angle_u = rational_angle_of(uv.u, cfg);
  } catch (const DomainError&) {
    out.reason = Reason::kAngleNotDetected;
    return out;
  }
  if (!angle_v || !angle_u) {
    out.reason = Reason::kAngleNotDetected;
    return out;
  }
  if (angle_v->p % angle_u->p != 0) {
    out.reason = Reason::kDivisibility;
    return out;
  }

  const long p = angle_v->p;
  long best_r = 0;
  Real best(bits);
  Complex power = uv.v;
  for (long r = 1; r < p; ++r) {
    const Real miss = abs(power - uv.u);
    if (best_r == 0 || miss < best) {
      best = miss;
      best_r = r;
    }
    power *= uv.v;
  }
  const Real period_miss = abs(pow(uv.v, p) - Complex(one));
  out.diagnostics["v_pow_p_minus_1"] = period_miss;
  if (best_r == 0 || !cfg.negligible(best, one) || !cfg.negligible(period_miss, one)) {
    if (best_r != 0) out.diagnostics["v_pow_r_minus_u"] = best;
    out.reason = Reason::kResidueNotFound;
    return out;
  }

  CommonZeroCertificate cert{c, delta, uv, vals.a * vals.a / vals.b, *angle_v, *angle_u, p, best_r, {}};
  cert.residuals = std::move(out.diagnostics);
  cert.residuals["v_pow_r_minus_u"] = best;
  cert.residuals["angle_v"] = angle_residual(uv.v, *angle_v, cfg);
  cert.residuals["angle_u"] = angle_residual(uv.u, *angle_u, cfg);
  cert.residuals["x_ratio_imag"] = abs(cert.x_ratio.im);
  cert.residuals["parallel"] = abs(vals.a.re * vals.w1.im - vals.a.im * vals.w1.re);
  out.cert = std::move(cert);
  return out;
}

Classification periodic(CommonZeroCertificate cert, const PrecisionConfig& cfg) {
  Classification out;
  out.verdict = Verdict::kPeriodic;
  out.qmax_used = cfg.angle_qmax;
  out.certificate = std::move(cert);
  return out;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kNotCommonZero: return "not-common-zero";
    case Verdict::kDegenerate: return "degenerate";
    case Verdict::kPeriodic: return "periodic";
  }
  return "unknown";
}

std::string to_string(Reason r) {
  switch (r) {
    case Reason::kNone: return "none";
    case Reason::kBZeroNonvanishing: return "b-zero-nonvanishing";
    case Reason::kDeltaZero: return "delta-zero";
    case Reason::kConditionI: return "condition-i";
    case Reason::kConditionII: return "condition-ii";
    case Reason::kGPlusZero: return "g-plus-zero";
    case Reason::kAngleNotDetected: return "angle-not-detected";
    case Reason::kDivisibility: return "divisibility";
    case Reason::kResidueNotFound: return "residue-not-found";
  }
  return "unknown";
}

std::string to_string(RealCase c) {
  return c == RealCase::kDeltaPositiveAZero ? "delta-positive-A-zero" : "delta-negative-angular";
}

UVPair compute_uv(const SequenceSpec& spec, const Complex& c) {
  const auto& cfg = spec.cfg;
  const PointValues vals = values_at(spec, c);
  if (cfg.negligible(abs(vals.b), vals.b_scale)) throw DomainError("compute_uv: B(c) = 0");
  const ClosedFormParts parts = closed_form_parts(spec, c);
  if (delta_vanishes(parts.delta, vals.a, vals.b, cfg)) throw DomainError("compute_uv: Delta(c) = 0");
  const Real lead_scale = vals.w1_scale * 2L + vals.a_scale + abs(parts.sqrt_delta);
  if (cfg.negligible(abs(parts.g_plus), lead_scale)) throw DomainError("compute_uv: g+(c) = 0");
  // A +/- sqrt(Delta) != 0 whenever B(c) != 0, since their product is -4B(c).
  return {parts.g_minus / parts.g_plus,
          (vals.a + parts.sqrt_delta) / (vals.a - parts.sqrt_delta)};
}

Classification classify_point(const SequenceSpec& spec, const Complex& c) {
  const auto& cfg = spec.cfg;
  const PointValues vals = values_at(spec, c);

  if (cfg.negligible(abs(vals.b), vals.b_scale)) {
    // W_n(c) = A(c)^(n-1) W_1(c) for n >= 1.
    if (!cfg.negligible(abs(vals.a * vals.w1), vals.a_scale * vals.w1_scale)) {
      return reject(Reason::kBZeroNonvanishing, cfg, {{"abs_B", abs(vals.b)}});
    }
    Classification out;
    out.verdict = Verdict::kDegenerate;
    out.first_zero_index = cfg.negligible(abs(vals.w1), vals.w1_scale) ? 1 : 2;
    out.qmax_used = cfg.angle_qmax;
    out.diagnostics["abs_B"] = abs(vals.b);
    out.diagnostics["abs_AW1"] = abs(vals.a * vals.w1);
    return out;
  }

  const Complex delta = vals.a * vals.a + vals.b * 4L;
  if (delta_vanishes(delta, vals.a, vals.b, cfg)) {
    return reject(Reason::kDeltaZero, cfg, {{"abs_delta", abs(delta)}});
  }

  const Complex x = vals.a * vals.a / vals.b;
  const Real x_scale = abs(x);
  const bool x_real = cfg.negligible(abs(x.im), x_scale);
  const bool x_in_range = x.re <= cfg.zero_tol * (x_scale + Real(1L, cfg.mantissa_bits)) &&
                          x.re > Real(-4L, cfg.mantissa_bits);
  if (!x_real || !x_in_range) {
    return reject(Reason::kConditionI, cfg, {{"x_re", x.re}, {"x_im", x.im}});
  }
  if (!is_parallel(vals.a, vals.w1, cfg)) {
    return reject(Reason::kConditionII, cfg,
                  {{"cross", abs(vals.a.re * vals.w1.im - vals.a.im * vals.w1.re)}});
  }

  UVPair uv;
  try {
    uv = compute_uv(spec, c);
  } catch (const DomainError&) {
    return reject(Reason::kGPlusZero, cfg);
  }
  CertifyResult result = certify(spec, c, vals, delta, uv);
  if (!result.cert) return reject(result.reason, cfg, std::move(result.diagnostics));
  return periodic(std::move(*result.cert), cfg);
}

Classification classify_real_point(const SequenceSpec& spec, const Complex& c) {
  const auto& cfg = spec.cfg;
  if (!spec.has_real_coefficients()) {
    throw DomainError("classify_real_point: A, B, W1 must have real coefficients");
  }
  if (!is_real_point(c, cfg)) throw DomainError("classify_real_point: c must be real");
  const PointValues vals = values_at(spec, c);
  if (cfg.negligible(abs(vals.b), vals.b_scale)) {
    throw DomainError("classify_real_point: B(c) = 0");
  }

  const Complex delta = vals.a * vals.a + vals.b * 4L;
  if (delta_vanishes(delta, vals.a, vals.b, cfg)) {
    return reject(Reason::kDeltaZero, cfg, {{"abs_delta", abs(delta)}});
  }

  RealCase kind = RealCase::kDeltaNegativeAngular;
  Real theta(cfg.mantissa_bits);
  if (delta.re.sign() > 0) {
    // v is real, so v^p = 1 forces v = -1 and hence A(c) = 0.
    if (!cfg.negligible(abs(vals.a), vals.a_scale)) {
      return reject(Reason::kConditionI, cfg, {{"abs_A", abs(vals.a)}});
    }
    kind = RealCase::kDeltaPositiveAZero;
    theta = Real::pi(cfg.mantissa_bits) / 2L;
  } else {
    theta = real_theta(vals.a.re, delta.re, cfg);
  }

  UVPair uv;
  try {
    uv = compute_uv(spec, c);
  } catch (const DomainError&) {
    return reject(Reason::kGPlusZero, cfg);
  }
  CertifyResult result = certify(spec, c, vals, delta, uv);
  if (!result.cert) return reject(result.reason, cfg, std::move(result.diagnostics));

  Classification out = periodic(*result.cert, cfg);
  out.real = RealCertificate{theta, kind, std::move(*result.cert)};
  return out;
}

bool residue_class(const CommonZeroCertificate& cert, long n) { return n % cert.p == cert.r; }

ArgCheck corollary_arg_check(const CommonZeroCertificate& cert, const SequenceSpec& spec,
                             const Complex& c) {
  const auto& cfg = spec.cfg;
  const PointValues vals = values_at(spec, c);
  if (cfg.negligible(abs(vals.a), vals.a_scale)) {
    throw DomainError("corollary_arg_check: A(c) = 0, argument undefined");
  }
  const ClosedFormParts parts = closed_form_parts(spec, c);
  const Real phi = principal_arg(vals.a + parts.sqrt_delta, cfg) - principal_arg(vals.a, cfg);
  const Real scaled = phi * cert.p / Real::pi(cfg.mantissa_bits);
  const long nearest = round(scaled).to_long();
  // Walk outward from the nearest integer to the first one coprime to p.
  for (long step = 0;; ++step) {
    for (const long q : {nearest - step, nearest + step}) {
      if (std::gcd(std::labs(q), cert.p) == 1) {
        return {abs(scaled - Real(q, cfg.mantissa_bits)), q};
      }
    }
  }
}

Real tan_r_theta_check(const SequenceSpec& spec, const Complex& c, const CommonZeroCertificate& cert) {
  const auto& cfg = spec.cfg;
  if (!spec.has_real_coefficients()) {
    throw DomainError("tan_r_theta_check: A, B, W1 must have real coefficients");
  }
  if (!is_real_point(c, cfg)) throw DomainError("tan_r_theta_check: c must be real");
  const PointValues vals = values_at(spec, c);
  if (cfg.negligible(abs(vals.a * vals.b), vals.a_scale * vals.b_scale)) {
    throw DomainError("tan_r_theta_check: A(c) B(c) = 0");
  }
  const Real denom = vals.a.re - vals.w1.re * 2L;
  if (cfg.negligible(abs(denom), vals.a_scale + vals.w1_scale * 2L)) {
    throw DomainError("tan_r_theta_check: A(c) - 2 W1(c) = 0");
  }
  const Real delta = vals.a.re * vals.a.re + vals.b.re * 4L;
  if (!(delta < -cfg.zero_tol)) throw DomainError("tan_r_theta_check: requires Delta(c) < 0");
  const Real theta = real_theta(vals.a.re, delta, cfg);
  return abs(tan(theta * cert.r) - sqrt(-delta) / denom);
}

Real linear_A_zero_formula(const Real& a, const Real& b, const Real& theta, long r) {
  const mpfr_prec_t bits = theta.precision();
  if (b.is_zero()) throw DomainError("linear_A_zero_formula: b must be nonzero");
  if (!(theta.sign() > 0) || !(theta < Real::pi(bits))) {
    throw DomainError("linear_A_zero_formula: theta must lie in (0, pi)");
  }
  // Numerator and denominator multiplied through by cos(theta) cos(r theta).
  const Real r_theta = theta * r;
  const Real num = b * sin(theta - r_theta);
  const Real den = (a - Real(2L, bits)) * sin(r_theta) * cos(theta) - a * sin(theta) * cos(r_theta);
  if (abs(den) <= Real::pow2(-(bits / 2), bits) * (abs(a) + Real(2L, bits))) {
    throw DomainError("linear_A_zero_formula: vanishing denominator");
  }
  return num / den;
}

SequenceSpec make_family_spec(const Real& theta, const Real& a, const Real& b,
                              const PrecisionConfig& cfg) {
  const mpfr_prec_t bits = cfg.mantissa_bits;
  if (!(theta.sign() > 0) || !(theta < Real::pi(bits) / 2L)) {
    throw DomainError("make_family_spec: theta must lie in (0, pi/2)");
  }
  if (b.is_zero()) throw DomainError("make_family_spec: b must be nonzero");
  const Real c2 = cos(theta) * cos(theta) * 4L;
  const Real gap = c2 - a;
  if (cfg.negligible(abs(gap), abs(a))) {
    throw DomainError("make_family_spec: a must differ from 4 cos^2(theta)");
  }
  const Real b_const = -(b * b * c2) / (gap * gap);
  const Real zero(bits);
  return SequenceSpec(Polynomial({Complex(b), Complex(a)}),
                      Polynomial({Complex(b_const)}),
                      Polynomial({Complex(zero), Complex(Real(1L, bits))}), cfg);
}

Real family_zero(const Real& theta, const Real& a, const Real& b) {
  return b / (cos(theta) * cos(theta) * 4L - a);
}

std::vector<Classification> classify_points_serial(const SequenceSpec& spec,
                                                   std::span<const Complex> points) {
  std::vector<Classification> out;
  out.reserve(points.size());
  for (const auto& c : points) out.push_back(classify_point(spec, c));
  return out;
}

std::vector<Classification> classify_points(const SequenceSpec& spec, std::span<const Complex> points) {
  std::vector<Classification> out(points.size());
  const auto count = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = classify_point(spec, points[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace rpseq

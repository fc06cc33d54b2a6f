#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rpseq/numerics.hpp"
#include "rpseq/polyseq.hpp"

namespace rpseq {

/// u = g^-(c) / g^+(c) and v = (A(c) + sqrt(Delta(c))) / (A(c) - sqrt(Delta(c))).
/// W_n(c) = 0 exactly when v^n = u.
struct UVPair {
  Complex u;
  Complex v;
};

/// Named residuals recorded while certifying or rejecting a point.
using Residuals = std::map<std::string, Real>;

/// Everything needed to re-check that c is a common zero with
/// W_n(c) = 0 <=> n = r (mod p).
struct CommonZeroCertificate {
  Complex point;
  Complex delta;
  UVPair uv;
  /// x with A(c)^2 = x B(c); real and in (-4, 0] at a common zero.
  Complex x_ratio;
  RationalAngle angle_v;
  RationalAngle angle_u;
  long p = 0;
  long r = 0;
  Residuals residuals;
};

enum class Verdict { kNotCommonZero, kDegenerate, kPeriodic };

enum class Reason {
  kNone,
  kBZeroNonvanishing,  // B(c) = 0 but A(c) W_1(c) != 0
  kDeltaZero,
  kConditionI,   // A^2 = x B with x real in (-4, 0] fails
  kConditionII,  // A(c) not parallel to W_1(c)
  kGPlusZero,    // u undefined
  kAngleNotDetected,
  kDivisibility,  // p*(u) does not divide p*(v)
  kResidueNotFound,
};

enum class RealCase { kDeltaPositiveAZero, kDeltaNegativeAngular };

struct RealCertificate {
  /// Angle of A(c) + sqrt(Delta(c)); pi/2 in the Delta > 0 case, where
  /// v = -1 = e^(2i theta).
  Real theta;
  RealCase kind = RealCase::kDeltaNegativeAngular;
  CommonZeroCertificate embedded;
};

struct Classification {
  Verdict verdict = Verdict::kNotCommonZero;
  Reason reason = Reason::kNone;
  /// Degenerate branch only: W_n(c) = 0 for every n >= first_zero_index.
  int first_zero_index = 0;
  std::optional<CommonZeroCertificate> certificate;
  std::optional<RealCertificate> real;
  /// Denominator bound in force; a kAngleNotDetected verdict means "not
  /// certified at this bound", not a proof of absence.
  long qmax_used = 0;
  Residuals diagnostics;

  bool is_common_zero() const { return verdict != Verdict::kNotCommonZero; }
};

std::string to_string(Verdict v);
std::string to_string(Reason r);
std::string to_string(RealCase c);

/// Requires |B(c)| and |Delta(c)| above tolerance and g^+(c) != 0; throws
/// DomainError naming the vanishing quantity otherwise.
UVPair compute_uv(const SequenceSpec& spec, const Complex& c);

/// Decides whether c is a common zero. Every outcome is a verdict.
Classification classify_point(const SequenceSpec& spec, const Complex& c);

/// Real specialization: the Delta > 0 branch needs A(c) = 0 (zeros at odd
/// n), the Delta < 0 branch only the angle condition. Throws DomainError
/// for complex data or B(c) = 0.
Classification classify_real_point(const SequenceSpec& spec, const Complex& c);

/// n = r (mod p)
bool residue_class(const CommonZeroCertificate& cert, long n);

struct ArgCheck {
  Real residual;
  long q = 0;
};

/// Distance of (Arg(A + sqrt(Delta)) - Arg(A)) * p / pi from the nearest
/// integer q coprime to p. Throws DomainError when A(c) = 0.
ArgCheck corollary_arg_check(const CommonZeroCertificate& cert, const SequenceSpec& spec,
                             const Complex& c);

/// |tan(r theta) - sqrt(-Delta) / (A - 2 W_1)| at a certified real zero.
Real tan_r_theta_check(const SequenceSpec& spec, const Complex& c, const CommonZeroCertificate& cert);

/// Location of the common zero for W_1 = z, A = a z + b:
///   c = b (tan theta - tan r theta) / ((a - 2) tan r theta - a tan theta),
/// evaluated in sine form so that tan(r theta) may be infinite.
Real linear_A_zero_formula(const Real& a, const Real& b, const Real& theta, long r);

/// W_1 = z, A = a z + b, B = -4 b^2 cos^2(theta) / (4 cos^2(theta) - a)^2.
SequenceSpec make_family_spec(const Real& theta, const Real& a, const Real& b,
                              const PrecisionConfig& cfg);

/// b / (4 cos^2(theta) - a), the common zero of make_family_spec.
Real family_zero(const Real& theta, const Real& a, const Real& b);

/// Batch classification; the parallel kernel must agree element-wise with
/// the serial one.
std::vector<Classification> classify_points_serial(const SequenceSpec& spec,
                                                   std::span<const Complex> points);
std::vector<Classification> classify_points(const SequenceSpec& spec, std::span<const Complex> points);

}  // namespace rpseq

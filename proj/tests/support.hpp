#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "rpseq/characterize.hpp"
#include "rpseq/polyseq.hpp"

namespace rpseq::testing {

constexpr int kBits = 128;

inline Real R(const char* text) { return Real::parse(text, kBits); }
inline Real R(long v) { return Real(v, kBits); }
inline Real R(int v) { return Real(static_cast<long>(v), kBits); }
inline Complex C(double re, double im = 0.0) { return {re, im, kBits}; }
inline Complex C(const char* re, const char* im) { return {R(re), R(im)}; }

/// e^(i pi q/p) at working precision.
inline Complex cis_pi(long q, long p) { return Complex::unit(Real::pi(kBits) * q / p); }

inline Real rel_err(const Complex& got, const Complex& want, const Real& scale) {
  return abs(got - want) / scale;
}

/// Seeded source of random polynomials, specs and points.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Complex box() { return C(uniform(-1, 1), uniform(-1, 1)); }
  Complex real_box() { return C(uniform(-1, 1)); }

  Polynomial poly(int max_degree, bool real) {
    const int d = integer(0, max_degree);
    std::vector<Complex> c;
    for (int k = 0; k <= d; ++k) c.push_back(real ? real_box() : box());
    return Polynomial(std::move(c));
  }

  /// Nonzero B with degree <= max_degree.
  SequenceSpec spec(int max_degree, bool real) {
    for (;;) {
      Polynomial b = poly(max_degree, real);
      if (b.is_zero()) continue;
      return SequenceSpec(poly(max_degree, real), std::move(b), poly(max_degree, real));
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Indices 1..nmax where |W_n| <= tol * running max.
inline std::vector<int> small_indices(const std::vector<Complex>& w, const Real& tol) {
  std::vector<int> out;
  Real scale(kBits);
  for (std::size_t n = 0; n < w.size(); ++n) {
    scale = max(scale, abs(w[n]));
    if (n >= 1 && abs(w[n]) <= tol * scale) out.push_back(static_cast<int>(n));
  }
  return out;
}

/// Indices 1..size-2 where |W_n| <= tol * max(|W_{n-1}|, |W_{n+1}|). Works
/// for decaying sequences, where a running max would flag the whole tail.
inline std::vector<int> locally_small_indices(const std::vector<Complex>& w, const Real& tol) {
  std::vector<int> out;
  for (std::size_t n = 1; n + 1 < w.size(); ++n) {
    if (abs(w[n]) <= tol * max(abs(w[n - 1]), abs(w[n + 1]))) out.push_back(static_cast<int>(n));
  }
  return out;
}

inline std::vector<int> progression(long r, long p, int nmax) {
  std::vector<int> out;
  for (long n = r; n <= nmax; n += p) out.push_back(static_cast<int>(n));
  return out;
}

/// Every property a periodic certificate must satisfy; returns the failures.
inline std::vector<std::string> certificate_violations(const CommonZeroCertificate& cert, const Real& tol) {
  std::vector<std::string> bad;
  const Real one = R(1);
  if (abs(abs(cert.uv.u) - one) > tol) bad.push_back("|u| != 1");
  if (abs(abs(cert.uv.v) - one) > tol) bad.push_back("|v| != 1");
  if (abs(pow(cert.uv.v, cert.p) - C(1.0)) > tol) bad.push_back("v^p != 1");
  if (abs(pow(cert.uv.v, cert.r) - cert.uv.u) > tol) bad.push_back("v^r != u");
  if (cert.p < 2) bad.push_back("p < 2");
  if (cert.r < 1 || cert.r > cert.p - 1) bad.push_back("r outside 1..p-1");
  for (long k = 1; k < cert.p; ++k) {
    if (abs(pow(cert.uv.v, k) - C(1.0)) <= tol) bad.push_back("p not minimal");
  }
  for (long k = 1; k < cert.r; ++k) {
    if (abs(pow(cert.uv.v, k) - cert.uv.u) <= tol) bad.push_back("r not minimal");
  }
  if (cert.angle_v.p != cert.p) bad.push_back("p != p*(v)");
  if (cert.angle_v.p % cert.angle_u.p != 0) bad.push_back("p*(u) does not divide p*(v)");
  if (std::gcd(cert.angle_u.p, std::abs(cert.angle_u.q)) != 1) bad.push_back("angle_u not reduced");
  if (std::gcd(cert.angle_v.p, std::abs(cert.angle_v.q)) != 1) bad.push_back("angle_v not reduced");
  if (abs(cert.x_ratio.im) > tol || !(cert.x_ratio.re > R(-4)) || cert.x_ratio.re > tol) {
    bad.push_back("x outside (-4, 0]");
  }
  return bad;
}

}  // namespace rpseq::testing

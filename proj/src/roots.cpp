#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "rpseq/search.hpp"

namespace rpseq {

namespace {

using cd = std::complex<double>;

// log2 |x| without overflow; -inf for zero.
double log2_abs(const Complex& x) {
  const Real m = abs(x);
  if (m.is_zero()) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  const double mant = mpfr_get_d_2exp(&exp, m.get(), MPFR_RNDN);
  return std::log2(mant) + static_cast<double>(exp);
}

// Coefficients scaled so the largest has modulus 1, rounded to double.
std::vector<cd> normalized_double(const std::vector<Complex>& a, double top_log2) {
  std::vector<cd> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].is_zero()) continue;
    long er = 0, ei = 0;
    const double mr = a[k].re.is_zero() ? 0.0 : mpfr_get_d_2exp(&er, a[k].re.get(), MPFR_RNDN);
    const double mi = a[k].im.is_zero() ? 0.0 : mpfr_get_d_2exp(&ei, a[k].im.get(), MPFR_RNDN);
    const long shift = -static_cast<long>(std::floor(top_log2));
    out[k] = {std::ldexp(mr, static_cast<int>(er + shift)), std::ldexp(mi, static_cast<int>(ei + shift))};
  }
  return out;
}

// Starting points on circles whose radii come from the upper convex hull of
// (k, log2 |a_k|).
std::vector<cd> newton_polygon_seeds(const std::vector<double>& logs) {
  const int d = static_cast<int>(logs.size()) - 1;
  std::vector<int> hull;
  for (int k = 0; k <= d; ++k) {
    if (std::isinf(logs[k])) continue;
    while (hull.size() >= 2) {
      const int i = hull[hull.size() - 2];
      const int j = hull.back();
      // Drop j if it lies on or below the chord from i to k.
      const double cross = (logs[j] - logs[i]) * (k - i) - (logs[k] - logs[i]) * (j - i);
      if (cross <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(k);
  }
  std::vector<cd> seeds;
  seeds.reserve(d);
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const int lo = hull[s];
    const int hi = hull[s + 1];
    const int count = hi - lo;
    const double radius = std::exp2((logs[lo] - logs[hi]) / count);
    for (int j = 0; j < count; ++j) {
      const double angle = two_pi * j / count + two_pi * static_cast<double>(seeds.size()) / d + 0.4;
      seeds.push_back(std::polar(radius, angle));
    }
  }
  return seeds;
}

// p(z) / p'(z); for |z| > 1 it goes through the reversed polynomial so that
// no power of z is formed.
cd newton_ratio(const std::vector<cd>& a, cd z) {
  const int d = static_cast<int>(a.size()) - 1;
  if (std::abs(z) <= 1.0) {
    cd p = a[d];
    cd dp = 0.0;
    for (int k = d - 1; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + a[k];
    }
    return p / dp;
  }
  const cd w = 1.0 / z;
  cd q = a[0];
  cd dq = 0.0;
  for (int k = 1; k <= d; ++k) {
    dq = dq * w + q;
    q = q * w + a[k];
  }
  // p(z) = z^d q(w), p'(z) = z^(d-1) (d q(w) - w q'(w))
  return 1.0 / (w * (static_cast<double>(d) - w * dq / q));
}

void aberth_double(const std::vector<cd>& a, std::vector<cd>& z) {
  const std::size_t d = z.size();
  std::vector<bool> done(d, false);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < 500; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (done[i]) continue;
      const cd ratio = newton_ratio(a, z[i]);
      if (!std::isfinite(ratio.real()) || !std::isfinite(ratio.imag())) {
        z[i] *= cd(1.0 + 1e-8, 1e-8);
        all_done = false;
        continue;
      }
      cd repulsion = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const cd step = ratio / (1.0 - ratio * repulsion);
      z[i] -= step;
      if (std::abs(step) <= 4.0 * eps * std::abs(z[i])) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
}

struct Eval {
  Complex p;
  Complex dp;
  Real scale;
};

Eval horner(const std::vector<Complex>& a, const Complex& z) {
  const mpfr_prec_t bits = z.precision();
  Complex p(bits), dp(bits);
  Real scale(bits);
  const Real r = abs(z);
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
    scale = scale * r + abs(*it);
  }
  return {p, dp, scale};
}

void aberth_polish(const std::vector<Complex>& a, std::vector<Complex>& z, const PrecisionConfig& cfg) {
  const mpfr_prec_t bits = cfg.mantissa_bits;
  const std::size_t d = z.size();
  const Real step_tol = Real::pow2(-(bits - 4), bits);
  const Real noise = Real::pow2(-(bits - 8), bits);
  const Real one(1L, bits);
  std::vector<bool> done(d, false);
  for (int iter = 0; iter < 400; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (done[i]) continue;
      const Eval e = horner(a, z[i]);
      if (abs(e.p) <= noise * e.scale) {
        done[i] = true;
        continue;
      }
      all_done = false;
      if (e.dp.is_zero()) {
        z[i] = z[i] * Complex(one + step_tol, step_tol);
        continue;
      }
      const Complex ratio = e.p / e.dp;
      Complex repulsion(bits);
      for (std::size_t j = 0; j < d; ++j) {
        if (j == i) continue;
        const Complex gap = z[i] - z[j];
        if (!gap.is_zero()) repulsion += Complex(one) / gap;
      }
      const Complex step = ratio / (Complex(one) - ratio * repulsion);
      z[i] -= step;
      if (abs(step) <= step_tol * (abs(z[i]) + one)) done[i] = true;
    }
    if (all_done) break;
  }
}

// Plain Newton steps, each kept only if it lowers the residual.
void newton_polish(const std::vector<Complex>& a, Complex& z, int steps) {
  Eval e = horner(a, z);
  for (int s = 0; s < steps && !e.p.is_zero() && !e.dp.is_zero(); ++s) {
    Complex next = z - e.p / e.dp;
    Eval trial = horner(a, next);
    if (!(abs(trial.p) < abs(e.p))) break;
    z = std::move(next);
    e = std::move(trial);
  }
}

}  // namespace

std::vector<Complex> roots_of(const Polynomial& p, const PrecisionConfig& cfg) {
  if (p.degree() < 1) throw DomainError("roots_of: polynomial must have degree >= 1");
  const mpfr_prec_t bits = cfg.mantissa_bits;

  // Exact zero roots come off first.
  const auto& all = p.coeffs();
  std::size_t zeros = 0;
  while (all[zeros].is_zero()) ++zeros;
  std::vector<Complex> a;
  a.reserve(all.size() - zeros);
  for (std::size_t k = zeros; k < all.size(); ++k) a.push_back(all[k].with_precision(bits));

  std::vector<Complex> roots(zeros, Complex(bits));
  const int d = static_cast<int>(a.size()) - 1;
  if (d == 1) {
    roots.push_back(-a[0] / a[1]);
  } else if (d > 1) {
    std::vector<double> logs(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) logs[k] = log2_abs(a[k]);
    const double top = *std::max_element(logs.begin(), logs.end());
    std::vector<cd> seeds = newton_polygon_seeds(logs);
    aberth_double(normalized_double(a, top), seeds);

    std::vector<Complex> z;
    z.reserve(seeds.size());
    for (const cd& s : seeds) z.emplace_back(s.real(), s.imag(), bits);
    aberth_polish(a, z, cfg);
    for (auto& root : z) {
      newton_polish(a, root, 8);
      roots.push_back(std::move(root));
    }
  }

  std::sort(roots.begin(), roots.end(), [](const Complex& x, const Complex& y) {
    if (x.re != y.re) return x.re < y.re;
    return x.im < y.im;
  });
  return roots;
}

}  // namespace rpseq

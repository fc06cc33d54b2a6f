#include "rpseq/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

namespace rpseq {

namespace {

std::vector<Real> abs_coeffs(const Polynomial& p) {
  std::vector<Real> out;
  out.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) out.push_back(abs(a));
  return out;
}

// Coefficient-wise a*b + c*d over magnitudes.
std::vector<Real> envelope(const std::vector<Real>& a, const std::vector<Real>& b,
                           const std::vector<Real>& c, const std::vector<Real>& d, mpfr_prec_t bits) {
  const std::size_t n1 = a.empty() || b.empty() ? 0 : a.size() + b.size() - 1;
  const std::size_t n2 = c.empty() || d.empty() ? 0 : c.size() + d.size() - 1;
  std::vector<Real> out(std::max(n1, n2), Real(bits));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) out[i + j] += c[i] * d[j];
  return out;
}

// Drops leading coefficients that are rounding residue of an exact
// cancellation: |a_k| small against the magnitudes that were summed into it.
Polynomial trim_cancelled(const Polynomial& p, std::vector<Real>& env, long n, const PrecisionConfig& cfg) {
  const mpfr_prec_t bits = cfg.mantissa_bits;
  const Real noise = Real::pow2(-(bits - 8), bits) * (n + 1);
  std::vector<Complex> a = p.coeffs();
  while (!a.empty() && abs(a.back()) <= noise * env[a.size() - 1]) a.pop_back();
  env.resize(a.size(), Real(bits));
  return Polynomial(std::move(a));
}

double distance(const std::complex<double>& x, const std::complex<double>& y) { return std::abs(x - y); }

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
};

ZeroSet solve_one(const Polynomial& poly, int index, const PrecisionConfig& cfg) {
  ZeroSet zs{index, {}, Real(cfg.mantissa_bits)};
  if (poly.degree() < 1) return zs;
  zs.roots = roots_of(poly, cfg);
  for (const auto& z : zs.roots) {
    const Real scale = eval_abs_poly(poly, abs(z));
    if (scale.is_zero()) continue;
    zs.max_residual = max(zs.max_residual, abs(eval_poly(poly, z)) / scale);
  }
  return zs;
}

}  // namespace

std::vector<int> ZeroCluster::indices() const {
  std::set<int> seen;
  for (const auto& m : members) seen.insert(m.index);
  return {seen.begin(), seen.end()};
}

std::vector<Polynomial> expand_wn(const SequenceSpec& spec, int nmax, int max_degree) {
  if (nmax < 0) throw std::invalid_argument("expand_wn: nmax must be >= 0");
  const mpfr_prec_t bits = spec.cfg.mantissa_bits;
  std::vector<Polynomial> w;
  w.push_back(Polynomial::constant(Complex(Real(1L, bits))));
  if (nmax == 0) return w;
  w.push_back(spec.W1);

  const std::vector<Real> abs_a = abs_coeffs(spec.A);
  const std::vector<Real> abs_b = abs_coeffs(spec.B);
  std::vector<Real> env_prev2{Real(1L, bits)};
  std::vector<Real> env_prev = abs_coeffs(spec.W1);

  for (int n = 2; n <= nmax; ++n) {
    std::vector<Real> env = envelope(abs_a, env_prev, abs_b, env_prev2, bits);
    Polynomial next = trim_cancelled(spec.A * w[n - 1] + spec.B * w[n - 2], env, n, spec.cfg);
    if (max_degree > 0 && next.degree() > max_degree) break;
    w.push_back(std::move(next));
    env_prev2 = std::move(env_prev);
    env_prev = std::move(env);
  }
  return w;
}

std::vector<ZeroSet> solve_zero_sets_serial(std::span<const Polynomial> polys, int first_index,
                                            const PrecisionConfig& cfg) {
  std::vector<ZeroSet> out;
  out.reserve(polys.size());
  for (std::size_t k = 0; k < polys.size(); ++k) {
    out.push_back(solve_one(polys[k], first_index + static_cast<int>(k), cfg));
  }
  return out;
}

std::vector<ZeroSet> solve_zero_sets(std::span<const Polynomial> polys, int first_index,
                                     const PrecisionConfig& cfg) {
  std::vector<ZeroSet> out(polys.size());
  const auto count = static_cast<long>(polys.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = count - 1; k >= 0; --k) {
    const auto slot = static_cast<std::size_t>(k);
    out[slot] = solve_one(polys[slot], first_index + static_cast<int>(k), cfg);
  }
  return out;
}

std::vector<ZeroCluster> cluster_roots(std::span<const ZeroSet> zero_sets, std::span<const Polynomial> polys,
                                       double cluster_tol) {
  struct Entry {
    int index;
    std::size_t set;
    std::size_t root;
    std::complex<double> z;
  };
  std::vector<Entry> entries;
  for (std::size_t s = 0; s < zero_sets.size(); ++s) {
    for (std::size_t k = 0; k < zero_sets[s].roots.size(); ++k) {
      entries.push_back({zero_sets[s].index, s, k, zero_sets[s].roots[k].to_std()});
    }
  }
  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return entries[x].z.real() < entries[y].z.real(); });

  UnionFind uf(entries.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const auto& zi = entries[order[i]].z;
      const auto& zj = entries[order[j]].z;
      if (zj.real() - zi.real() > cluster_tol) break;
      if (distance(zi, zj) <= cluster_tol) uf.unite(order[i], order[j]);
    }
  }

  // Entries are in (index, sorted root) order, so each group's first member
  // is its lowest-index root.
  std::vector<std::vector<std::size_t>> groups(entries.size());
  for (std::size_t e = 0; e < entries.size(); ++e) groups[uf.find(e)].push_back(e);

  std::vector<ZeroCluster> clusters;
  for (const auto& group : groups) {
    std::set<int> distinct;
    for (std::size_t e : group) distinct.insert(entries[e].index);
    if (distinct.size() < 2) continue;

    ZeroCluster cluster;
    const Entry& anchor = entries[group.front()];
    cluster.center = zero_sets[anchor.set].roots[anchor.root];
    // One more Newton pass on the anchor polynomial, kept only if it helps.
    const Polynomial& poly = polys[anchor.set];
    const Polynomial dpoly = poly.derivative();
    const Complex slope = eval_poly(dpoly, cluster.center);
    if (!slope.is_zero()) {
      const Complex refined = cluster.center - eval_poly(poly, cluster.center) / slope;
      if (abs(eval_poly(poly, refined)) < abs(eval_poly(poly, cluster.center))) {
        cluster.center = refined;
      }
    }
    for (std::size_t e : group) {
      cluster.members.push_back({entries[e].index, zero_sets[entries[e].set].roots[entries[e].root]});
      cluster.radius = std::max(cluster.radius, abs(cluster.members.back().root - cluster.center).to_double());
    }
    clusters.push_back(std::move(cluster));
  }
  std::sort(clusters.begin(), clusters.end(), [](const ZeroCluster& x, const ZeroCluster& y) {
    if (x.center.re != y.center.re) return x.center.re < y.center.re;
    return x.center.im < y.center.im;
  });
  return clusters;
}

std::vector<int> predicted_indices(const Classification& cls, int nmax) {
  std::vector<int> out;
  if (cls.verdict == Verdict::kDegenerate) {
    for (int n = cls.first_zero_index; n <= nmax; ++n) out.push_back(n);
  } else if (cls.verdict == Verdict::kPeriodic) {
    for (int n = 1; n <= nmax; ++n) {
      if (residue_class(*cls.certificate, n)) out.push_back(n);
    }
  }
  return out;
}

SearchResult find_candidates(const SequenceSpec& spec, int nmax, const SearchConfig& search) {
  if (nmax < 2) throw std::invalid_argument("find_candidates: nmax must be >= 2");
  SearchResult result;
  const std::vector<Polynomial> w = expand_wn(spec, nmax, search.max_degree);
  result.nmax = static_cast<int>(w.size()) - 1;
  result.truncated = result.nmax < nmax;

  const std::span<const Polynomial> tail(w.begin() + 1, w.end());
  result.zero_sets = solve_zero_sets(tail, 1, spec.cfg);
  const std::vector<ZeroCluster> clusters = cluster_roots(result.zero_sets, tail, search.cluster_tol);

  for (const auto& cluster : clusters) {
    Candidate cand{cluster, classify_point(spec, cluster.center), cluster.indices(), {}};
    cand.predicted = predicted_indices(cand.classification, result.nmax);
    result.candidates.push_back(std::move(cand));
  }
  return result;
}

WitnessReport limit_point_witness(const SequenceSpec& spec, const Classification& cls, int nmax,
                                  const SearchConfig& search) {
  WitnessReport report;
  if (cls.verdict == Verdict::kDegenerate) {
    report.note = "degenerate common zero: every index from first_zero_index on vanishes, so no "
                  "index lies outside the zero class";
    return report;
  }
  if (cls.verdict != Verdict::kPeriodic) {
    throw DomainError("limit_point_witness: point is not a certified common zero");
  }
  const auto& cert = *cls.certificate;
  if (nmax < 3 * cert.p) throw DomainError("limit_point_witness: nmax must be >= 3p");

  const std::vector<Polynomial> w = expand_wn(spec, nmax, search.max_degree);
  std::vector<Polynomial> outside;
  std::vector<int> labels;
  for (int n = 1; n < static_cast<int>(w.size()); ++n) {
    if (residue_class(cert, n)) continue;
    outside.push_back(w[static_cast<std::size_t>(n)]);
    labels.push_back(n);
  }
  std::vector<ZeroSet> sets = solve_zero_sets(outside, 0, spec.cfg);
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (sets[k].roots.empty()) continue;
    const Complex* nearest = nullptr;
    Real best(spec.cfg.mantissa_bits);
    for (const auto& z : sets[k].roots) {
      const Real dist = abs(z - cert.point);
      if (nearest == nullptr || dist < best) {
        best = dist;
        nearest = &z;
      }
    }
    report.entries.push_back({labels[k], *nearest, best});
    if (!report.min_distance || best < *report.min_distance) report.min_distance = best;
  }
  if (report.entries.empty()) report.note = "no index outside the residue class has a root";
  return report;
}

}  // namespace rpseq

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rpseq/characterize.hpp"
#include "rpseq/numerics.hpp"
#include "rpseq/polyseq.hpp"

namespace rpseq {

struct SearchConfig {
  /// Single-linkage merge distance for roots of different W_n.
  double cluster_tol = 1e-10;
  /// Expansion stops before the first W_n whose degree exceeds this.
  int max_degree = 2000;
};

/// Roots of W_index, with multiplicity.
struct ZeroSet {
  int index = 0;
  std::vector<Complex> roots;
  /// max_i |W_n(root_i)| / sum_k |a_k| |root_i|^k
  Real max_residual;
};

struct ClusterMember {
  int index = 0;
  Complex root;
};

struct ZeroCluster {
  Complex center;
  std::vector<ClusterMember> members;
  double radius = 0.0;

  /// Sorted distinct indices n contributing a root.
  std::vector<int> indices() const;
};

struct Candidate {
  ZeroCluster cluster;
  Classification classification;
  std::vector<int> observed;
  /// Index set the verdict predicts within [1, nmax]; empty when rejected.
  std::vector<int> predicted;

  bool confirmed() const { return classification.is_common_zero(); }
  bool consistent() const { return confirmed() && observed == predicted; }
};

struct SearchResult {
  std::vector<ZeroSet> zero_sets;
  std::vector<Candidate> candidates;
  int nmax = 0;
  /// True when the degree cap stopped the expansion before the requested nmax.
  bool truncated = false;
};

/// W_0, ..., W_nmax as explicit polynomials. Leading coefficients that cancel
/// to rounding level are dropped. Stops early (shorter result) once a degree
/// exceeds max_degree.
std::vector<Polynomial> expand_wn(const SequenceSpec& spec, int nmax, int max_degree = 0);

/// All complex roots with multiplicity: Aberth iteration in double precision
/// seeded from the Newton polygon, then simultaneous and Newton polishing at
/// working precision. Sorted by (re, im). Throws DomainError for degree < 1.
std::vector<Complex> roots_of(const Polynomial& p, const PrecisionConfig& cfg);

/// Zero sets of polys[k] labelled first_index + k; constant entries get an
/// empty root list. The parallel kernel fans out across indices and must
/// return exactly what the serial one returns.
std::vector<ZeroSet> solve_zero_sets_serial(std::span<const Polynomial> polys, int first_index,
                                            const PrecisionConfig& cfg);
std::vector<ZeroSet> solve_zero_sets(std::span<const Polynomial> polys, int first_index,
                                     const PrecisionConfig& cfg);

/// Single-linkage clusters over the union of all roots that draw members from
/// at least two distinct indices. Output order is deterministic.
std::vector<ZeroCluster> cluster_roots(std::span<const ZeroSet> zero_sets, std::span<const Polynomial> polys,
                                       double cluster_tol);

/// Expected zero indices in [1, nmax] for a common-zero verdict.
std::vector<int> predicted_indices(const Classification& cls, int nmax);

/// Expands, solves and clusters W_1..W_nmax, then classifies each cluster
/// center.
SearchResult find_candidates(const SequenceSpec& spec, int nmax, const SearchConfig& search = {});

struct WitnessEntry {
  int index = 0;
  Complex root;
  Real distance;
};

struct WitnessReport {
  std::vector<WitnessEntry> entries;
  std::optional<Real> min_distance;
  std::string note;
};

/// For every n <= nmax outside the residue class, the root of W_n nearest to
/// the certified zero. Degenerate verdicts yield an empty report with a note.
/// Throws DomainError for a rejected point or nmax < 3p.
WitnessReport limit_point_witness(const SequenceSpec& spec, const Classification& cls, int nmax,
                                  const SearchConfig& search = {});

}  // namespace rpseq

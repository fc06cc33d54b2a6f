#pragma once

#include <string>
#include <vector>

#include "rpseq/characterize.hpp"
#include "rpseq/polyseq.hpp"

namespace rpseq {

/// A spec file, a point, and the verdict it must produce.
struct GoldenCase {
  std::string name;
  std::string description;
  std::string spec_json;
  /// Point in command-line syntax.
  std::string point;
  /// Classify with the real criterion instead of the general one.
  bool real_mode = false;
  Verdict verdict = Verdict::kPeriodic;
  long p = 0;
  long r = 0;
  int first_zero_index = 0;
  /// Zero pattern is checked against the recurrence for 1 <= n <= check_nmax.
  int check_nmax = 48;
};

struct GoldenOutcome {
  std::string name;
  bool pass = false;
  std::string detail;
};

const std::vector<GoldenCase>& golden_cases();

/// Looks a case up by name; throws std::out_of_range.
const GoldenCase& golden_case(const std::string& name);

SequenceSpec golden_spec(const GoldenCase& gc);
Complex golden_point(const GoldenCase& gc);

/// Indices in [1, nmax] with |W_n(c)| <= tol * max_{k<=n} |W_k(c)|.
std::vector<int> observed_zero_indices(const std::vector<Complex>& w, const Real& tol);

/// Classifies the case and checks verdict, (p, r) and the zero pattern of
/// the recurrence at relative threshold 1e-20. With `perturb` the constant
/// coefficient of A is shifted by 1e-6 first, which must make it fail.
GoldenOutcome run_golden(const GoldenCase& gc, bool perturb = false);

}  // namespace rpseq

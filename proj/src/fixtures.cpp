#include "rpseq/fixtures.hpp"

#include <sstream>
#include <stdexcept>

#include "rpseq/search.hpp"
#include "rpseq/specfile.hpp"

namespace rpseq {

namespace {

// W1 = z, A = a z + b, B constant.
std::string family_json(const std::string& a, const std::string& b, const std::string& b_const) {
  return R"({"precision_bits": 128, "angle_qmax": 512,
  "A": [[")" + b + R"(", "0"], [")" + a + R"(", "0"]],
  "B": [[")" + b_const + R"(", "0"]],
  "W1": [["0", "0"], ["1", "0"]]})";
}

std::string join(const std::vector<int>& xs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < xs.size(); ++k) out << (k ? "," : "") << xs[k];
  out << '}';
  return out.str();
}

std::vector<GoldenCase> build_cases() {
  std::vector<GoldenCase> cases;
  cases.push_back({"quadratic-pi6",
                   "W1 = z, A = z^2 + (1 - sqrt 3) z + 1, B = -z^2/2 at e^(i pi/6): n = 3 (mod 4)",
                   R"({"precision_bits": 128, "angle_qmax": 512,
  "A": [["1", "0"], {"a": "1", "b": "-1", "n": "3"}, ["1", "0"]],
  "B": [["0", "0"], ["0", "0"], ["-1/2", "0"]],
  "W1": [["0", "0"], ["1", "0"]]})",
                   "1@1/6", false, Verdict::kPeriodic, 4, 3, 0, 48});
  cases.push_back({"complex-coeff",
                   "W1 = z, A = 4z^2 + 1, B = e^(-2 pi i/3) z at e^(i pi/3)/2: n = 2 (mod 4)",
                   R"({"precision_bits": 128, "angle_qmax": 512,
  "A": [["1", "0"], ["0", "0"], ["4", "0"]],
  "B": [["0", "0"], {"r": "1", "theta_pi": "-2/3"}],
  "W1": [["0", "0"], ["1", "0"]]})",
                   "1/2@1/3", false, Verdict::kPeriodic, 4, 2, 0, 48});
  cases.push_back({"family-pi3-a0-b1", "theta = pi/3, A = 1, B = -1 at c = 1: n = 2 (mod 3)",
                   family_json("0", "1", "-1"), "1,0", true, Verdict::kPeriodic, 3, 2, 0, 48});
  cases.push_back({"family-pi4-a0-b1", "theta = pi/4, A = 1, B = -1/2 at c = 1/2: n = 2 (mod 4)",
                   family_json("0", "1", "-1/2"), "1/2,0", true, Verdict::kPeriodic, 4, 2, 0, 48});
  cases.push_back({"family-pi4-a1-b2", "theta = pi/4, A = z + 2, B = -8 at c = 2: n = 2 (mod 4)",
                   family_json("1", "2", "-8"), "2,0", true, Verdict::kPeriodic, 4, 2, 0, 48});
  cases.push_back({"family-pi6-a0-b1", "theta = pi/6, A = 1, B = -1/3 at c = 1/3: n = 2 (mod 6)",
                   family_json("0", "1", "-1/3"), "1/3,0", true, Verdict::kPeriodic, 6, 2, 0, 48});
  cases.push_back({"family-pi6-a1-b2", "theta = pi/6, A = z + 2, B = -3 at c = 1: n = 2 (mod 6)",
                   family_json("1", "2", "-3"), "1,0", true, Verdict::kPeriodic, 6, 2, 0, 48});
  cases.push_back({"real-odd", "A = z, B = 1, W1 = z at 0: Delta = 4 > 0, zeros at odd n",
                   R"({"A": [["0", "0"], ["1", "0"]], "B": [["1", "0"]], "W1": [["0", "0"], ["1", "0"]]})",
                   "0,0", true, Verdict::kPeriodic, 2, 1, 0, 41});
  cases.push_back({"degenerate", "A = B = W1 = z at 0: B(0) = 0, zeros at every n >= 1",
                   R"({"A": [["0", "0"], ["1", "0"]], "B": [["0", "0"], ["1", "0"]], "W1": [["0", "0"], ["1", "0"]]})",
                   "0,0", false, Verdict::kDegenerate, 0, 0, 1, 20});
  cases.push_back({"b-zero-reject", "A = 1, B = z, W1 = 1 at 0: W_n(0) = 1 for all n",
                   R"({"A": [["1", "0"]], "B": [["0", "0"], ["1", "0"]], "W1": [["1", "0"]]})",
                   "0,0", false, Verdict::kNotCommonZero, 0, 0, 0, 20});
  return cases;
}

}  // namespace

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = build_cases();
  return cases;
}

const GoldenCase& golden_case(const std::string& name) {
  for (const auto& gc : golden_cases()) {
    if (gc.name == name) return gc;
  }
  throw std::out_of_range("no golden case named '" + name + "'");
}

SequenceSpec golden_spec(const GoldenCase& gc) { return parse_spec_text(gc.spec_json); }

Complex golden_point(const GoldenCase& gc) {
  return parse_point(gc.point, golden_spec(gc).cfg.mantissa_bits);
}

std::vector<int> observed_zero_indices(const std::vector<Complex>& w, const Real& tol) {
  std::vector<int> out;
  Real scale(tol.precision());
  for (std::size_t n = 0; n < w.size(); ++n) {
    const Real mag = abs(w[n]);
    scale = max(scale, mag);
    if (n >= 1 && mag <= tol * scale) out.push_back(static_cast<int>(n));
  }
  return out;
}

GoldenOutcome run_golden(const GoldenCase& gc, bool perturb) {
  GoldenOutcome outcome{gc.name, false, {}};
  SequenceSpec spec = golden_spec(gc);
  if (perturb) {
    std::vector<Complex> a = spec.A.coeffs();
    if (a.empty()) a.emplace_back(spec.cfg.mantissa_bits);
    a[0] += spec.cfg.complex(1e-6);
    spec.A = Polynomial(std::move(a));
  }
  const Complex c = parse_point(gc.point, spec.cfg.mantissa_bits);
  const Classification cls = gc.real_mode ? classify_real_point(spec, c) : classify_point(spec, c);

  std::ostringstream detail;
  detail << to_string(cls.verdict);
  if (cls.verdict == Verdict::kPeriodic) detail << " p=" << cls.certificate->p << " r=" << cls.certificate->r;
  if (cls.verdict == Verdict::kDegenerate) detail << " from n=" << cls.first_zero_index;
  if (cls.verdict == Verdict::kNotCommonZero) detail << " (" << to_string(cls.reason) << ")";

  bool ok = cls.verdict == gc.verdict;
  if (ok && gc.verdict == Verdict::kPeriodic) {
    ok = cls.certificate->p == gc.p && cls.certificate->r == gc.r;
  }
  if (ok && gc.verdict == Verdict::kDegenerate) ok = cls.first_zero_index == gc.first_zero_index;

  const std::vector<Complex> w = recurrence_eval(spec, c, gc.check_nmax);
  const std::vector<int> observed = observed_zero_indices(w, Real::parse("1e-20", spec.cfg.mantissa_bits));
  std::vector<int> expected;
  if (gc.verdict == Verdict::kPeriodic) {
    for (int n = 1; n <= gc.check_nmax; ++n) {
      if (n % gc.p == gc.r) expected.push_back(n);
    }
  } else if (gc.verdict == Verdict::kDegenerate) {
    for (int n = gc.first_zero_index; n <= gc.check_nmax; ++n) expected.push_back(n);
  }
  // A rejected point may vanish at one index, not two.
  const bool pattern_ok = gc.verdict == Verdict::kNotCommonZero ? observed.size() < 2 : observed == expected;
  if (!pattern_ok) detail << "; zero pattern " << join(observed) << " != " << join(expected);
  detail << "; recurrence zeros n<=" << gc.check_nmax << ": " << join(observed);

  outcome.pass = ok && pattern_ok;
  outcome.detail = detail.str();
  return outcome;
}

}  // namespace rpseq

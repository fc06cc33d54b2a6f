#include "rpseq/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "rpseq/characterize.hpp"
#include "rpseq/fixtures.hpp"
#include "rpseq/report.hpp"
#include "rpseq/search.hpp"
#include "rpseq/specfile.hpp"

namespace rpseq {

namespace {

using nlohmann::json;

struct Options {
  std::string spec_path;
  std::string point;
  int nmax = -1;
  std::optional<int> precision;
  std::optional<long> qmax;
  std::optional<std::string> tol;
  std::string out_path;
  std::string roots_path;
  std::string format;
  bool dump_spec = false;
  bool timing = false;
  double cluster_tol = SearchConfig{}.cluster_tol;
  // examples
  bool list = false;
  std::string dump_fixture;
  std::string perturb;
};

class Emitter {
 public:
  Emitter(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw SpecError("out", "cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

ConfigOverrides overrides_of(const Options& opt) { return {opt.precision, opt.qmax, opt.tol}; }

json config_json(const PrecisionConfig& cfg, const ReportFormat& fmt) {
  return {{"precision_bits", cfg.mantissa_bits},
          {"angle_qmax", cfg.angle_qmax},
          {"zero_tol", fmt.real(cfg.zero_tol)},
          {"angle_tol", fmt.real(cfg.angle_tol)}};
}

json argv_json(const std::vector<std::string>& args) {
  return json(std::vector<std::string>(args.begin() + 1, args.end()));
}

void write_json(std::ostream& os, const json& doc) { os << doc.dump(2) << '\n'; }

// Identity checks that apply at a certified point, keyed by name.
json identity_checks(const SequenceSpec& spec, const Complex& c, const Classification& cls,
                     const ReportFormat& fmt) {
  json checks = json::object();
  if (!cls.certificate) return checks;
  try {
    const ArgCheck arg = corollary_arg_check(*cls.certificate, spec, c);
    checks["corollary_arg"] = {{"q", arg.q}, {"residual", fmt.real(arg.residual)}};
  } catch (const DomainError& e) {
    checks["corollary_arg"] = {{"skipped", e.what()}};
  }
  if (cls.real) {
    try {
      checks["tan_r_theta"] = {{"residual", fmt.real(tan_r_theta_check(spec, c, *cls.certificate))}};
    } catch (const DomainError& e) {
      checks["tan_r_theta"] = {{"skipped", e.what()}};
    }
  }
  return checks;
}

int cmd_classify(const Options& opt, const std::vector<std::string>& args, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const SequenceSpec spec = load_spec_file(opt.spec_path, overrides_of(opt));
  Emitter emit(opt.out_path, out);
  if (opt.dump_spec) {
    write_json(emit.stream(), dump_spec(spec));
    return kExitAffirmative;
  }
  if (opt.point.empty()) throw SpecError("point", "--point is required");
  const Complex c = parse_point(opt.point, spec.cfg.mantissa_bits);
  const ReportFormat fmt = ReportFormat::for_config(spec.cfg);

  Classification cls = classify_point(spec, c);
  // Real data at a real point: attach theta from the real criterion.
  if (spec.has_real_coefficients() && is_real_point(c, spec.cfg) &&
      !spec.cfg.negligible(abs(eval_poly(spec.B, c)), eval_abs_poly(spec.B, abs(c)))) {
    Classification real_cls = classify_real_point(spec, c);
    if (real_cls.verdict == cls.verdict) cls.real = std::move(real_cls.real);
  }

  if (opt.format == "csv") {
    emit.stream() << "verdict,reason,p,r,angle_v,angle_u,first_zero_index\n"
                  << to_string(cls.verdict) << ',' << to_string(cls.reason) << ','
                  << (cls.certificate ? std::to_string(cls.certificate->p) : "") << ','
                  << (cls.certificate ? std::to_string(cls.certificate->r) : "") << ','
                  << (cls.certificate ? cls.certificate->angle_v.to_string() : "") << ','
                  << (cls.certificate ? cls.certificate->angle_u.to_string() : "") << ','
                  << (cls.verdict == Verdict::kDegenerate ? std::to_string(cls.first_zero_index) : "")
                  << '\n';
  } else {
    json report{{"command", "classify"},
                {"argv", argv_json(args)},
                {"config", config_json(spec.cfg, fmt)},
                {"point", fmt.complex(c)},
                {"classification", classification_json(cls, fmt)},
                {"checks", identity_checks(spec, c, cls, fmt)}};
    if (opt.timing) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      report["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    }
    write_json(emit.stream(), report);
  }
  return cls.is_common_zero() ? kExitAffirmative : kExitNegative;
}

int cmd_sequence(const Options& opt, const std::vector<std::string>& args, std::ostream& out) {
  const SequenceSpec spec = load_spec_file(opt.spec_path, overrides_of(opt));
  Emitter emit(opt.out_path, out);
  if (opt.dump_spec) {
    write_json(emit.stream(), dump_spec(spec));
    return kExitAffirmative;
  }
  if (opt.point.empty()) throw SpecError("point", "--point is required");
  if (opt.nmax < 0) throw SpecError("nmax", "--nmax >= 0 is required");
  const Complex c = parse_point(opt.point, spec.cfg.mantissa_bits);
  const ReportFormat fmt = ReportFormat::for_config(spec.cfg);
  const std::vector<Complex> w = recurrence_eval(spec, c, opt.nmax);
  if (opt.format == "json") {
    write_json(emit.stream(), json{{"command", "sequence"},
                                   {"argv", argv_json(args)},
                                   {"point", fmt.complex(c)},
                                   {"rows", sequence_json(w, fmt)}});
  } else {
    emit.stream() << sequence_csv(w, fmt);
  }
  return kExitAffirmative;
}

int cmd_scan(const Options& opt, const std::vector<std::string>& args, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const SequenceSpec spec = load_spec_file(opt.spec_path, overrides_of(opt));
  Emitter emit(opt.out_path, out);
  if (opt.dump_spec) {
    write_json(emit.stream(), dump_spec(spec));
    return kExitAffirmative;
  }
  if (opt.nmax < 2) throw SpecError("nmax", "--nmax >= 2 is required");
  if (!(opt.cluster_tol > 0)) throw SpecError("cluster-tol", "must be > 0");
  SearchConfig search;
  search.cluster_tol = opt.cluster_tol;
  const SearchResult result = find_candidates(spec, opt.nmax, search);
  const ReportFormat fmt = ReportFormat::for_config(spec.cfg);

  if (!opt.roots_path.empty()) {
    std::ofstream roots(opt.roots_path);
    if (!roots) throw SpecError("roots", "cannot write '" + opt.roots_path + "'");
    roots << roots_csv(result.zero_sets, fmt);
  }

  json confirmed = json::array();
  json rejected = json::array();
  for (const auto& cand : result.candidates) {
    (cand.confirmed() ? confirmed : rejected).push_back(candidate_json(cand, fmt));
  }
  if (opt.format == "csv") {
    emit.stream() << "re,im,verdict,p,r,observed\n";
    for (const auto& cand : result.candidates) {
      if (!cand.confirmed()) continue;
      std::string observed;
      for (int n : cand.observed) observed += (observed.empty() ? "" : " ") + std::to_string(n);
      emit.stream() << cand.cluster.center.re.to_scientific(fmt.decimals) << ','
                    << cand.cluster.center.im.to_scientific(fmt.decimals) << ','
                    << to_string(cand.classification.verdict) << ','
                    << (cand.classification.certificate ? std::to_string(cand.classification.certificate->p) : "")
                    << ','
                    << (cand.classification.certificate ? std::to_string(cand.classification.certificate->r) : "")
                    << ',' << observed << '\n';
    }
    return kExitAffirmative;
  }
  json report{{"command", "scan"},
              {"argv", argv_json(args)},
              {"config", config_json(spec.cfg, fmt)},
              {"nmax", result.nmax},
              {"truncated", result.truncated},
              {"cluster_tol", search.cluster_tol},
              {"candidates", confirmed},
              {"rejected", rejected}};
  if (opt.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  write_json(emit.stream(), report);
  return kExitAffirmative;
}

int cmd_examples(const Options& opt, std::ostream& out) {
  Emitter emit(opt.out_path, out);
  std::ostream& os = emit.stream();
  if (!opt.dump_fixture.empty()) {
    write_json(os, dump_spec(golden_spec(golden_case(opt.dump_fixture))));
    return kExitAffirmative;
  }
  if (opt.list) {
    for (const auto& gc : golden_cases()) os << gc.name << "  point " << gc.point << "  " << gc.description << '\n';
    return kExitAffirmative;
  }
  if (!opt.perturb.empty()) golden_case(opt.perturb);  // reject unknown names up front
  bool all = true;
  for (const auto& gc : golden_cases()) {
    const GoldenOutcome outcome = run_golden(gc, gc.name == opt.perturb);
    all = all && outcome.pass;
    os << (outcome.pass ? "[PASS] " : "[FAIL] ") << outcome.name << ": " << outcome.detail << '\n';
  }
  return all ? kExitAffirmative : kExitNegative;
}

void add_config_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--precision", opt.precision, "Mantissa bits (>= 53)");
  cmd->add_option("--qmax", opt.qmax, "Largest denominator accepted for rational angles");
  cmd->add_option("--tol", opt.tol, "Zero tolerance (decimal), default 2^(-bits/2)");
  cmd->add_option("--out", opt.out_path, "Write the report here instead of stdout");
  cmd->add_flag("--dump-spec", opt.dump_spec, "Print the canonical spec file and exit");
  cmd->add_flag("--timing", opt.timing, "Add wall-clock time to the report");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Common zeros of order-two recursive polynomial sequences"};
  app.require_subcommand(1);
  Options opt;

  auto* classify = app.add_subcommand("classify", "Decide whether a point is a common zero");
  classify->add_option("--spec", opt.spec_path, "Spec file (JSON)")->required();
  classify->add_option("--point", opt.point, "Point: re,im or r@q/p (= r e^(i pi q/p))");
  classify->add_option("--format", opt.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  add_config_flags(classify, opt);

  auto* sequence = app.add_subcommand("sequence", "Tabulate W_n(c) by the recurrence");
  sequence->add_option("--spec", opt.spec_path, "Spec file (JSON)")->required();
  sequence->add_option("--point", opt.point, "Point: re,im or r@q/p");
  sequence->add_option("--nmax", opt.nmax, "Last index");
  sequence->add_option("--format", opt.format, "csv|json")->check(CLI::IsMember({"json", "csv"}));
  add_config_flags(sequence, opt);

  auto* scan = app.add_subcommand("scan", "Root-find W_1..W_nmax and cluster shared roots");
  scan->add_option("--spec", opt.spec_path, "Spec file (JSON)")->required();
  scan->add_option("--nmax", opt.nmax, "Last index (>= 2)");
  scan->add_option("--roots", opt.roots_path, "Write every root as CSV (n,re,im)");
  scan->add_option("--cluster-tol", opt.cluster_tol, "Merge distance for roots");
  scan->add_option("--format", opt.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  add_config_flags(scan, opt);

  auto* examples = app.add_subcommand("examples", "Run the built-in golden examples");
  examples->add_flag("--list", opt.list, "List the fixtures without running them");
  examples->add_option("--dump-spec", opt.dump_fixture, "Print the spec file of one fixture");
  examples->add_option("--perturb", opt.perturb, "Shift A(0) of one fixture by 1e-6 (negative control)");
  examples->add_option("--out", opt.out_path, "Write the summary here instead of stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "rpseq: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(opt, args, out);
    if (*sequence) return cmd_sequence(opt, args, out);
    if (*scan) return cmd_scan(opt, args, out);
    if (*examples) return cmd_examples(opt, out);
  } catch (const SpecError& e) {
    err << "rpseq: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "rpseq: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "rpseq: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "rpseq: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rpseq

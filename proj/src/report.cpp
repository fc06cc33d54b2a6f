#include "rpseq/report.hpp"

#include <sstream>

namespace rpseq {

using nlohmann::json;

namespace {

json residuals_json(const Residuals& residuals, const ReportFormat& fmt) {
  json out = json::object();
  for (const auto& [name, value] : residuals) out[name] = fmt.real(value);
  return out;
}

}  // namespace

json certificate_json(const CommonZeroCertificate& cert, const ReportFormat& fmt) {
  return json{{"p", cert.p},
              {"r", cert.r},
              {"u", fmt.complex(cert.uv.u)},
              {"v", fmt.complex(cert.uv.v)},
              {"delta", fmt.complex(cert.delta)},
              {"x_ratio", fmt.complex(cert.x_ratio)},
              {"angle_v", cert.angle_v.to_string()},
              {"angle_u", cert.angle_u.to_string()},
              {"residuals", residuals_json(cert.residuals, fmt)}};
}

json classification_json(const Classification& cls, const ReportFormat& fmt) {
  json out{{"verdict", to_string(cls.verdict)},
           {"reason", to_string(cls.reason)},
           {"qmax_used", cls.qmax_used},
           {"certificate", nullptr}};
  if (cls.verdict == Verdict::kDegenerate) out["first_zero_index"] = cls.first_zero_index;
  if (cls.certificate) out["certificate"] = certificate_json(*cls.certificate, fmt);
  if (cls.real) {
    out["real"] = {{"case", to_string(cls.real->kind)}, {"theta", fmt.real(cls.real->theta)}};
  }
  if (!cls.diagnostics.empty()) out["diagnostics"] = residuals_json(cls.diagnostics, fmt);
  return out;
}

json candidate_json(const Candidate& cand, const ReportFormat& fmt) {
  json members = json::array();
  for (const auto& m : cand.cluster.members) {
    members.push_back({{"n", m.index}, {"root", fmt.complex(m.root)}});
  }
  return json{{"center", fmt.complex(cand.cluster.center)},
              {"radius", cand.cluster.radius},
              {"members", members},
              {"observed_indices", cand.observed},
              {"predicted_indices", cand.predicted},
              {"consistent", cand.consistent()},
              {"classification", classification_json(cand.classification, fmt)}};
}

json witness_json(const WitnessReport& report, const ReportFormat& fmt) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"n", e.index}, {"root", fmt.complex(e.root)}, {"distance", fmt.real(e.distance)}});
  }
  json out{{"entries", entries}, {"note", report.note}, {"min_distance", nullptr}};
  if (report.min_distance) out["min_distance"] = fmt.real(*report.min_distance);
  return out;
}

std::string sequence_csv(const std::vector<Complex>& values, const ReportFormat& fmt) {
  std::ostringstream out;
  out << "n,re,im,abs\n";
  for (std::size_t n = 0; n < values.size(); ++n) {
    out << n << ',' << values[n].re.to_scientific(fmt.decimals) << ','
        << values[n].im.to_scientific(fmt.decimals) << ',' << abs(values[n]).to_scientific(fmt.decimals)
        << '\n';
  }
  return out.str();
}

json sequence_json(const std::vector<Complex>& values, const ReportFormat& fmt) {
  json rows = json::array();
  for (std::size_t n = 0; n < values.size(); ++n) {
    rows.push_back({{"n", n}, {"value", fmt.complex(values[n])}, {"abs", fmt.real(abs(values[n]))}});
  }
  return rows;
}

std::string roots_csv(const std::vector<ZeroSet>& zero_sets, const ReportFormat& fmt) {
  std::ostringstream out;
  out << "n,re,im\n";
  for (const auto& zs : zero_sets) {
    for (const auto& z : zs.roots) {
      out << zs.index << ',' << z.re.to_scientific(fmt.decimals) << ',' << z.im.to_scientific(fmt.decimals)
          << '\n';
    }
  }
  return out.str();
}

}  // namespace rpseq

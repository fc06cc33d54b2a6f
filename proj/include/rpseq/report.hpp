#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rpseq/characterize.hpp"
#include "rpseq/search.hpp"

namespace rpseq {

/// Reals serialize as strings in scientific notation with a fixed number of
/// decimals (mantissa_bits / 4 by convention), so reports are byte-stable.
struct ReportFormat {
  int decimals = 32;

  static ReportFormat for_config(const PrecisionConfig& cfg) { return {cfg.mantissa_bits / 4}; }

  nlohmann::json real(const Real& x) const { return x.to_scientific(decimals); }
  nlohmann::json complex(const Complex& z) const { return {{"re", real(z.re)}, {"im", real(z.im)}}; }
};

nlohmann::json certificate_json(const CommonZeroCertificate& cert, const ReportFormat& fmt);
nlohmann::json classification_json(const Classification& cls, const ReportFormat& fmt);
nlohmann::json candidate_json(const Candidate& cand, const ReportFormat& fmt);
nlohmann::json witness_json(const WitnessReport& report, const ReportFormat& fmt);

/// Header "n,re,im,abs", one row per W_n(c).
std::string sequence_csv(const std::vector<Complex>& values, const ReportFormat& fmt);
nlohmann::json sequence_json(const std::vector<Complex>& values, const ReportFormat& fmt);

/// Header "n,re,im", one row per root of every zero set.
std::string roots_csv(const std::vector<ZeroSet>& zero_sets, const ReportFormat& fmt);

}  // namespace rpseq

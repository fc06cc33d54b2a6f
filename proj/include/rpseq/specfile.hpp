#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rpseq/complex.hpp"
#include "rpseq/polyseq.hpp"

namespace rpseq {

/// Malformed spec file or point; `field` names the offending entry
/// (e.g. "A[1].theta_pi").
class SpecError : public std::runtime_error {
 public:
  SpecError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Command-line settings that take precedence over the file.
struct ConfigOverrides {
  std::optional<int> precision_bits;
  std::optional<long> angle_qmax;
  std::optional<std::string> zero_tol;
};

/// Spec file layout:
///   { "precision_bits": 128, "angle_qmax": 512,
///     "A": [...], "B": [...], "W1": [...] }
/// Coefficients ascend in degree. Each entry is one of
///   ["re", "im"]                         rectangular, decimal or "p/q" parts
///   {"r": "1", "theta_pi": "-2/3"}       r e^(i pi q/p)
///   {"a": "1", "b": "-1", "n": "3"}      a + b sqrt(n)
/// A bare string or number is a real coefficient.
SequenceSpec parse_spec(const nlohmann::json& doc, const ConfigOverrides& overrides = {});
SequenceSpec parse_spec_text(std::string_view text, const ConfigOverrides& overrides = {});
SequenceSpec load_spec_file(const std::string& path, const ConfigOverrides& overrides = {});

/// "re,im" (decimal or rational parts) or "r@q/p" meaning r e^(i pi q/p).
Complex parse_point(std::string_view text, mpfr_prec_t bits);

/// Canonical spec file: rectangular entries with round-trip exact decimals.
nlohmann::json dump_spec(const SequenceSpec& spec);

}  // namespace rpseq

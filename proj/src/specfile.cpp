#include "rpseq/specfile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace rpseq {

namespace {

using nlohmann::json;

Real parse_real(const json& node, mpfr_prec_t bits, const std::string& field) {
  try {
    if (node.is_string()) return Real::parse(node.get<std::string>(), bits);
    if (node.is_number_integer()) return Real(node.get<long>(), bits);
    if (node.is_number()) return Real::parse(node.dump(), bits);
  } catch (const std::invalid_argument& e) {
    throw SpecError(field, e.what());
  }
  throw SpecError(field, "expected a decimal or rational string");
}

long parse_long(std::string_view text, const std::string& field) {
  long value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw SpecError(field, "expected an integer, got '" + std::string(text) + "'");
  return value;
}

// "q/p" in units of pi.
Real parse_pi_fraction(std::string_view text, mpfr_prec_t bits, const std::string& field) {
  const auto slash = text.find('/');
  const long q = parse_long(text.substr(0, slash), field);
  const long p = slash == std::string_view::npos ? 1 : parse_long(text.substr(slash + 1), field);
  if (p == 0) throw SpecError(field, "zero denominator");
  return Real::pi(bits) * q / p;
}

Complex parse_coefficient(const json& node, mpfr_prec_t bits, const std::string& field) {
  if (node.is_array()) {
    if (node.size() != 2) throw SpecError(field, "rectangular entry needs [re, im]");
    return {parse_real(node[0], bits, field + ".re"), parse_real(node[1], bits, field + ".im")};
  }
  if (node.is_object()) {
    if (node.contains("r") || node.contains("theta_pi")) {
      if (!node.contains("r") || !node.contains("theta_pi") || !node["theta_pi"].is_string()) {
        throw SpecError(field, "polar entry needs string fields r and theta_pi");
      }
      const Real r = parse_real(node["r"], bits, field + ".r");
      return Complex::from_polar(r, parse_pi_fraction(node["theta_pi"].get<std::string>(), bits,
                                                      field + ".theta_pi"));
    }
    if (node.contains("a") && node.contains("b") && node.contains("n")) {
      const Real a = parse_real(node["a"], bits, field + ".a");
      const Real b = parse_real(node["b"], bits, field + ".b");
      const Real n = parse_real(node["n"], bits, field + ".n");
      if (n.sign() < 0) throw SpecError(field + ".n", "surd radicand must be nonnegative");
      return Complex(a + b * sqrt(n));
    }
    throw SpecError(field, "object entry must be polar {r, theta_pi} or surd {a, b, n}");
  }
  if (node.is_string() || node.is_number()) return Complex(parse_real(node, bits, field));
  throw SpecError(field, "unrecognized coefficient entry");
}

Polynomial parse_polynomial(const json& doc, const char* name, mpfr_prec_t bits) {
  if (!doc.contains(name)) throw SpecError(name, "missing polynomial");
  const json& list = doc[name];
  if (!list.is_array()) throw SpecError(name, "expected a list of coefficients");
  std::vector<Complex> coeffs;
  for (std::size_t k = 0; k < list.size(); ++k) {
    coeffs.push_back(parse_coefficient(list[k], bits, std::string(name) + "[" + std::to_string(k) + "]"));
  }
  return Polynomial(std::move(coeffs));
}

json dump_polynomial(const Polynomial& p) {
  json out = json::array();
  for (const auto& a : p.coeffs()) out.push_back({a.re.to_exact_decimal(), a.im.to_exact_decimal()});
  return out;
}

}  // namespace

SequenceSpec parse_spec(const json& doc, const ConfigOverrides& overrides) {
  if (!doc.is_object()) throw SpecError("spec", "top level must be a JSON object");
  int bits = 128;
  if (doc.contains("precision_bits")) {
    if (!doc["precision_bits"].is_number_integer()) throw SpecError("precision_bits", "expected an integer");
    bits = doc["precision_bits"].get<int>();
  }
  if (overrides.precision_bits) bits = *overrides.precision_bits;
  if (bits < 53) throw SpecError("precision_bits", "must be >= 53");

  PrecisionConfig cfg = PrecisionConfig::with_bits(bits);
  if (doc.contains("angle_qmax")) {
    if (!doc["angle_qmax"].is_number_integer()) throw SpecError("angle_qmax", "expected an integer");
    cfg.angle_qmax = doc["angle_qmax"].get<long>();
  }
  if (overrides.angle_qmax) cfg.angle_qmax = *overrides.angle_qmax;
  if (cfg.angle_qmax < 2) throw SpecError("angle_qmax", "must be >= 2");
  if (overrides.zero_tol) {
    cfg.zero_tol = parse_real(json(*overrides.zero_tol), bits, "tol");
    if (!(cfg.zero_tol.sign() > 0)) throw SpecError("tol", "must be > 0");
  }

  Polynomial a = parse_polynomial(doc, "A", bits);
  Polynomial b = parse_polynomial(doc, "B", bits);
  Polynomial w1 = parse_polynomial(doc, "W1", bits);
  if (b.is_zero()) throw SpecError("B", "must not be the zero polynomial");
  return SequenceSpec(std::move(a), std::move(b), std::move(w1), std::move(cfg));
}

SequenceSpec parse_spec_text(std::string_view text, const ConfigOverrides& overrides) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError("spec", std::string("invalid JSON: ") + e.what());
  }
  return parse_spec(doc, overrides);
}

SequenceSpec load_spec_file(const std::string& path, const ConfigOverrides& overrides) {
  std::ifstream in(path);
  if (!in) throw SpecError("spec", "cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_spec_text(buffer.str(), overrides);
}

Complex parse_point(std::string_view text, mpfr_prec_t bits) {
  const auto at = text.find('@');
  if (at != std::string_view::npos) {
    const Real r = parse_real(json(std::string(text.substr(0, at))), bits, "point.r");
    return Complex::from_polar(r, parse_pi_fraction(text.substr(at + 1), bits, "point.theta_pi"));
  }
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    return Complex(parse_real(json(std::string(text)), bits, "point.re"));
  }
  return {parse_real(json(std::string(text.substr(0, comma))), bits, "point.re"),
          parse_real(json(std::string(text.substr(comma + 1))), bits, "point.im")};
}

json dump_spec(const SequenceSpec& spec) {
  return json{{"precision_bits", spec.cfg.mantissa_bits},
              {"angle_qmax", spec.cfg.angle_qmax},
              {"A", dump_polynomial(spec.A)},
              {"B", dump_polynomial(spec.B)},
              {"W1", dump_polynomial(spec.W1)}};
}

}  // namespace rpseq

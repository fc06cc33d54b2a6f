#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rpseq/cli.hpp"
#include "rpseq/fixtures.hpp"
#include "rpseq/specfile.hpp"
#include "support.hpp"

using namespace rpseq;
using namespace rpseq::testing;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rpseq");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(RPSEQ_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "rpseq-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& path, const std::string& text) { std::ofstream(path) << text; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

}  // namespace

TEST_CASE("classify the quadratic example at e^(i pi/6)") {
  const Run r = run({"classify", "--spec", data("quadratic-pi6.json"), "--point", "1@1/6"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["classification"]["verdict"] == "periodic");
  CHECK(doc["classification"]["certificate"]["p"] == 4);
  CHECK(doc["classification"]["certificate"]["r"] == 3);
  CHECK(doc["classification"]["certificate"]["angle_v"] == "-1/4");
  CHECK(doc["classification"]["certificate"]["angle_u"] == "1/4");
  CHECK(doc["config"]["precision_bits"] == 128);
  CHECK_FALSE(doc.contains("timing_ms"));
  // 128 bits print with 32 decimals.
  const std::string re = doc["point"]["re"];
  CHECK(re == "8.66025403784438646763723170752936e-01");
}

TEST_CASE("classify rejects the quadratic example at 2") {
  const Run r = run({"classify", "--spec", data("quadratic-pi6.json"), "--point", "2,0"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["classification"]["verdict"] == "not-common-zero");
}

TEST_CASE("classify on real data adds theta and the tan identity") {
  const Run r = run({"classify", "--spec", data("family-pi3-a0-b1.json"), "--point", "1"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["classification"]["real"]["case"] == "delta-negative-angular");
  CHECK(doc["checks"].contains("tan_r_theta"));
  CHECK(doc["checks"]["corollary_arg"]["q"] == 1);
}

TEST_CASE("classify csv format") {
  const Run r = run({"classify", "--spec", data("complex-coeff.json"), "--point", "0.5@1/3", "--format", "csv"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "verdict,reason,p,r,angle_v,angle_u,first_zero_index");
  CHECK(split(rows[1])[0] == "periodic");
  CHECK(split(rows[1])[2] == "4");
  CHECK(split(rows[1])[3] == "2");
}

TEST_CASE("exit code matrix") {
  const fs::path bad_json = scratch("bad.json");
  write_file(bad_json, "{\"A\": [[\"1\", \"0\"]], ");
  const fs::path zero_b = scratch("zero-b.json");
  write_file(zero_b, R"({"A": [["1", "0"]], "B": [["0", "0"]], "W1": [["1", "0"]]})");
  const fs::path bad_coeff = scratch("bad-coeff.json");
  write_file(bad_coeff, R"({"A": [["x", "0"]], "B": [["1", "0"]], "W1": [["1", "0"]]})");
  const fs::path low_bits = scratch("low-bits.json");
  write_file(low_bits, R"({"precision_bits": 16, "A": [["1", "0"]], "B": [["1", "0"]], "W1": [["1", "0"]]})");

  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases = {
      {{"classify", "--spec", data("quadratic-pi6.json"), "--point", "1@1/6"}, 0},
      {{"classify", "--spec", data("quadratic-pi6.json"), "--point", "2,0"}, 1},
      {{"classify", "--spec", data("fibonacci.json"), "--point", "0"}, 1},
      {{"classify", "--spec", data("missing.json"), "--point", "1"}, 2},
      {{"classify", "--spec", bad_json.string(), "--point", "1"}, 2},
      {{"classify", "--spec", zero_b.string(), "--point", "1"}, 2},
      {{"classify", "--spec", bad_coeff.string(), "--point", "1"}, 2},
      {{"classify", "--spec", low_bits.string(), "--point", "1"}, 2},
      {{"classify", "--spec", data("quadratic-pi6.json"), "--point", "1@x"}, 2},
      {{"classify", "--spec", data("quadratic-pi6.json")}, 2},
      {{"classify", "--spec", data("quadratic-pi6.json"), "--point", "1", "--precision", "20"}, 2},
      {{"classify", "--spec", data("quadratic-pi6.json"), "--point", "1", "--qmax", "1"}, 2},
      {{"classify", "--spec", data("quadratic-pi6.json"), "--point", "1", "--tol", "-1"}, 2},
      {{"classify", "--spec", data("quadratic-pi6.json"), "--point", "1", "--format", "xml"}, 2},
      {{"classify", "--point", "1"}, 2},
      {{"sequence", "--spec", data("quadratic-pi6.json"), "--point", "1", "--nmax", "3"}, 0},
      {{"sequence", "--spec", data("quadratic-pi6.json"), "--point", "1"}, 2},
      {{"scan", "--spec", data("fibonacci.json"), "--nmax", "6"}, 0},
      {{"scan", "--spec", data("fibonacci.json"), "--nmax", "1"}, 2},
      {{"examples", "--list"}, 0},
      {{"examples", "--perturb", "no-such-case"}, 2},
      {{"frobnicate"}, 2},
      {{}, 2},
  };
  for (const auto& c : cases) {
    const Run r = run(c.args);
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    INFO(joined);
    CHECK(r.code == c.code);
    if (c.code == 2) CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("diagnostics name the failing field") {
  const fs::path bad_coeff = scratch("bad-w1.json");
  write_file(bad_coeff, R"({"A": [["1", "0"]], "B": [["1", "0"]], "W1": [["1", "oops"]]})");
  CHECK(run({"classify", "--spec", bad_coeff.string(), "--point", "1"}).err.find("W1") != std::string::npos);
  CHECK(run({"classify", "--spec", data("quadratic-pi6.json"), "--point", "1,zz"}).err.find("point") != std::string::npos);
}

TEST_CASE("sequence rows") {
  const Run fib = run({"sequence", "--spec", data("fibonacci.json"), "--point", "0.3,0.7", "--nmax", "6"});
  CHECK(fib.code == 0);
  const auto rows = lines(fib.out);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0] == "n,re,im,abs");
  const auto first = split(rows[1]);
  CHECK(first[0] == "0");
  CHECK(Real::parse(first[1], kBits) == R(1));
  CHECK(Real::parse(first[2], kBits) == R(0));
  CHECK(Real::parse(first[3], kBits) == R(1));
  const long fibs[] = {1, 1, 2, 3, 5, 8, 13};
  for (int n = 0; n <= 6; ++n) CHECK(Real::parse(split(rows[n + 1])[1], kBits) == R(fibs[n]));

  const Run cc = run({"sequence", "--spec", data("complex-coeff.json"), "--point", "0.5@1/3", "--nmax", "12"});
  const auto cc_rows = lines(cc.out);
  REQUIRE(cc_rows.size() == 14);
  for (int n : {2, 6, 10}) CHECK(Real::parse(split(cc_rows[n + 1])[3], kBits) <= R("1e-30"));
  for (int n : {1, 3, 4, 5, 7, 8, 9, 11, 12}) CHECK(Real::parse(split(cc_rows[n + 1])[3], kBits) > R("1e-3"));

  const Run js = run({"sequence", "--spec", data("fibonacci.json"), "--point", "1", "--nmax", "2", "--format", "json"});
  CHECK(json::parse(js.out)["rows"].size() == 3);
}

TEST_CASE("scan examples") {
  const Run quad = run({"scan", "--spec", data("quadratic-pi6.json"), "--nmax", "12"});
  CHECK(quad.code == 0);
  const json doc = json::parse(quad.out);
  bool found = false;
  for (const auto& cand : doc["candidates"]) {
    const Complex center(Real::parse(cand["center"]["re"].get<std::string>(), kBits),
                         Real::parse(cand["center"]["im"].get<std::string>(), kBits));
    if (abs(center - cis_pi(1, 6)) <= R("1e-10")) {
      found = true;
      CHECK(cand["observed_indices"] == json({3, 7, 11}));
      CHECK(cand["consistent"] == true);
    }
  }
  CHECK(found);

  const Run fib = run({"scan", "--spec", data("fibonacci.json"), "--nmax", "12"});
  CHECK(fib.code == 0);
  CHECK(json::parse(fib.out)["candidates"].empty());

  const fs::path roots = scratch("roots.csv");
  const Run fam = run({"scan", "--spec", data("family-pi6-a1-b2.json"), "--nmax", "14", "--roots", roots.string()});
  CHECK(fam.code == 0);
  const json fdoc = json::parse(fam.out);
  REQUIRE(fdoc["candidates"].size() == 1);
  CHECK(fdoc["candidates"][0]["observed_indices"] == json({2, 8, 14}));
  const Real re = Real::parse(fdoc["candidates"][0]["center"]["re"].get<std::string>(), kBits);
  CHECK(abs(re - R(1)) <= R("1e-10"));
  std::ifstream in(roots);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,re,im");
  int count = 0;
  for (std::string line; std::getline(in, line);) ++count;
  // deg W_n = n for W1 = z, A linear, B constant.
  CHECK(count == 14 * 15 / 2);
}

TEST_CASE("output is deterministic and --out writes the same bytes") {
  const std::vector<std::string> args = {"scan", "--spec", data("quadratic-pi6.json"), "--nmax", "10"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.out == b.out);
  const fs::path out = scratch("scan.json");
  auto with_out = args;
  with_out.insert(with_out.end(), {"--out", out.string()});
  const Run c = run(with_out);
  CHECK(c.out.empty());
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  // argv differs by the --out flag only.
  json ja = json::parse(a.out);
  json jc = json::parse(buf.str());
  ja.erase("argv");
  jc.erase("argv");
  CHECK(ja == jc);

  const Run t = run({"classify", "--spec", data("quadratic-pi6.json"), "--point", "1@1/6", "--timing"});
  CHECK(json::parse(t.out).contains("timing_ms"));
}

TEST_CASE("dump-spec round trip") {
  for (const auto& name : {"quadratic-pi6.json", "complex-coeff.json", "family-pi4-a1-b2.json", "real-odd.json"}) {
    const SequenceSpec original = load_spec_file(data(name));
    const Run dumped = run({"classify", "--spec", data(name), "--dump-spec"});
    REQUIRE(dumped.code == 0);
    const SequenceSpec again = parse_spec_text(dumped.out);
    CHECK(again.A == original.A);
    CHECK(again.B == original.B);
    CHECK(again.W1 == original.W1);
    CHECK(again.cfg.mantissa_bits == original.cfg.mantissa_bits);
    CHECK(again.cfg.angle_qmax == original.cfg.angle_qmax);
    CHECK(again.cfg.zero_tol == original.cfg.zero_tol);
  }
}

TEST_CASE("flags override the spec file") {
  const Run r = run({"classify", "--spec", data("quadratic-pi6.json"), "--point", "1@1/6", "--precision", "256", "--qmax", "64",
                     "--tol", "1e-40"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["config"]["precision_bits"] == 256);
  CHECK(doc["config"]["angle_qmax"] == 64);
  CHECK(Real::parse(doc["config"]["zero_tol"].get<std::string>(), 256) == Real::parse("1e-40", 256));
  CHECK(doc["classification"]["qmax_used"] == 64);
  const std::string re = doc["point"]["re"];
  CHECK(re.size() == std::string("8.").size() + 64 + std::string("e-01").size());
  // qmax below p*(v) = 4 makes the angle undetectable.
  const Run small = run({"classify", "--spec", data("quadratic-pi6.json"), "--point", "1@1/6", "--qmax", "3"});
  CHECK(small.code == 1);
  CHECK(json::parse(small.out)["classification"]["reason"] == "angle-not-detected");
}

TEST_CASE("examples subcommand") {
  const Run all = run({"examples"});
  CHECK(all.code == 0);
  const auto rows = lines(all.out);
  CHECK(rows.size() == golden_cases().size());
  for (const auto& row : rows) CHECK(row.rfind("[PASS] ", 0) == 0);

  const Run bad = run({"examples", "--perturb", "quadratic-pi6"});
  CHECK(bad.code == 1);
  CHECK(lines(bad.out)[0].rfind("[FAIL] quadratic-pi6", 0) == 0);

  const Run list = run({"examples", "--list"});
  CHECK(list.code == 0);
  CHECK(lines(list.out).size() == golden_cases().size());
  CHECK(list.out.find("[PASS]") == std::string::npos);

  const Run dump = run({"examples", "--dump-spec", "complex-coeff"});
  CHECK(dump.code == 0);
  CHECK(parse_spec_text(dump.out).A == golden_spec(golden_case("complex-coeff")).A);
}

TEST_CASE("golden fixtures agree with the data files") {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"quadratic-pi6", "quadratic-pi6.json"}, {"complex-coeff", "complex-coeff.json"}, {"family-pi6-a1-b2", "family-pi6-a1-b2.json"}};
  for (const auto& [fixture, file] : pairs) {
    const SequenceSpec a = golden_spec(golden_case(fixture));
    const SequenceSpec b = load_spec_file(data(file));
    CHECK(a.A == b.A);
    CHECK(a.B == b.B);
    CHECK(a.W1 == b.W1);
  }
}

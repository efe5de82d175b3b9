#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "milnor/analysis.hpp"
#include "milnor/support.hpp"

using namespace milnor;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run analyze(AnalyzeOptions o, const ValidationOptions& v = {}) {
  std::ostringstream out, err;
  const int code = run_analyze(o, out, err, v);
  return {code, out.str(), err.str()};
}

AnalyzeOptions json_for(const std::string& poly) {
  AnalyzeOptions o;
  o.polynomial = poly;
  o.format = OutputFormat::Json;
  return o;
}

}  // namespace

TEST_CASE("JSON document for the cusp") {
  AnalyzeOptions o = json_for("x^2 + y^3");
  o.emit_hodge_tables = true;
  const Run r = analyze(o);
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["mu"] == 2);
  CHECK(doc["n"] == 2);
  CHECK(doc["variables"] == nlohmann::json{"x", "y"});
  CHECK(doc["blocks"] == nlohmann::json{{"1/6", {{"1", 1}}}, {"5/6", {{"1", 1}}}});
  CHECK(doc["multiplicities"] == nlohmann::json{{"1/6", 1}, {"5/6", 1}});
  CHECK(doc["faces"].size() == 3);
  CHECK(doc["hodge_tables"]["total"].size() == 3);
  CHECK(doc["fastpaths"]["unipotent"]["size_n_minus_1"] == 0);
  CHECK(r.err.find("elapsed:") != std::string::npos);
}

TEST_CASE("table report") {
  AnalyzeOptions o;
  o.polynomial = "x^5 + x^2*y^2 + y^5";
  o.validate = true;
  const Run r = analyze(o);
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("mu = 11") != std::string::npos);
  CHECK(r.out.find("validation: passed") != std::string::npos);
}

TEST_CASE("eigenvalue filter and fast-only mode") {
  AnalyzeOptions o = json_for("x^5 + x^2*y^2 + y^5");
  o.eigenvalue = RootOfUnity(1, 2);
  const auto doc = nlohmann::json::parse(analyze(o).out);
  CHECK(doc["blocks"] == nlohmann::json{{"1/2", {{"2", 1}}}});
  CHECK(doc["fastpaths"]["top"]["1/2"]["size_n"] == 1);

  AnalyzeOptions fast = json_for("x^5 + x^2*y^2 + y^5");
  fast.fast_only = true;
  const auto fdoc = nlohmann::json::parse(analyze(fast).out);
  CHECK(fdoc["mu"] == 11);
  CHECK_FALSE(fdoc.contains("blocks"));
}

TEST_CASE("input errors exit with code 2") {
  AnalyzeOptions missing;
  missing.support_path = std::filesystem::path(MILNOR_TEST_DATA) / "missing_axis.json";
  const Run r = analyze(missing);
  CHECK(r.code == kExitInput);
  CHECK(r.err.find("y-axis") != std::string::npos);
  CHECK(r.out.empty());

  CHECK(analyze(json_for("x^2 + * y")).code == kExitInput);
  CHECK(analyze(json_for("x^2 - x^2 + y^3")).code == kExitInput);
  CHECK(analyze(AnalyzeOptions{}).code == kExitInput);
}

TEST_CASE("size guard") {
  const std::string seven = "x1^2 + x2^2 + x3^2 + x4^2 + x5^2 + x6^2 + x7^2";
  const Run guarded = analyze(json_for(seven));
  CHECK(guarded.code == kExitInput);
  CHECK(guarded.err.find("--unsafe-large") != std::string::npos);
  AnalyzeOptions o = json_for(seven);
  o.unsafe_large = true;
  o.fast_only = true;
  const Run r = analyze(o);
  REQUIRE(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["mu"] == 1);
}

TEST_CASE("a corrupted table fails validation with code 3") {
  AnalyzeOptions o = json_for("x^2 + y^3");
  o.validate = true;
  ValidationOptions v;
  v.tamper = [](MotivicTable& t) { t.total.add(0, 0, RootOfUnity(1, 6), 1); };
  const Run r = analyze(o, v);
  CHECK(r.code == kExitInternal);
  CHECK(r.err.find("validation failed") != std::string::npos);
  CHECK(nlohmann::json::parse(r.out)["validation"]["passed"] == false);
}

TEST_CASE("support files round-trip") {
  const std::string poly = "x^4 + y^4 + z^4 + x^2*y^2*z^2";
  const auto path = std::filesystem::temp_directory_path() / "milnor_roundtrip_support.json";
  {
    std::ofstream f(path);
    f << support_to_json(parse_polynomial(poly));
  }
  AnalyzeOptions from_file;
  from_file.support_path = path;
  from_file.format = OutputFormat::Json;
  const auto a = nlohmann::json::parse(analyze(json_for(poly)).out);
  const auto b = nlohmann::json::parse(analyze(from_file).out);
  std::filesystem::remove(path);
  for (const char* key : {"variables", "support", "faces", "mu", "blocks", "fastpaths"}) CHECK(a[key] == b[key]);
}

TEST_CASE("output is deterministic") {
  AnalyzeOptions o = json_for("x^7 + y^7 + z^7 + x^2*y^2*z^2");
  o.emit_hodge_tables = true;
  CHECK(analyze(o).out == analyze(o).out);
}

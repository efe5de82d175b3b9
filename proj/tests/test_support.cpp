#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "milnor/errors.hpp"
#include "milnor/support.hpp"

using namespace milnor;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("milnor_test_" + name);
  std::ofstream(path) << text;
  return path;
}

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse_polynomial reads exponent vectors") {
  const SupportSet s = parse_polynomial("x^2 + y^3");
  CHECK(s.variables == std::vector<std::string>{"x", "y"});
  CHECK(s.points == std::vector<ExponentVector>{{0, 3}, {2, 0}});

  const SupportSet t = parse_polynomial("x^5 + x^2*y^2 + y^5");
  CHECK(t.points == std::vector<ExponentVector>{{0, 5}, {2, 2}, {5, 0}});
}

TEST_CASE("coefficients are collected exactly before being dropped") {
  CHECK(message_of([] { parse_polynomial("x^2 - x^2 + y"); }).find("degenerate support in x") != std::string::npos);
  CHECK(parse_polynomial("1/2*x^2 + y^3 - 1/2 x^2 + x*y").points == std::vector<ExponentVector>{{0, 3}, {1, 1}});
  CHECK(parse_polynomial("3 x^2 + 2*y^3 - x*x").points == std::vector<ExponentVector>{{0, 3}, {2, 0}});
  CHECK_THROWS_AS(parse_polynomial("x - x + y - y"), InputError);
}

TEST_CASE("variable orders") {
  CHECK(parse_polynomial("z^2 + x^3 + y^4").variables == std::vector<std::string>{"x", "y", "z"});
  const SupportSet big = parse_polynomial("x1^2 + x2^2 + x3^2 + x4^2 + x5^2");
  CHECK(big.n() == 5);
  CHECK(big.variables.back() == "x5");
  const SupportSet ordered = parse_polynomial("a^2 + b^3", std::vector<std::string>{"b", "a"});
  CHECK(ordered.points == std::vector<ExponentVector>{{0, 2}, {3, 0}});
  CHECK(message_of([] { parse_polynomial("a^2 + b^3"); }).find("unknown variable") != std::string::npos);
  CHECK(message_of([] { parse_polynomial("x^2 + q^3", std::vector<std::string>{"x", "y"}); })
            .find("unknown variable 'q'") != std::string::npos);
  CHECK(default_variables(4) == std::vector<std::string>{"x", "y", "z", "w"});
  CHECK(default_variables(6).front() == "x1");
}

TEST_CASE("syntax errors report a position") {
  const std::string msg = message_of([] { parse_polynomial("x^2 + * y"); });
  CHECK(msg.find("position 6") != std::string::npos);
  CHECK_THROWS_AS(parse_polynomial("x^"), InputError);
  CHECK_THROWS_AS(parse_polynomial("x^2 y^3"), InputError);
  CHECK_THROWS_AS(parse_polynomial("2/0*x^2 + y^2"), InputError);
  CHECK_THROWS_AS(parse_polynomial(""), InputError);
  CHECK_THROWS_AS(parse_polynomial("x^3"), InputError);  // a single variable
}

TEST_CASE("parsing ignores term order and whitespace") {
  const SupportSet a = parse_polynomial("x^5+x^2*y^2+y^5");
  CHECK(parse_polynomial("  y^5 +x^2 * y^2+   x^5 ") == a);
  CHECK(parse_polynomial("x^2*y^2 + y^5 + x^5") == a);
  CHECK(parse_polynomial("y^2*x^2 + y^5 + x^5") == a);
}

TEST_CASE("load_support reads the JSON schema") {
  const auto ok = write_temp("ok.json", R"({"variables":["x","y"],"support":[[2,0],[0,3]]})");
  const SupportSet s = load_support(ok);
  CHECK(s.n() == 2);
  CHECK(s.points == std::vector<ExponentVector>{{0, 3}, {2, 0}});

  const auto dup = write_temp("dup.json", R"({"variables":["x","y"],"support":[[2,0],[2,0]]})");
  CHECK(message_of([&] { load_support(dup); }).find("duplicate") != std::string::npos);

  const auto mismatch = write_temp("mismatch.json", R"({"variables":["x","y","z"],"support":[[2,0]]})");
  CHECK(message_of([&] { load_support(mismatch); }).find("dimension mismatch") != std::string::npos);

  const auto broken = write_temp("broken.json", R"({"variables":["x","y"],"support":[[2,0],)");
  CHECK(message_of([&] { load_support(broken); }).find("malformed") != std::string::npos);

  CHECK_THROWS_AS(load_support("/nonexistent/support.json"), InputError);
  CHECK_THROWS_AS(support_from_json(R"({"variables":["x","y"],"support":[[-1,2]]})"), InputError);
  CHECK_THROWS_AS(support_from_json(R"({"variables":["x","y"],"support":[]})"), InputError);
}

TEST_CASE("parse, serialize and load round-trip") {
  for (const char* text : {"x^2 + y^3", "x^5 + x^2*y^2 + y^5", "x^4+y^4+z^4+x^2*y^2*z^2", "x1^2+x2^3+x3^4+x4^5+x5^2"}) {
    const SupportSet s = parse_polynomial(text);
    const auto path = write_temp("roundtrip.json", support_to_json(s));
    CHECK(load_support(path) == s);
  }
}

#include "milnor/support.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "milnor/errors.hpp"

namespace milnor {
namespace {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct Term {
  Rational coefficient;
  std::map<std::string, Int> powers;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip();
    int sign = 1;
    if (peek('+') || peek('-')) sign = (text_[pos_++] == '-') ? -1 : 1;
    terms.push_back(term(sign));
    while (true) {
      skip();
      if (pos_ == text_.size()) break;
      if (!(peek('+') || peek('-'))) fail("expected '+' or '-'");
      sign = (text_[pos_++] == '-') ? -1 : 1;
      terms.push_back(term(sign));
    }
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool at_digit() {
    skip();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  bool at_identifier() {
    skip();
    return pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_');
  }

  BigInt integer() {
    if (!at_digit()) fail("expected an integer");
    BigInt v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) v = v * 10 + (text_[pos_++] - '0');
    return v;
  }

  std::string identifier() {
    if (!at_identifier()) fail("expected a variable");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Term term(int sign) {
    Term t{Rational(sign), {}};
    bool need_factor = true;
    if (at_digit()) {
      BigInt num = integer();
      BigInt den = 1;
      if (peek('/')) {
        ++pos_;
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      t.coefficient *= Rational(num, den);
      need_factor = false;
      if (peek('*')) {
        ++pos_;
        need_factor = true;
      }
    }
    if (!need_factor && !at_identifier()) return t;  // bare constant
    factor(t);
    while (peek('*')) {
      ++pos_;
      factor(t);
    }
    return t;
  }

  void factor(Term& t) {
    const std::string name = identifier();
    Int e = 1;
    if (peek('^')) {
      ++pos_;
      const BigInt v = integer();
      if (v > 1000000) fail("exponent too large");
      e = static_cast<Int>(v);
    }
    t.powers[name] += e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::string> infer_variables(const std::set<std::string>& used) {
  static const std::vector<std::string> letters{"x", "y", "z", "w"};
  int last = -1;
  bool all_letters = true;
  for (const auto& u : used) {
    auto it = std::find(letters.begin(), letters.end(), u);
    if (it == letters.end()) {
      all_letters = false;
      break;
    }
    last = std::max(last, static_cast<int>(it - letters.begin()));
  }
  if (all_letters) return {letters.begin(), letters.begin() + (last + 1)};
  int max_index = 0;
  for (const auto& u : used) {
    const bool indexed = u.size() >= 2 && u[0] == 'x' && u[1] != '0' &&
                         std::all_of(u.begin() + 1, u.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (!indexed) throw InputError("unknown variable '" + u + "' (give an explicit variable order)");
    max_index = std::max(max_index, std::stoi(u.substr(1)));
  }
  return default_variables(std::max(max_index, 5));
}

}  // namespace

std::vector<std::string> default_variables(int n) {
  if (n <= 4) {
    static const std::vector<std::string> letters{"x", "y", "z", "w"};
    return {letters.begin(), letters.begin() + std::max(n, 0)};
  }
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

SupportSet make_support(std::vector<std::string> variables, std::vector<ExponentVector> points) {
  const int n = static_cast<int>(variables.size());
  if (n < 2) throw InputError("need at least 2 variables, got " + std::to_string(n));
  if (std::set<std::string>(variables.begin(), variables.end()).size() != variables.size())
    throw InputError("duplicate variable name");
  if (points.empty()) throw InputError("empty support");
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != n)
      throw InputError("dimension mismatch: point " + to_string(p) + " has " + std::to_string(p.size()) +
                       " entries for " + std::to_string(n) + " variables");
    for (Int e : p)
      if (e < 0) throw InputError("negative exponent in " + to_string(p));
  }
  std::sort(points.begin(), points.end());
  if (auto it = std::adjacent_find(points.begin(), points.end()); it != points.end())
    throw InputError("duplicate support point " + to_string(*it));
  return SupportSet{std::move(variables), std::move(points)};
}

SupportSet parse_polynomial(std::string_view text, const std::optional<std::vector<std::string>>& variable_order) {
  const std::vector<Term> terms = Parser(text).parse();
  std::set<std::string> used;
  for (const auto& t : terms)
    for (const auto& [name, e] : t.powers) used.insert(name);

  std::vector<std::string> variables;
  if (variable_order) {
    variables = *variable_order;
    for (const auto& u : used)
      if (std::find(variables.begin(), variables.end(), u) == variables.end())
        throw InputError("unknown variable '" + u + "'");
  } else {
    variables = infer_variables(used);
  }
  const int n = static_cast<int>(variables.size());
  if (n < 2) throw InputError("need at least 2 variables, got " + std::to_string(n));

  std::map<ExponentVector, Rational> collected;
  for (const auto& t : terms) {
    ExponentVector v(n, 0);
    for (const auto& [name, e] : t.powers) v[std::find(variables.begin(), variables.end(), name) - variables.begin()] += e;
    collected[v] += t.coefficient;
  }
  std::vector<ExponentVector> points;
  for (const auto& [v, c] : collected)
    if (c != 0) points.push_back(v);
  if (points.empty()) throw InputError("empty support after cancellation");
  for (int i = 0; i < n; ++i) {
    const bool occurs = std::any_of(points.begin(), points.end(), [&](const ExponentVector& p) { return p[i] > 0; });
    if (!occurs) throw InputError("empty-or-degenerate support in " + variables[i]);
  }
  return make_support(std::move(variables), std::move(points));
}

SupportSet support_from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed support document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("variables") || !doc.contains("support") || !doc["variables"].is_array() ||
      !doc["support"].is_array())
    throw InputError("malformed support document: expected {\"variables\": [...], \"support\": [[...], ...]}");
  std::vector<std::string> variables;
  std::vector<ExponentVector> points;
  try {
    for (const auto& v : doc["variables"]) variables.push_back(v.get<std::string>());
    for (const auto& p : doc["support"]) {
      if (!p.is_array()) throw InputError("malformed support document: support entries must be arrays");
      ExponentVector e;
      for (const auto& x : p) {
        if (!x.is_number_integer()) throw InputError("malformed support document: exponents must be integers");
        e.push_back(x.get<Int>());
      }
      points.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed support document: ") + e.what());
  }
  return make_support(std::move(variables), std::move(points));
}

SupportSet load_support(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open support file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return support_from_json(ss.str());
}

std::string support_to_json(const SupportSet& support) {
  nlohmann::json doc;
  doc["variables"] = support.variables;
  doc["support"] = support.points;
  return doc.dump();
}

}  // namespace milnor

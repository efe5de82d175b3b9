#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "milnor/integer.hpp"

namespace milnor {

// Monomial exponents, one nonnegative entry per variable.
using ExponentVector = IVec;

/// The support of a polynomial: its variable names and the distinct exponent
/// vectors with nonzero coefficient, kept sorted.
struct SupportSet {
  std::vector<std::string> variables;
  std::vector<ExponentVector> points;

  int n() const { return static_cast<int>(variables.size()); }
  friend bool operator==(const SupportSet&, const SupportSet&) = default;
};

// Validates and sorts. Throws InputError on n < 2, an empty set, a point of
// the wrong length, a negative exponent, or a duplicate point.
SupportSet make_support(std::vector<std::string> variables, std::vector<ExponentVector> points);

// x, y, z, w for n <= 4, else x1..xn.
std::vector<std::string> default_variables(int n);

/// Parses `expr := term (('+'|'-') term)*`, `term := [coeff ['*']] factor ('*' factor)*`,
/// `factor := var ['^' uint]`, `coeff := int | int '/' uint`.
///
/// Like terms are collected with exact rational coefficients and cancelled
/// terms dropped; the coefficients are then discarded. Without an explicit
/// order the variables are x,y,z,w (up to the last one used) or x1..xn.
SupportSet parse_polynomial(std::string_view text,
                            const std::optional<std::vector<std::string>>& variable_order = std::nullopt);

// {"variables":[...], "support":[[...], ...]}; other keys are ignored.
SupportSet load_support(const std::filesystem::path& path);
SupportSet support_from_json(std::string_view json_text);
std::string support_to_json(const SupportSet& support);

}  // namespace milnor

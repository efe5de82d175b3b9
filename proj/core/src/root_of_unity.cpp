#include "milnor/root_of_unity.hpp"

#include <charconv>

#include "milnor/errors.hpp"

namespace milnor {

RootOfUnity::RootOfUnity(Int num, Int den) {
  if (den == 0) throw InputError("root of unity with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num = mod_floor(num, den);
  const Int g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

RootOfUnity RootOfUnity::operator+(const RootOfUnity& o) const {
  const Int l = std::lcm(den_, o.den_);
  return RootOfUnity(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

RootOfUnity RootOfUnity::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw InputError("malformed eigenvalue '" + std::string(text) + "', expected a/b");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return RootOfUnity(parse_int(text), 1);
  return RootOfUnity(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string RootOfUnity::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

}  // namespace milnor

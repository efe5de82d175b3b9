#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "milnor/integer.hpp"

namespace milnor {

/// A root of unity exp(2*pi*i * num/den), stored as a reduced fraction in Q/Z
/// with 0 <= num < den. The identity is 0/1.
///
/// Ordering is by (den, num), which is also the output order of eigenvalues.
class RootOfUnity {
 public:
  constexpr RootOfUnity() = default;
  RootOfUnity(Int num, Int den);

  // Accepts "a/b" or a bare integer; the value is reduced mod 1.
  static RootOfUnity parse(std::string_view text);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_one() const { return num_ == 0; }

  // Complex conjugate, i.e. negation in Q/Z.
  RootOfUnity inverse() const { return RootOfUnity(-num_, den_); }
  RootOfUnity operator+(const RootOfUnity& o) const;

  // True when this root raised to the power e is 1.
  bool divides_order(Int e) const { return e % den_ == 0; }

  std::string str() const;

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend std::strong_ordering operator<=>(const RootOfUnity& a, const RootOfUnity& b) {
    if (auto c = a.den_ <=> b.den_; c != 0) return c;
    return a.num_ <=> b.num_;
  }

 private:
  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace milnor

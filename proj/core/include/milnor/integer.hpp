#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace milnor {

using Int = std::int64_t;
using IVec = std::vector<Int>;
// Row-major integer matrix; each entry is one row.
using IMatrix = std::vector<IVec>;

Int gcd_of(const IVec& v);

// v divided by the gcd of its entries; the zero vector is returned as is.
IVec primitive(IVec v);

Int dot(const IVec& a, const IVec& b);

IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec scale(const IVec& a, Int s);

// C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n (n >= 0).
Int binomial(Int n, Int k);

// Floor division for b > 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b) != 0 && (a < 0)) --q;
  return q;
}

inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

// Nonnegative remainder for b > 0.
inline Int mod_floor(Int a, Int b) {
  Int r = a % b;
  return r < 0 ? r + b : r;
}

inline Int sign_power(Int e) { return (e % 2 == 0) ? 1 : -1; }

Int checked_mul(Int a, Int b);
Int checked_add(Int a, Int b);

// Extended gcd: returns g = gcd(a, b) >= 0 with x*a + y*b = g.
Int extended_gcd(Int a, Int b, Int& x, Int& y);

std::string to_string(const IVec& v);

}  // namespace milnor

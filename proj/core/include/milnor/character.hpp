#pragma once

#include "milnor/integer.hpp"
#include "milnor/root_of_unity.hpp"

namespace milnor {

/// A finite-order character of a lattice, x -> exp(2*pi*i * <functional, x> / denom).
/// Values are reported as elements of Q/Z. Stored normalized: denom >= 1,
/// entries of `functional` reduced into [0, denom), and no common factor.
class Character {
 public:
  Character() = default;
  Character(IVec functional, Int denom);

  static Character trivial(int dim) { return Character(IVec(dim, 0), 1); }

  const IVec& functional() const { return functional_; }
  Int denom() const { return denom_; }
  int dim() const { return static_cast<int>(functional_.size()); }
  bool is_trivial() const { return denom_ == 1; }

  RootOfUnity operator()(const IVec& x) const;

  // The character composed with the linear map whose columns are `basis` rows,
  // i.e. c -> <functional, sum_i c_i basis_i>.
  Character pulled_back(const IMatrix& basis) const;
  Character conjugate() const;

  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character&, const Character&) = default;

 private:
  IVec functional_;
  Int denom_ = 1;
};

}  // namespace milnor

#include "milnor/character.hpp"

#include <stdexcept>

namespace milnor {

Character::Character(IVec functional, Int denom) : functional_(std::move(functional)), denom_(denom) {
  if (denom_ == 0) throw std::invalid_argument("character with zero denominator");
  if (denom_ < 0) {
    denom_ = -denom_;
    for (Int& x : functional_) x = -x;
  }
  for (Int& x : functional_) x = mod_floor(x, denom_);
  Int g = denom_;
  for (Int x : functional_) g = std::gcd(g, x);
  denom_ /= g;
  for (Int& x : functional_) x /= g;
}

RootOfUnity Character::operator()(const IVec& x) const {
  if (denom_ == 1) return {};
  Int s = 0;
  for (std::size_t i = 0; i < functional_.size(); ++i)
    s = mod_floor(s + mod_floor(functional_[i] * mod_floor(x[i], denom_), denom_), denom_);
  return RootOfUnity(s, denom_);
}

Character Character::pulled_back(const IMatrix& basis) const {
  IVec f(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) f[i] = dot(functional_, basis[i]);
  return Character(std::move(f), denom_);
}

Character Character::conjugate() const { return Character(scale(functional_, -1), denom_); }

}  // namespace milnor

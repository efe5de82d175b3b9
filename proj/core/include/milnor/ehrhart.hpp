#pragma once

#include <map>
#include <vector>

#include "milnor/character.hpp"
#include "milnor/polytope.hpp"
#include "milnor/root_of_unity.hpp"

namespace milnor {

/// Coefficients φ_{α,0..dim+1} of the equivariant Ehrhart polynomials
/// P_α(t) = (1-t)^{dim+1} Σ_k l*(kΔ)_α t^k, one sequence per occurring α.
struct PhiTable {
  int dim = 0;
  std::map<RootOfUnity, std::vector<Int>> coefficients;

  // φ_{α,i}; zero for absent α or i out of range.
  Int phi(const RootOfUnity& alpha, int i) const;
};

/// Computes every P_α of the polytope under the character, which must be
/// trivial on the vertices. Counts are taken up to k = 2(dim+1) and the
/// coefficients past dim+1 are checked to vanish (ConsistencyError if not).
/// Results are memoized on (vertex list, character).
const PhiTable& p_alpha(const LatticePolytope& p, const Character& character);

// Σ_{i=0}^{dim} φ_{α,i}; α must not be 1 (std::invalid_argument).
Int phi_tilde(const LatticePolytope& p, const Character& character, const RootOfUnity& alpha);

}  // namespace milnor

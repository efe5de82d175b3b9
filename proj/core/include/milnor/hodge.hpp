#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "milnor/character.hpp"
#include "milnor/polytope.hpp"
#include "milnor/root_of_unity.hpp"

namespace milnor {

struct HodgeIndex {
  int p = 0;
  int q = 0;
  RootOfUnity alpha;

  friend auto operator<=>(const HodgeIndex&, const HodgeIndex&) = default;
};

/// Sparse table (p, q, α) -> e^{p,q}_α of an equivariant motive class.
/// Zero entries are never stored.
class HodgeTable {
 public:
  HodgeTable() = default;
  explicit HodgeTable(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  const std::map<HodgeIndex, Int>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  Int get(int p, int q, const RootOfUnity& alpha) const;
  void set(int p, int q, const RootOfUnity& alpha, Int value);
  void add(int p, int q, const RootOfUnity& alpha, Int value);

  Int total() const;
  Int total(const RootOfUnity& alpha) const;
  // Σ_{p+q=r} e^{p,q}_α.
  Int antidiagonal(int r, const RootOfUnity& alpha) const;
  std::set<RootOfUnity> alphas() const;

  HodgeTable& operator+=(const HodgeTable& other);
  friend HodgeTable operator+(HodgeTable a, const HodgeTable& b) { return a += b; }
  friend bool operator==(const HodgeTable& a, const HodgeTable& b) { return a.entries_ == b.entries_; }

  std::string str() const;

 private:
  int dim_ = 0;
  std::map<HodgeIndex, Int> entries_;
};

/// What the closed formulas give for Z*_Δ without any recursion: every entry
/// with p+q > m-1, the edges p = 0 and q = 0, and the row sums Σ_q e^{p,q}_α.
struct BoundaryValues {
  HodgeTable known;
  std::map<std::pair<int, RootOfUnity>, Int> row_sums;  // (p, α) -> Σ_q e^{p,q}_α
  std::set<RootOfUnity> alphas;                          // every bucket touched, closed under inversion
};

// Throws std::invalid_argument for a 0-dimensional polytope.
BoundaryValues boundary_values(const LatticePolytope& p, const Character& character);

/// e^{p,q}(Z*_Δ)_α for the non-degenerate hypersurface with Newton polytope Δ
/// in the torus of Δ's lattice, with the finite group acting through the
/// character. Memoized; throws ConsistencyError if the recursion contradicts
/// conjugation symmetry, the Euler characteristic, or the boundary formulas.
const HodgeTable& hodge_table(const LatticePolytope& p, const Character& character);

/// Anti-diagonal sums r -> Σ_{p+q=r} e^{p,q}_α for α != 1 by the pseudo-prime
/// closed formula. Throws InputError if Δ is not pseudo-prime.
std::map<int, Int> pseudo_prime_row_sums(const LatticePolytope& p, const Character& character,
                                         const RootOfUnity& alpha);

// Product with (1 - L)^m: result^{p,q} = Σ_i (-1)^i C(m,i) table^{p-i,q-i}.
HodgeTable lefschetz_twist(const HodgeTable& table, int m);

// Product with the torus (C*)^j: result^{p,q} = Σ_i (-1)^{j-i} C(j,i) table^{p-i,q-i}.
HodgeTable torus_product(const HodgeTable& table, int j);

}  // namespace milnor

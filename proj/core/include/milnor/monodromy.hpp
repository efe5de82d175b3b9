#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "milnor/hodge.hpp"
#include "milnor/newton.hpp"
#include "milnor/root_of_unity.hpp"

namespace milnor {

struct FaceTables {
  int face_id = 0;
  HodgeTable delta;  // Z* of conv({0} ∪ γ) with the height character
  HodgeTable gamma;  // Z* of γ with trivial action; empty for vertices
};

/// Hodge characteristic of the motivic Milnor fiber, split as
/// first_sum  = Σ_γ (1-L)^{m_γ} [Z*_{Δ_γ}] and
/// second_sum = Σ_{dim γ >= 1} (1-L)^{m_γ+1} [Z*_γ].
struct MotivicTable {
  int n = 0;
  std::vector<FaceTables> faces;
  HodgeTable first_sum;
  HodgeTable second_sum;
  HodgeTable total;
};

MotivicTable motivic_milnor_table(const NewtonPolyhedron& np);

/// Jordan normal form of the monodromy on H^{n-1} of the Milnor fiber.
struct JordanSpectrum {
  int n = 0;
  std::map<std::pair<RootOfUnity, int>, Int> blocks;  // (eigenvalue, size) -> count, zeros omitted
  std::map<RootOfUnity, Int> multiplicities;          // zeros omitted
  Int mu = 0;

  Int count(const RootOfUnity& lambda, int size) const;
  // Number of blocks of size >= k.
  Int at_least(const RootOfUnity& lambda, int k) const;
};

/// The two expressions for N_{>=k}(1), k = 1..n-1: lines p+q = n-1+k, n+k of
/// the total, and lines p+q = n-2-k, n-1-k of the first sum.
struct UnipotentRoutes {
  std::vector<Int> via_total;      // index k, entry 0 unused
  std::vector<Int> via_first_sum;  // index k, entry 0 unused
};

UnipotentRoutes unipotent_routes(const MotivicTable& table);

// Throws ConsistencyError on a negative count, disagreeing eigenvalue-1
// routes, or block sizes that do not add up to the multiplicity.
JordanSpectrum jordan_blocks(const MotivicTable& table);
JordanSpectrum jordan_blocks(const NewtonPolyhedron& np);

/// Closed formulas for the largest blocks of an eigenvalue λ != 1:
/// (number of size-n blocks, number of size-(n-1) blocks).
std::pair<Int, Int> fastpath_top(const NewtonPolyhedron& np, const RootOfUnity& lambda);

/// Closed formulas for eigenvalue 1: (size n-1 count, size n-2 count).
std::pair<Int, Int> fastpath_unipotent(const NewtonPolyhedron& np);

/// Number of blocks of size >= k for λ != 1 by the closed formula valid when
/// every compact face is prime. Throws InputError naming a face that is not.
Int prime_face_blocks(const NewtonPolyhedron& np, const RootOfUnity& lambda, int k);

// Id of the first compact face that is not prime, or -1.
int first_non_prime_face(const NewtonPolyhedron& np);

/// The Milnor number from normalized volumes of the pyramids Δ_γ over the
/// faces with m_γ = 0.
Int newton_number(const NewtonPolyhedron& np);

/// Eigenvalue-1 parts of [Z*_γ] + [Z*_{Δ_γ}] must add up to (uv - 1)^{dim γ}.
struct PyramidCheck {
  bool pass = true;
  std::string detail;  // first offending entry
  HodgeTable gamma;
  HodgeTable delta;
};

PyramidCheck pyramid_identity(const NewtonPolyhedron& np, const CompactFace& face);

std::string describe_face(const CompactFace& face);

}  // namespace milnor

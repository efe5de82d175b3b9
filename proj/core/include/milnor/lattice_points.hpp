#pragma once

#include <map>
#include <vector>

#include "milnor/character.hpp"
#include "milnor/polytope.hpp"
#include "milnor/root_of_unity.hpp"

namespace milnor {

enum class Region { RelativeInterior, Full, OneSkeleton };

// Character value -> number of lattice points. Zero buckets are omitted.
using BucketCounts = std::map<RootOfUnity, Int>;

/// Lattice points of k * (P - w) in the requested region, bucketed by the
/// character, where w is a vertex of P. The character must vanish on vertex
/// differences (std::invalid_argument otherwise), so the choice of w does not
/// matter. The relative interior of 0 * P is taken to be empty.
BucketCounts lattice_point_count(const LatticePolytope& p, Int k, Region region, const Character& character);

// Relative-interior counts for every dilation 0..max_k in one enumeration.
std::vector<BucketCounts> relint_counts_upto(const LatticePolytope& p, Int max_k, const Character& character);

// For k = 1: relative-interior counts of every face of P, indexed like
// p.faces(), obtained by sorting the lattice points of P by carrier face.
std::vector<BucketCounts> face_relint_counts(const LatticePolytope& p, const Character& character);

}  // namespace milnor

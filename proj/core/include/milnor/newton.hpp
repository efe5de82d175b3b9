#pragma once

#include <vector>

#include "milnor/character.hpp"
#include "milnor/integer.hpp"
#include "milnor/lattice.hpp"
#include "milnor/polytope.hpp"
#include "milnor/support.hpp"

namespace milnor {

/// A compact face γ of the Newton polyhedron.
struct CompactFace {
  int id = 0;
  int dim = 0;
  std::vector<ExponentVector> vertices;  // sorted
  std::vector<int> subfaces;             // ids of the proper faces, ascending
  bool interior_touching = false;        // relint(γ) lies in the open orthant
  std::vector<int> S;                    // coordinates (0-based) used by γ
  int m = 0;                             // |S| - dim - 1
  Int d = 1;                             // lattice distance of γ from the origin
};

/// The Newton polyhedron of a convenient support, described by its compact
/// faces ordered by (dim, sorted vertices). A face's id is its index.
struct NewtonPolyhedron {
  SupportSet support;
  std::vector<CompactFace> faces;
  bool convenient = false;

  int n() const { return support.n(); }
};

// Throws InputError when the support contains the origin or misses an axis.
NewtonPolyhedron newton_polyhedron(const SupportSet& support);

/// Lattice data of a compact face γ.
///
/// `cone_chart` is the lattice M_γ = Z^n ∩ span(γ), with origin 0. In its
/// coordinates the height is ht(v) = d - <ell, v> and `delta` is the polytope
/// conv({0} ∪ γ). The character v -> -ht(v)/d mod 1 equals <ell, v>/d.
/// `face_chart` is the affine lattice of γ itself, carrying `gamma`.
struct FaceChart {
  int face_id = 0;
  LatticeChart cone_chart;
  LatticeChart face_chart;
  IVec ell;
  Int d = 1;
  LatticePolytope delta;
  LatticePolytope gamma;
  Character character;

  // Height of an ambient lattice point of span(γ).
  Int height(const IVec& ambient) const;
};

FaceChart face_chart(const NewtonPolyhedron& np, const CompactFace& face);

}  // namespace milnor

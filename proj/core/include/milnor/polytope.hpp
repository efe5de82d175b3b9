#pragma once

#include <cstdint>
#include <vector>

#include "milnor/character.hpp"
#include "milnor/integer.hpp"
#include "milnor/lattice.hpp"

namespace milnor {

// normal . x >= offset, with a primitive inward normal.
struct Facet {
  IVec normal;
  Int offset = 0;
};

struct PolytopeFace {
  std::uint64_t vertices = 0;  // bit i set <=> vertex i lies on the face
  int dim = 0;
  std::vector<int> facets;  // facets containing the face
};

/// A lattice polytope that is full-dimensional in Z^dim, with its facets and
/// complete face lattice. At most 64 vertices.
class LatticePolytope {
 public:
  LatticePolytope() = default;
  // `points` must affinely span R^dim (dim = 0 means a single point).
  LatticePolytope(const std::vector<IVec>& points, int dim);

  int dim() const { return dim_; }
  const std::vector<IVec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  // Every nonempty face including the polytope itself, sorted by (dim, mask).
  const std::vector<PolytopeFace>& faces() const { return faces_; }
  int top_face() const { return static_cast<int>(faces_.size()) - 1; }
  // Face with exactly this vertex set, or -1.
  int face_of_mask(std::uint64_t mask) const;
  std::uint64_t facet_mask(int facet) const { return facet_masks_[facet]; }
  std::vector<IVec> face_vertices(int face) const;
  // Faces of `face`, including itself.
  std::vector<int> subfaces(int face) const;
  // Face whose relative interior contains x; x must lie in the polytope.
  int carrier_face(const IVec& x) const;
  bool contains(const IVec& x) const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  int dim_ = 0;
  std::vector<IVec> vertices_;
  std::vector<Facet> facets_;
  std::vector<std::uint64_t> facet_masks_;
  std::vector<PolytopeFace> faces_;
};

// Affine rank of a point set (dimension of its affine hull).
int affine_dimension(const std::vector<IVec>& points);

/// A polytope in its intrinsic lattice together with the chart identifying
/// that lattice inside the ambient one. The chart origin is a vertex, so the
/// polytope always has a vertex at 0.
struct ChartedPolytope {
  LatticeChart chart;
  LatticePolytope polytope;
};

ChartedPolytope make_charted(const std::vector<IVec>& ambient_points);

// A face of a polytope as a polytope of its own, with the character restricted
// to the face's lattice.
struct FacePolytope {
  LatticeChart chart;  // inside the parent's coordinates
  LatticePolytope polytope;
  Character character;
};

FacePolytope face_polytope(const LatticePolytope& parent, const Character& character, int face);

// dim! times the Euclidean volume, measured in the intrinsic lattice.
Int normalized_volume(const LatticePolytope& p);

enum class Primeness { Prime, PseudoPrime, Neither };

// Prime: every vertex cone is simplicial (generated by a basis of R^dim).
// Pseudo-prime: every edge lies in exactly dim-1 two-dimensional faces.
Primeness primeness(const LatticePolytope& p);

// Every vertex cone is generated by a lattice basis.
bool is_smooth(const LatticePolytope& p);

}  // namespace milnor

#pragma once

#include <vector>

#include "milnor/integer.hpp"
#include "milnor/polytope.hpp"

namespace milnor {

struct FanCone {
  std::vector<int> rays;  // sorted indices into Fan::rays; empty for the zero cone
  int source = -1;        // back-reference into the source structure
};

/// A fan stored as the full list of its cones (closed under taking faces),
/// each given by its primitive ray generators.
struct Fan {
  int dim = 0;
  std::vector<IVec> rays;
  std::vector<FanCone> cones;

  int cone_dim(const FanCone& c) const;
  bool is_simplicial(const FanCone& c) const;
  // Sum of the generators, a point of the relative interior.
  IVec interior_point(const FanCone& c) const;
};

// Normal fan of a full-dimensional polytope: one cone per face, generated by
// the inward normals of the facets containing it. `source` is the face index.
Fan normal_fan(const LatticePolytope& p);

// Fan generated by the given cones (each a list of ray indices) and all their
// faces. `source` of a face is the index of the first input cone it came from.
Fan fan_from_cones(int dim, std::vector<IVec> rays, const std::vector<std::vector<int>>& cones);

/// Simplicial refinement by repeated stellar subdivision: pick the
/// non-simplicial cone that is smallest by (dimension, sorted generator list)
/// and star it at the primitive vector on the sum of its generators. Each
/// output cone keeps the `source` of the input cone whose relative interior
/// contains its relative interior.
Fan simplicial_refinement(const Fan& fan);

}  // namespace milnor

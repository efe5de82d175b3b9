#include "milnor/newton.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "milnor/cone.hpp"
#include "milnor/errors.hpp"

namespace milnor {
namespace {

void check_convenient(const SupportSet& support) {
  const int n = support.n();
  for (const auto& p : support.points)
    if (std::all_of(p.begin(), p.end(), [](Int e) { return e == 0; }))
      throw InputError("support contains the origin (f does not vanish at 0)");
  for (int i = 0; i < n; ++i) {
    const bool on_axis = std::any_of(support.points.begin(), support.points.end(), [&](const ExponentVector& p) {
      for (int j = 0; j < n; ++j)
        if ((j == i) != (p[j] != 0)) return false;
      return true;
    });
    if (!on_axis) throw InputError("non-convenient support: no support on the " + support.variables[i] + "-axis");
  }
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const SupportSet& support) {
  check_convenient(support);
  const int n = support.n();

  // Supporting functionals (u, c) with u >= 0 and u.v >= c on the support.
  IMatrix rows;
  for (const auto& p : support.points) {
    IVec row = p;
    row.push_back(-1);
    rows.push_back(std::move(row));
  }
  for (int i = 0; i < n; ++i) {
    IVec row(n + 1, 0);
    row[i] = 1;
    rows.push_back(std::move(row));
  }

  std::set<std::vector<ExponentVector>> found;
  for (const auto& ray : extreme_rays(rows, n + 1)) {
    if (ray[n] <= 0) continue;
    const IVec u(ray.begin(), ray.begin() + n);
    std::vector<ExponentVector> on_facet;
    for (const auto& p : support.points)
      if (dot(u, p) == ray[n]) on_facet.push_back(p);
    const ChartedPolytope cp = make_charted(on_facet);
    for (std::size_t f = 0; f < cp.polytope.faces().size(); ++f) {
      std::vector<ExponentVector> vs;
      for (const auto& v : cp.polytope.face_vertices(static_cast<int>(f))) vs.push_back(cp.chart.to_ambient(v));
      std::sort(vs.begin(), vs.end());
      found.insert(std::move(vs));
    }
  }

  std::vector<CompactFace> faces;
  for (const auto& vs : found) {
    CompactFace face;
    face.vertices = vs;
    face.dim = affine_dimension(vs);
    for (int i = 0; i < n; ++i)
      if (std::any_of(vs.begin(), vs.end(), [&](const ExponentVector& v) { return v[i] != 0; })) face.S.push_back(i);
    face.interior_touching = static_cast<int>(face.S.size()) == n;
    face.m = static_cast<int>(face.S.size()) - face.dim - 1;
    faces.push_back(std::move(face));
  }
  std::sort(faces.begin(), faces.end(), [](const CompactFace& a, const CompactFace& b) {
    return std::tie(a.dim, a.vertices) < std::tie(b.dim, b.vertices);
  });
  for (std::size_t i = 0; i < faces.size(); ++i) {
    faces[i].id = static_cast<int>(i);
    for (std::size_t j = 0; j < i; ++j)
      if (faces[j].dim < faces[i].dim &&
          std::includes(faces[i].vertices.begin(), faces[i].vertices.end(), faces[j].vertices.begin(),
                        faces[j].vertices.end()))
        faces[i].subfaces.push_back(static_cast<int>(j));
  }

  NewtonPolyhedron np{support, std::move(faces), true};
  for (auto& face : np.faces) face.d = face_chart(np, face).d;
  return np;
}

Int FaceChart::height(const IVec& ambient) const { return d - dot(ell, cone_chart.to_chart(ambient)); }

FaceChart face_chart(const NewtonPolyhedron& np, const CompactFace& face) {
  FaceChart fc;
  fc.face_id = face.id;
  fc.cone_chart = linear_chart(face.vertices, np.n());
  std::vector<IVec> local;
  for (const auto& v : face.vertices) local.push_back(fc.cone_chart.to_chart(v));

  // ell is the primitive functional constant on γ, positive there.
  IMatrix diffs;
  for (std::size_t i = 1; i < local.size(); ++i) diffs.push_back(sub(local[i], local[0]));
  const int k = fc.cone_chart.dim();
  if (diffs.empty()) {
    fc.ell = IVec{1};
  } else {
    const IMatrix kernel = integer_kernel(diffs, k);
    fc.ell = primitive(kernel.at(0));
  }
  if (dot(fc.ell, local[0]) < 0) fc.ell = scale(fc.ell, -1);
  fc.d = dot(fc.ell, local[0]);

  std::vector<IVec> delta_points = local;
  delta_points.emplace_back(k, 0);
  fc.delta = LatticePolytope(delta_points, k);
  fc.character = Character(fc.ell, fc.d);

  const ChartedPolytope cp = make_charted(face.vertices);
  fc.face_chart = cp.chart;
  fc.gamma = cp.polytope;
  return fc;
}

}  // namespace milnor

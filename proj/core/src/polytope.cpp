#include "milnor/polytope.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <stdexcept>

#include "milnor/cone.hpp"

namespace milnor {

int affine_dimension(const std::vector<IVec>& points) {
  if (points.empty()) return -1;
  IMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  if (diffs.empty()) return 0;
  return matrix_rank(diffs, static_cast<int>(points[0].size()));
}

LatticePolytope::LatticePolytope(const std::vector<IVec>& points_in, int dim) : dim_(dim) {
  std::vector<IVec> pts = points_in;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) throw std::invalid_argument("polytope from an empty point set");
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != dim) throw std::invalid_argument("polytope point has wrong dimension");
  if (dim == 0) {
    vertices_ = {pts[0]};
    faces_.push_back({1, 0, {}});
    return;
  }
  if (affine_dimension(pts) != dim) throw std::invalid_argument("polytope points are not full-dimensional");

  IMatrix rows;
  for (const auto& p : pts) {
    IVec r{1};
    r.insert(r.end(), p.begin(), p.end());
    rows.push_back(std::move(r));
  }
  for (const auto& ray : extreme_rays(rows, dim + 1)) {
    Facet f;
    f.normal.assign(ray.begin() + 1, ray.end());
    f.offset = -ray[0];
    facets_.push_back(std::move(f));
  }
  std::sort(facets_.begin(), facets_.end(), [](const Facet& a, const Facet& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  });

  for (const auto& p : pts) {
    IMatrix tight;
    for (const auto& f : facets_)
      if (dot(f.normal, p) == f.offset) tight.push_back(f.normal);
    if (!tight.empty() && matrix_rank(tight, dim) == dim) vertices_.push_back(p);
  }
  if (vertices_.size() > 64) throw std::invalid_argument("polytope has more than 64 vertices");

  for (const auto& f : facets_) {
    std::uint64_t mask = 0;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (dot(f.normal, vertices_[v]) == f.offset) mask |= (std::uint64_t{1} << v);
    facet_masks_.push_back(mask);
  }

  auto mask_dim = [&](std::uint64_t mask) {
    std::vector<IVec> vs;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (mask >> v & 1) vs.push_back(vertices_[v]);
    return affine_dimension(vs);
  };

  const std::uint64_t all =
      vertices_.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << vertices_.size()) - 1);
  std::map<std::uint64_t, int> seen{{all, dim}};
  std::deque<std::pair<std::uint64_t, int>> queue{{all, dim}};
  while (!queue.empty()) {
    auto [mask, d] = queue.front();
    queue.pop_front();
    if (d == 0) continue;
    for (std::uint64_t fm : facet_masks_) {
      const std::uint64_t m = mask & fm;
      if (m == 0 || m == mask || seen.count(m)) continue;
      const int md = mask_dim(m);
      if (md != d - 1) continue;
      seen.emplace(m, md);
      queue.emplace_back(m, md);
    }
  }
  for (auto [mask, d] : seen) {
    PolytopeFace face{mask, d, {}};
    for (std::size_t j = 0; j < facet_masks_.size(); ++j)
      if ((mask & facet_masks_[j]) == mask) face.facets.push_back(static_cast<int>(j));
    faces_.push_back(std::move(face));
  }
  std::sort(faces_.begin(), faces_.end(), [](const PolytopeFace& a, const PolytopeFace& b) {
    return std::tie(a.dim, a.vertices) < std::tie(b.dim, b.vertices);
  });
}

int LatticePolytope::face_of_mask(std::uint64_t mask) const {
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].vertices == mask) return static_cast<int>(i);
  return -1;
}

std::vector<IVec> LatticePolytope::face_vertices(int face) const {
  std::vector<IVec> vs;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (faces_[face].vertices >> v & 1) vs.push_back(vertices_[v]);
  return vs;
}

std::vector<int> LatticePolytope::subfaces(int face) const {
  std::vector<int> out;
  const auto m = faces_[face].vertices;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if ((faces_[i].vertices & m) == faces_[i].vertices) out.push_back(static_cast<int>(i));
  return out;
}

bool LatticePolytope::contains(const IVec& x) const {
  if (dim_ == 0) return x == vertices_[0];
  for (const auto& f : facets_)
    if (dot(f.normal, x) < f.offset) return false;
  return true;
}

int LatticePolytope::carrier_face(const IVec& x) const {
  if (dim_ == 0) return 0;
  std::uint64_t mask = faces_.back().vertices;
  for (std::size_t j = 0; j < facets_.size(); ++j)
    if (dot(facets_[j].normal, x) == facets_[j].offset) mask &= facet_masks_[j];
  const int f = face_of_mask(mask);
  if (f < 0) throw std::logic_error("carrier_face: no face with vertex set");
  return f;
}

ChartedPolytope make_charted(const std::vector<IVec>& ambient_points) {
  ChartedPolytope cp;
  cp.chart = affine_chart(ambient_points);
  std::vector<IVec> coords;
  coords.reserve(ambient_points.size());
  for (const auto& p : ambient_points) coords.push_back(cp.chart.to_chart(p));
  cp.polytope = LatticePolytope(coords, cp.chart.dim());
  return cp;
}

FacePolytope face_polytope(const LatticePolytope& parent, const Character& character, int face) {
  ChartedPolytope cp = make_charted(parent.face_vertices(face));
  FacePolytope fp;
  fp.character = character.pulled_back(cp.chart.basis);
  fp.chart = std::move(cp.chart);
  fp.polytope = std::move(cp.polytope);
  return fp;
}

Int normalized_volume(const LatticePolytope& p) {
  if (p.dim() == 0) return 1;
  // Pyramid decomposition from a fixed vertex over the facets missing it.
  const IVec& apex = p.vertices().front();
  const Character trivial = Character::trivial(p.dim());
  Int total = 0;
  for (std::size_t j = 0; j < p.facets().size(); ++j) {
    const auto& f = p.facets()[j];
    const Int height = dot(f.normal, apex) - f.offset;
    if (height == 0) continue;
    const int face = p.face_of_mask(p.facet_mask(static_cast<int>(j)));
    total = checked_add(total, checked_mul(height, normalized_volume(face_polytope(p, trivial, face).polytope)));
  }
  return total;
}

Primeness primeness(const LatticePolytope& p) {
  const int d = p.dim();
  bool prime = true;
  for (const auto& f : p.faces())
    if (f.dim == 0 && static_cast<int>(f.facets.size()) != d) prime = false;
  if (prime) return Primeness::Prime;
  for (const auto& e : p.faces()) {
    if (e.dim != 1) continue;
    int two_faces = 0;
    for (const auto& g : p.faces())
      if (g.dim == 2 && (g.vertices & e.vertices) == e.vertices) ++two_faces;
    if (two_faces != d - 1) return Primeness::Neither;
  }
  return Primeness::PseudoPrime;
}

bool is_smooth(const LatticePolytope& p) {
  const int d = p.dim();
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    IMatrix edges;
    for (const auto& e : p.faces()) {
      if (e.dim != 1 || !(e.vertices >> v & 1)) continue;
      const int other = std::countr_zero(e.vertices & ~(std::uint64_t{1} << v));
      edges.push_back(primitive(sub(p.vertices()[other], p.vertices()[v])));
    }
    if (static_cast<int>(edges.size()) != d) return false;
    const Int det = determinant(edges);
    if (det != 1 && det != -1) return false;
  }
  return true;
}

}  // namespace milnor

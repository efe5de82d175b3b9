#include "milnor/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "milnor/cone.hpp"
#include "milnor/lattice.hpp"

namespace milnor {
namespace {

bool includes(const std::vector<int>& big, const std::vector<int>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<int> merged(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// All faces of the pointed cone generated by `gens` (given as ray indices),
// including the zero cone and the cone itself.
std::vector<std::vector<int>> faces_of_cone(const std::vector<IVec>& rays, const std::vector<int>& gens, int dim) {
  std::vector<IVec> vecs;
  for (int g : gens) vecs.push_back(rays[g]);
  const LatticeChart chart = linear_chart(vecs, dim);
  const int k = chart.dim();
  std::set<std::vector<int>> out{{}, gens};
  if (k <= 1) return {out.begin(), out.end()};
  IMatrix local;
  for (const auto& v : vecs) local.push_back(chart.to_chart(v));
  std::vector<std::vector<int>> facets;
  for (const auto& normal : extreme_rays(local, k)) {
    std::vector<int> f;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (dot(normal, local[i]) == 0) f.push_back(gens[i]);
    facets.push_back(std::move(f));
  }
  std::vector<std::vector<int>> frontier{gens};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& face : frontier)
      for (const auto& f : facets) {
        std::vector<int> meet;
        std::set_intersection(face.begin(), face.end(), f.begin(), f.end(), std::back_inserter(meet));
        if (out.insert(meet).second) next.push_back(meet);
      }
    frontier = std::move(next);
  }
  return {out.begin(), out.end()};
}

}  // namespace

int Fan::cone_dim(const FanCone& c) const {
  if (c.rays.empty()) return 0;
  IMatrix m;
  for (int r : c.rays) m.push_back(rays[r]);
  return matrix_rank(m, dim);
}

bool Fan::is_simplicial(const FanCone& c) const { return cone_dim(c) == static_cast<int>(c.rays.size()); }

IVec Fan::interior_point(const FanCone& c) const {
  IVec s(dim, 0);
  for (int r : c.rays) s = add(s, rays[r]);
  return s;
}

Fan normal_fan(const LatticePolytope& p) {
  Fan fan;
  fan.dim = p.dim();
  for (const auto& f : p.facets()) fan.rays.push_back(f.normal);
  for (std::size_t i = 0; i < p.faces().size(); ++i) fan.cones.push_back({p.faces()[i].facets, static_cast<int>(i)});
  return fan;
}

Fan fan_from_cones(int dim, std::vector<IVec> rays, const std::vector<std::vector<int>>& cones) {
  Fan fan;
  fan.dim = dim;
  for (auto& r : rays) r = primitive(std::move(r));
  fan.rays = std::move(rays);
  std::map<std::vector<int>, int> seen;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    std::vector<int> gens = cones[i];
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (auto& face : faces_of_cone(fan.rays, gens, dim))
      if (seen.emplace(face, static_cast<int>(i)).second) fan.cones.push_back({face, static_cast<int>(i)});
  }
  return fan;
}

Fan simplicial_refinement(const Fan& input) {
  Fan fan = input;
  while (true) {
    // Smallest non-simplicial cone by (dimension, sorted generator list).
    const FanCone* pick = nullptr;
    std::pair<int, std::vector<IVec>> best_key;
    for (const auto& c : fan.cones) {
      if (fan.is_simplicial(c)) continue;
      std::vector<IVec> gens;
      for (int r : c.rays) gens.push_back(fan.rays[r]);
      std::sort(gens.begin(), gens.end());
      std::pair<int, std::vector<IVec>> key{fan.cone_dim(c), std::move(gens)};
      if (!pick || key < best_key) {
        pick = &c;
        best_key = std::move(key);
      }
    }
    if (!pick) return fan;

    const FanCone sigma = *pick;
    const int v = static_cast<int>(fan.rays.size());
    fan.rays.push_back(primitive(fan.interior_point(sigma)));

    std::vector<FanCone> next;
    for (const auto& tau : fan.cones)
      if (!includes(tau.rays, sigma.rays)) next.push_back(tau);
    for (const auto& tau : fan.cones) {
      if (includes(tau.rays, sigma.rays)) continue;
      const auto want = merged(tau.rays, sigma.rays);
      const FanCone* join = nullptr;
      for (const auto& c : fan.cones)
        if (includes(c.rays, want) && (!join || c.rays.size() < join->rays.size())) join = &c;
      if (!join) continue;
      auto rays = tau.rays;
      rays.push_back(v);
      std::sort(rays.begin(), rays.end());
      next.push_back({std::move(rays), join->source});
    }
    fan.cones = std::move(next);
  }
}

}  // namespace milnor

#include "milnor/cone.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <stdexcept>

#include "milnor/lattice.hpp"

namespace milnor {
namespace {

struct Ray {
  IVec v;
  boost::dynamic_bitset<> zeros;  // processed rows that vanish on v
};

}  // namespace

std::vector<IVec> extreme_rays(const IMatrix& rows, int dim) {
  const std::size_t m = rows.size();
  if (matrix_rank(rows, dim) != dim) throw std::invalid_argument("extreme_rays: cone is not pointed");

  // Greedy choice of dim independent rows; the cone they cut out is simplicial.
  std::vector<std::size_t> basis;
  IMatrix chosen;
  for (std::size_t i = 0; i < m && static_cast<int>(basis.size()) < dim; ++i) {
    chosen.push_back(rows[i]);
    if (matrix_rank(chosen, dim) == static_cast<int>(chosen.size())) {
      basis.push_back(i);
    } else {
      chosen.pop_back();
    }
  }

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    IMatrix others;
    for (std::size_t l = 0; l < basis.size(); ++l)
      if (l != j) others.push_back(rows[basis[l]]);
    IVec r = integer_kernel(others, dim).at(0);
    if (dot(rows[basis[j]], r) < 0) r = scale(r, -1);
    Ray ray{primitive(std::move(r)), boost::dynamic_bitset<>(m)};
    for (std::size_t l = 0; l < basis.size(); ++l)
      if (l != j) ray.zeros.set(basis[l]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> processed(m, false);
  for (std::size_t b : basis) processed[b] = true;

  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    processed[i] = true;
    std::vector<Int> s(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      s[r] = dot(rows[i], rays[r].v);
      if (s[r] > 0) pos.push_back(r);
      if (s[r] < 0) neg.push_back(r);
      if (s[r] >= 0) {
        Ray kept = rays[r];
        if (s[r] == 0) kept.zeros.set(i);
        next.push_back(std::move(kept));
      }
    }
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        const auto common = rays[p].zeros & rays[q].zeros;
        if (static_cast<int>(common.count()) < dim - 2) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IVec v = add(scale(rays[q].v, s[p]), scale(rays[p].v, -s[q]));
        Ray ray{primitive(std::move(v)), common};
        ray.zeros.set(i);
        next.push_back(std::move(ray));
      }
    }
    rays = std::move(next);
  }

  std::vector<IVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace milnor

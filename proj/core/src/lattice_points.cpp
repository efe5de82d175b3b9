#include "milnor/lattice_points.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace milnor {
namespace {

constexpr Int kNever = std::numeric_limits<Int>::max();

// P translated by one of its vertices (the origin if it is one).
struct Translated {
  IVec shift;
  std::vector<IVec> vertices;
  std::vector<Facet> facets;
};

Translated translate(const LatticePolytope& p, const Character& character) {
  if (character.dim() != p.dim()) throw std::invalid_argument("character dimension does not match polytope");
  Translated t;
  const IVec zero(p.dim(), 0);
  const auto& vs = p.vertices();
  t.shift = std::find(vs.begin(), vs.end(), zero) != vs.end() ? zero : vs.front();
  for (const auto& v : vs) {
    t.vertices.push_back(sub(v, t.shift));
    if (!character(t.vertices.back()).is_one())
      throw std::invalid_argument("character is nontrivial on vertex " + to_string(v));
  }
  for (const auto& f : p.facets()) t.facets.push_back({f.normal, f.offset - dot(f.normal, t.shift)});
  return t;
}

// Visits every lattice point of max_k * (P - w).
template <class Visit>
void for_each_point(const Translated& t, int dim, Int max_k, Visit&& visit) {
  IVec lo(dim), hi(dim);
  for (int i = 0; i < dim; ++i) {
    Int mn = 0, mx = 0;
    for (const auto& v : t.vertices) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = checked_mul(mn, max_k);
    hi[i] = checked_mul(mx, max_k);
  }
  IVec x(dim);
  const int last = dim - 1;
  auto recurse = [&](auto&& self, int i) -> void {
    if (i == last) {
      Int a_lo = lo[last], a_hi = hi[last];
      for (const auto& f : t.facets) {
        Int partial = 0;
        for (int c = 0; c < last; ++c) partial += f.normal[c] * x[c];
        const Int rhs = f.offset * max_k - partial;
        const Int a = f.normal[last];
        if (a > 0) a_lo = std::max(a_lo, ceil_div(rhs, a));
        else if (a < 0) a_hi = std::min(a_hi, floor_div(-rhs, -a));
        else if (rhs > 0) return;
      }
      for (Int v = a_lo; v <= a_hi; ++v) {
        x[last] = v;
        visit(x);
      }
      return;
    }
    for (Int v = lo[i]; v <= hi[i]; ++v) {
      x[i] = v;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
}

// Smallest dilation k whose (relative interior | closure) contains x.
std::pair<Int, Int> first_dilations(const Translated& t, const IVec& x) {
  Int relint = 1, closed = 0;
  for (const auto& f : t.facets) {
    const Int v = dot(f.normal, x);
    const Int s = -f.offset;
    if (s == 0) {
      if (v < 0) return {kNever, kNever};
      if (v == 0) relint = kNever;
      continue;
    }
    closed = std::max(closed, ceil_div(-v, s));
    if (relint != kNever) relint = std::max(relint, floor_div(-v, s) + 1);
  }
  return {relint, closed};
}

BucketCounts one_skeleton(const LatticePolytope& p, const Translated& t, Int k, const Character& character) {
  std::set<IVec> points;
  if (p.dim() == 0 || k == 0) {
    points.insert(IVec(p.dim(), 0));
  } else {
    for (const auto& e : p.faces()) {
      if (e.dim != 1) continue;
      std::vector<IVec> ends;
      for (std::size_t v = 0; v < t.vertices.size(); ++v)
        if (e.vertices >> v & 1) ends.push_back(scale(t.vertices[v], k));
      const IVec dir = sub(ends[1], ends[0]);
      const Int g = gcd_of(dir);
      const IVec step = primitive(dir);
      for (Int j = 0; j <= g; ++j) points.insert(add(ends[0], scale(step, j)));
    }
  }
  BucketCounts out;
  for (const auto& x : points) ++out[character(x)];
  return out;
}

}  // namespace

std::vector<BucketCounts> relint_counts_upto(const LatticePolytope& p, Int max_k, const Character& character) {
  const Translated t = translate(p, character);
  std::vector<BucketCounts> counts(max_k + 1);
  if (p.dim() == 0) {
    for (Int k = 1; k <= max_k; ++k) counts[k][RootOfUnity()] = 1;
    return counts;
  }
  // Bucket per first dilation, then accumulate: relint(kP) grows with k when 0 in P.
  std::vector<BucketCounts> first(max_k + 2);
  for_each_point(t, p.dim(), max_k, [&](const IVec& x) {
    const Int k = first_dilations(t, x).first;
    if (k <= max_k) ++first[k][character(x)];
  });
  BucketCounts running;
  for (Int k = 0; k <= max_k; ++k) {
    for (const auto& [a, c] : first[k]) running[a] += c;
    counts[k] = running;
  }
  return counts;
}

BucketCounts lattice_point_count(const LatticePolytope& p, Int k, Region region, const Character& character) {
  if (k < 0) throw std::invalid_argument("negative dilation");
  const Translated t = translate(p, character);
  switch (region) {
    case Region::RelativeInterior:
      return relint_counts_upto(p, k, character)[k];
    case Region::OneSkeleton:
      return one_skeleton(p, t, k, character);
    case Region::Full: {
      BucketCounts out;
      if (p.dim() == 0 || k == 0) {
        out[RootOfUnity()] = 1;
        return out;
      }
      for_each_point(t, p.dim(), k, [&](const IVec& x) {
        if (first_dilations(t, x).second <= k) ++out[character(x)];
      });
      return out;
    }
  }
  return {};
}

std::vector<BucketCounts> face_relint_counts(const LatticePolytope& p, const Character& character) {
  const Translated t = translate(p, character);
  std::vector<BucketCounts> out(p.faces().size());
  if (p.dim() == 0) {
    out[0][RootOfUnity()] = 1;
    return out;
  }
  for_each_point(t, p.dim(), 1, [&](const IVec& x) {
    if (first_dilations(t, x).second > 1) return;
    ++out[p.carrier_face(add(x, t.shift))][character(x)];
  });
  return out;
}

}  // namespace milnor

#include "milnor/oracles.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <set>
#include <stdexcept>

#include "milnor/errors.hpp"

namespace milnor {
namespace {

using Rational = boost::multiprecision::cpp_rational;

// Normal of the hyperplane through d points of R^d (generalized cross product
// of the difference vectors); zero if they are affinely dependent.
IVec hyperplane_normal(const std::vector<IVec>& pts) {
  const int d = static_cast<int>(pts.size());
  IMatrix diffs;
  for (int i = 1; i < d; ++i) diffs.push_back(sub(pts[i], pts[0]));
  IVec normal(d);
  for (int j = 0; j < d; ++j) {
    IMatrix minor;
    for (const auto& row : diffs) {
      IVec r;
      for (int c = 0; c < d; ++c)
        if (c != j) r.push_back(row[c]);
      minor.push_back(std::move(r));
    }
    Int det = 1;
    if (!minor.empty()) {
      // Bareiss elimination on a small matrix.
      const int k = static_cast<int>(minor.size());
      std::vector<std::vector<__int128>> m(k, std::vector<__int128>(k));
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) m[a][b] = minor[a][b];
      __int128 prev = 1;
      int sign = 1;
      for (int p = 0; p < k; ++p) {
        if (m[p][p] == 0) {
          int swap = -1;
          for (int r = p + 1; r < k; ++r)
            if (m[r][p] != 0) swap = r;
          if (swap < 0) {
            det = 0;
            break;
          }
          std::swap(m[p], m[swap]);
          sign = -sign;
        }
        for (int r = p + 1; r < k; ++r)
          for (int c = p + 1; c < k; ++c) m[r][c] = (m[r][c] * m[p][p] - m[r][p] * m[p][c]) / prev;
        prev = m[p][p];
        if (p == k - 1) det = static_cast<Int>(sign * m[p][p]);
      }
    }
    normal[j] = ((j % 2) ? -1 : 1) * det;
  }
  return normal;
}

template <class Visit>
void for_each_subset(int size, int pick, Visit&& visit) {
  std::vector<int> idx(pick);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == pick) {
      visit(idx);
      return;
    }
    for (int i = start; i <= size - (pick - depth); ++i) {
      idx[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
}

IVec drop(const IVec& v, int j) {
  IVec out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (i != j) out.push_back(v[i]);
  return out;
}

// Euclidean volume of the convex hull of integer points in R^d.
Rational volume(std::vector<IVec> pts, int d) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (d == 0) return 1;
  if (d == 1) {
    Int lo = pts.front()[0], hi = pts.front()[0];
    for (const auto& p : pts) lo = std::min(lo, p[0]), hi = std::max(hi, p[0]);
    return Rational(hi - lo);
  }
  if (static_cast<int>(pts.size()) <= d) return 0;
  const IVec& apex = pts.front();
  std::set<std::pair<IVec, Int>> seen;
  Rational total = 0;
  for_each_subset(static_cast<int>(pts.size()), d, [&](const std::vector<int>& idx) {
    std::vector<IVec> chosen;
    for (int i : idx) chosen.push_back(pts[i]);
    IVec a = primitive(hyperplane_normal(chosen));
    if (std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; })) return;
    Int b = dot(a, chosen[0]);
    bool above = false, below = false;
    for (const auto& p : pts) {
      const Int s = dot(a, p) - b;
      above |= s > 0;
      below |= s < 0;
    }
    if (above && below) return;
    if (below) {
      a = scale(a, -1);
      b = -b;
    }
    if (!seen.insert({a, b}).second) return;
    const Int height = dot(a, apex) - b;
    if (height == 0) return;
    int j = 0;
    while (a[j] == 0) ++j;
    std::vector<IVec> facet;
    for (const auto& p : pts)
      if (dot(a, p) == b) facet.push_back(drop(p, j));
    total += Rational(height, std::abs(a[j])) * volume(facet, d - 1) / d;
  });
  return total;
}

// Volume of the region between the origin and the Newton boundary of the
// given (convenient) point set in R^k.
Rational under_diagram_volume(const std::vector<IVec>& pts, int k) {
  if (k == 1) {
    Int lo = pts.front()[0];
    for (const auto& p : pts) lo = std::min(lo, p[0]);
    return Rational(lo);
  }
  std::set<std::pair<IVec, Int>> seen;
  Rational total = 0;
  for_each_subset(static_cast<int>(pts.size()), k, [&](const std::vector<int>& idx) {
    std::vector<IVec> chosen;
    for (int i : idx) chosen.push_back(pts[i]);
    IVec u = primitive(hyperplane_normal(chosen));
    if (u[0] < 0) u = scale(u, -1);
    if (!std::all_of(u.begin(), u.end(), [](Int x) { return x > 0; })) return;
    const Int c = dot(u, chosen[0]);
    for (const auto& p : pts)
      if (dot(u, p) < c) return;
    if (!seen.insert({u, c}).second) return;
    std::vector<IVec> facet;
    for (const auto& p : pts)
      if (dot(u, p) == c) facet.push_back(drop(p, k - 1));
    total += Rational(c, u[k - 1]) * volume(facet, k - 1) / k;
  });
  return total;
}

}  // namespace

Int kouchnirenko_mu(const SupportSet& support) {
  const int n = support.n();
  for (int i = 0; i < n; ++i) {
    const bool on_axis = std::any_of(support.points.begin(), support.points.end(), [&](const IVec& p) {
      for (int j = 0; j < n; ++j)
        if ((p[j] != 0) != (j == i)) return false;
      return true;
    });
    if (!on_axis) throw InputError("non-convenient support: nothing on axis " + std::to_string(i + 1));
  }
  Rational mu = (n % 2 == 0) ? 1 : -1;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> coords;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) coords.push_back(i);
    const int k = static_cast<int>(coords.size());
    std::vector<IVec> pts;
    for (const auto& p : support.points) {
      bool inside = true;
      for (int i = 0; i < n; ++i)
        if (!(mask >> i & 1) && p[i] != 0) inside = false;
      if (!inside) continue;
      IVec q;
      for (int i : coords) q.push_back(p[i]);
      pts.push_back(std::move(q));
    }
    Rational factorial = 1;
    for (int i = 2; i <= k; ++i) factorial *= i;
    mu += ((n - k) % 2 == 0 ? 1 : -1) * factorial * under_diagram_volume(pts, k);
  }
  if (denominator(mu) != 1) throw std::logic_error("Newton number is not an integer");
  return static_cast<Int>(numerator(mu));
}

Int kouchnirenko_mu(const NewtonPolyhedron& np) { return kouchnirenko_mu(np.support); }

BrieskornPham brieskorn_pham_spectrum(const std::vector<Int>& exponents) {
  if (exponents.size() < 2) throw std::invalid_argument("need at least two exponents");
  Int common = 1;
  for (Int a : exponents) {
    if (a < 2) throw std::invalid_argument("Brieskorn-Pham exponents must be >= 2");
    common = std::lcm(common, a);
  }
  BrieskornPham out;
  std::vector<Int> k(exponents.size(), 1);
  while (true) {
    Int num = 0;
    for (std::size_t i = 0; i < k.size(); ++i) num += k[i] * (common / exponents[i]);
    ++out.eigenvalues[RootOfUnity(num, common)];
    std::size_t i = 0;
    while (i < k.size() && ++k[i] == exponents[i]) k[i++] = 1;
    if (i == k.size()) break;
  }
  out.spectrum.n = static_cast<int>(exponents.size());
  for (const auto& [lambda, c] : out.eigenvalues) {
    out.spectrum.blocks[{lambda, 1}] = c;
    out.spectrum.multiplicities[lambda] = c;
    out.spectrum.mu += c;
  }
  return out;
}

std::optional<std::vector<Int>> brieskorn_pham_exponents(const SupportSet& support) {
  const int n = support.n();
  if (static_cast<int>(support.points.size()) != n) return std::nullopt;
  std::vector<Int> exps(n, 0);
  for (const auto& p : support.points) {
    int nonzero = -1;
    for (int i = 0; i < n; ++i)
      if (p[i] != 0) {
        if (nonzero >= 0) return std::nullopt;
        nonzero = i;
      }
    if (nonzero < 0 || exps[nonzero] != 0) return std::nullopt;
    exps[nonzero] = p[nonzero];
  }
  if (std::any_of(exps.begin(), exps.end(), [](Int a) { return a < 2; })) return std::nullopt;
  return exps;
}

}  // namespace milnor

#include "milnor/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace milnor {
namespace {

IMatrix identity(int n) {
  IMatrix m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

ColumnEchelon column_echelon(const IMatrix& a, int ncols) {
  ColumnEchelon e;
  e.reduced = a;
  e.transform = identity(ncols);
  e.inverse = identity(ncols);
  auto& A = e.reduced;
  auto& U = e.transform;
  auto& V = e.inverse;
  int pivot = 0;
  for (std::size_t i = 0; i < A.size() && pivot < ncols; ++i) {
    for (int j = pivot + 1; j < ncols; ++j) {
      const Int b = A[i][j];
      if (b == 0) continue;
      const Int a0 = A[i][pivot];
      Int x, y;
      const Int g = extended_gcd(a0, b, x, y);
      const Int bg = b / g, ag = a0 / g;
      // columns (pivot, j) <- (x*c_p + y*c_j, -bg*c_p + ag*c_j)
      auto combine_cols = [&](IMatrix& m) {
        for (auto& row : m) {
          const Int cp = row[pivot], cj = row[j];
          row[pivot] = checked_add(checked_mul(x, cp), checked_mul(y, cj));
          row[j] = checked_add(checked_mul(-bg, cp), checked_mul(ag, cj));
        }
      };
      combine_cols(A);
      combine_cols(U);
      // inverse rows (pivot, j) <- (ag*r_p + bg*r_j, -y*r_p + x*r_j)
      IVec rp = V[pivot], rj = V[j];
      for (int c = 0; c < ncols; ++c) {
        V[pivot][c] = checked_add(checked_mul(ag, rp[c]), checked_mul(bg, rj[c]));
        V[j][c] = checked_add(checked_mul(-y, rp[c]), checked_mul(x, rj[c]));
      }
    }
    if (A[i][pivot] != 0) ++pivot;
  }
  e.rank = pivot;
  return e;
}

int matrix_rank(const IMatrix& a, int ncols) { return column_echelon(a, ncols).rank; }

IMatrix integer_kernel(const IMatrix& a, int ncols) {
  const auto e = column_echelon(a, ncols);
  IMatrix k;
  for (int j = e.rank; j < ncols; ++j) {
    IVec col(ncols);
    for (int i = 0; i < ncols; ++i) col[i] = e.transform[i][j];
    k.push_back(std::move(col));
  }
  return k;
}

Int determinant(const IMatrix& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return static_cast<Int>(sign * m[n - 1][n - 1]);
}

IVec LatticeChart::to_chart(const IVec& x) const {
  const IVec diff = sub(x, origin);
  IVec c(dim());
  for (int i = 0; i < dim(); ++i) c[i] = dot(coords[i], diff);
  if (direction_to_ambient(c) != diff)
    throw std::invalid_argument("point " + to_string(x) + " is not in the chart lattice");
  return c;
}

IVec LatticeChart::direction_to_ambient(const IVec& c) const {
  IVec x(ambient_dim(), 0);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < ambient_dim(); ++j) x[j] = checked_add(x[j], checked_mul(c[i], basis[i][j]));
  return x;
}

IVec LatticeChart::to_ambient(const IVec& c) const { return add(origin, direction_to_ambient(c)); }

LatticeChart linear_chart(const std::vector<IVec>& vectors, int ambient_dim) {
  // Z^N ∩ span(D) = integer kernel of an integer basis of D^perp.
  const IMatrix perp = integer_kernel(vectors, ambient_dim);
  const auto e = column_echelon(perp, ambient_dim);
  LatticeChart chart;
  chart.origin.assign(ambient_dim, 0);
  for (int j = e.rank; j < ambient_dim; ++j) {
    IVec col(ambient_dim);
    for (int i = 0; i < ambient_dim; ++i) col[i] = e.transform[i][j];
    chart.basis.push_back(std::move(col));
    chart.coords.push_back(e.inverse[j]);
  }
  lll_reduce(chart.basis, chart.coords);
  return chart;
}

LatticeChart affine_chart(const std::vector<IVec>& points) {
  if (points.empty()) throw std::invalid_argument("affine_chart of an empty point set");
  const IVec origin = *std::min_element(points.begin(), points.end());
  std::vector<IVec> diffs;
  for (const auto& p : points)
    if (p != origin) diffs.push_back(sub(p, origin));
  LatticeChart chart = linear_chart(diffs, static_cast<int>(origin.size()));
  chart.origin = origin;
  return chart;
}

void lll_reduce(IMatrix& basis, IMatrix& coords) {
  const int k = static_cast<int>(basis.size());
  if (k <= 1) return;
  const int n = static_cast<int>(basis[0].size());
  auto fdot = [&](const std::vector<long double>& u, const std::vector<long double>& v) {
    long double s = 0;
    for (int i = 0; i < n; ++i) s += u[i] * v[i];
    return s;
  };
  std::vector<std::vector<long double>> star(k, std::vector<long double>(n));
  std::vector<std::vector<long double>> mu(k, std::vector<long double>(k, 0));
  std::vector<long double> norm(k);
  auto gram_schmidt = [&] {
    for (int i = 0; i < k; ++i) {
      for (int c = 0; c < n; ++c) star[i][c] = static_cast<long double>(basis[i][c]);
      for (int j = 0; j < i; ++j) {
        std::vector<long double> bi(n);
        for (int c = 0; c < n; ++c) bi[c] = static_cast<long double>(basis[i][c]);
        mu[i][j] = norm[j] > 0 ? fdot(bi, star[j]) / norm[j] : 0;
        for (int c = 0; c < n; ++c) star[i][c] -= mu[i][j] * star[j][c];
      }
      norm[i] = fdot(star[i], star[i]);
    }
  };
  auto reduce = [&](int i, int j, Int q) {
    for (int c = 0; c < n; ++c) basis[i][c] = checked_add(basis[i][c], checked_mul(-q, basis[j][c]));
    for (int c = 0; c < n; ++c) coords[j][c] = checked_add(coords[j][c], checked_mul(q, coords[i][c]));
  };
  gram_schmidt();
  int i = 1;
  int guard = 0;
  while (i < k && guard++ < 10000) {
    for (int j = i - 1; j >= 0; --j) {
      const Int q = static_cast<Int>(std::llround(mu[i][j]));
      if (q != 0) {
        reduce(i, j, q);
        gram_schmidt();
      }
    }
    if (norm[i] < (0.75L - mu[i][i - 1] * mu[i][i - 1]) * norm[i - 1]) {
      std::swap(basis[i], basis[i - 1]);
      std::swap(coords[i], coords[i - 1]);
      gram_schmidt();
      i = std::max(i - 1, 1);
    } else {
      ++i;
    }
  }
}

}  // namespace milnor

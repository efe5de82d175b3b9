#pragma once

#include <vector>

#include "milnor/integer.hpp"

namespace milnor {

// Column echelon form by unimodular column operations: A * transform = [H | 0]
// where H has `rank` nonzero columns. `inverse` is transform^{-1}.
struct ColumnEchelon {
  IMatrix reduced;
  IMatrix transform;
  IMatrix inverse;
  int rank = 0;
};

ColumnEchelon column_echelon(const IMatrix& a, int ncols);

int matrix_rank(const IMatrix& a, int ncols);

// Rows form a basis of {x in Z^ncols : a x = 0}.
IMatrix integer_kernel(const IMatrix& a, int ncols);

// Exact determinant of a square matrix.
Int determinant(const IMatrix& a);

/// An affine lattice chart: origin + Z-span(basis), with `coords` mapping
/// ambient points of the lattice to their integer coordinates.
///
/// The basis spans the saturated lattice Z^N ∩ span, so every ambient lattice
/// point of the affine hull has integer coordinates.
struct LatticeChart {
  IVec origin;
  IMatrix basis;   // dim rows of length ambient_dim
  IMatrix coords;  // dim rows of length ambient_dim; coords * basis^T = identity

  int ambient_dim() const { return static_cast<int>(origin.size()); }
  int dim() const { return static_cast<int>(basis.size()); }

  // Throws std::invalid_argument if x is not a lattice point of the chart.
  IVec to_chart(const IVec& x) const;
  IVec to_ambient(const IVec& c) const;
  // Linear part only (no origin shift).
  IVec direction_to_ambient(const IVec& c) const;
};

// Chart of the affine lattice spanned by `points`, origin at the lex-min point.
LatticeChart affine_chart(const std::vector<IVec>& points);

// Chart of Z^N ∩ span(vectors), origin 0.
LatticeChart linear_chart(const std::vector<IVec>& vectors, int ambient_dim);

// LLL-reduces the rows of `basis` in place and applies the matching
// coordinate change to `coords`.
void lll_reduce(IMatrix& basis, IMatrix& coords);

}  // namespace milnor

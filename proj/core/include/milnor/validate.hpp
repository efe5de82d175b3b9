#pragma once

#include <functional>
#include <string>
#include <vector>

#include "milnor/monodromy.hpp"
#include "milnor/newton.hpp"

namespace milnor {

struct ValidationCheck {
  std::string name;
  bool pass = true;
  std::string detail;  // offending datum when the check fails
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const;
  const ValidationCheck* find(const std::string& name) const;
};

struct ValidationOptions {
  // Applied to the motivic table before any check runs; lets tests corrupt it.
  std::function<void(MotivicTable&)> tamper;
};

/// Runs every cross-check on the polyhedron: per-face Euler characteristics
/// and conjugation symmetry, the pyramid and global identities, the Ehrhart
/// shift, the symmetries of the total, both eigenvalue-1 routes, the
/// pseudo-prime and prime-face closed formulas, the fast paths, the Newton
/// number oracle, the block-count sanity conditions and, for Brieskorn-Pham
/// supports, the full oracle spectrum. Failures are report entries.
ValidationReport validate(const NewtonPolyhedron& np, const ValidationOptions& options = {});

}  // namespace milnor

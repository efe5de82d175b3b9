#pragma once

#include <vector>

#include "milnor/integer.hpp"

namespace milnor {

/// Extreme rays of the pointed cone {y in R^dim : row . y >= 0 for every row},
/// by the double description method with the combinatorial adjacency test.
///
/// Rays come back as primitive integer vectors, sorted. Throws
/// std::invalid_argument if the rows do not have full column rank (cone not
/// pointed).
std::vector<IVec> extreme_rays(const IMatrix& rows, int dim);

}  // namespace milnor

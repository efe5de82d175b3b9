#pragma once

#include <map>
#include <optional>
#include <vector>

#include "milnor/monodromy.hpp"
#include "milnor/newton.hpp"
#include "milnor/root_of_unity.hpp"
#include "milnor/support.hpp"

namespace milnor {

/// Newton number μ = Σ_I (-1)^{n-|I|} |I|! V_I, with V_I the volume under the
/// Newton boundary inside the coordinate subspace R^I (V_∅ = 1).
///
/// Only the support is used: compact facets are found by brute force over
/// point subsets and volumes are exact rationals, so nothing is shared with
/// the main pipeline.
Int kouchnirenko_mu(const NewtonPolyhedron& np);
Int kouchnirenko_mu(const SupportSet& support);

struct BrieskornPham {
  std::map<RootOfUnity, Int> eigenvalues;  // multiset
  JordanSpectrum spectrum;                 // every block of size 1
};

// Spectrum of x1^a1 + ... + xn^an; each a_i >= 2.
BrieskornPham brieskorn_pham_spectrum(const std::vector<Int>& exponents);

// The exponents when the support is exactly {a_i e_i}, else nullopt.
std::optional<std::vector<Int>> brieskorn_pham_exponents(const SupportSet& support);

}  // namespace milnor

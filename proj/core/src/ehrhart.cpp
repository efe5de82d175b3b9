#include "milnor/ehrhart.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "milnor/errors.hpp"
#include "milnor/lattice_points.hpp"

namespace milnor {
namespace {

using MemoKey = std::pair<std::vector<IVec>, Character>;

PhiTable compute_phi(const LatticePolytope& p, const Character& character) {
  const int degree = p.dim() + 1;
  const Int max_k = 2 * degree;
  const auto counts = relint_counts_upto(p, max_k, character);

  std::map<RootOfUnity, std::vector<Int>> series;
  for (Int k = 0; k <= max_k; ++k)
    for (const auto& [alpha, c] : counts[k]) {
      auto& s = series[alpha];
      s.resize(max_k + 1, 0);
      s[k] = c;
    }

  PhiTable table;
  table.dim = p.dim();
  for (const auto& [alpha, s] : series) {
    std::vector<Int> phi(max_k + 1, 0);
    for (Int i = 0; i <= max_k; ++i)
      for (Int j = 0; j <= std::min<Int>(i, degree); ++j)
        phi[i] = checked_add(phi[i], checked_mul(sign_power(j) * binomial(degree, j), s[i - j]));
    for (Int i = degree + 1; i <= max_k; ++i)
      if (phi[i] != 0)
        throw ConsistencyError("Ehrhart series of a " + std::to_string(p.dim()) + "-polytope in bucket " +
                               alpha.str() + " is not a polynomial of degree <= " + std::to_string(degree));
    phi.resize(degree + 1);
    table.coefficients.emplace(alpha, std::move(phi));
  }
  return table;
}

}  // namespace

Int PhiTable::phi(const RootOfUnity& alpha, int i) const {
  auto it = coefficients.find(alpha);
  if (it == coefficients.end() || i < 0 || i >= static_cast<int>(it->second.size())) return 0;
  return it->second[i];
}

const PhiTable& p_alpha(const LatticePolytope& p, const Character& character) {
  static std::mutex mutex;
  static std::map<MemoKey, std::unique_ptr<PhiTable>> memo;
  MemoKey key{p.vertices(), character};
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return *it->second;
  }
  auto table = std::make_unique<PhiTable>(compute_phi(p, character));
  std::lock_guard lock(mutex);
  auto [it, inserted] = memo.emplace(std::move(key), std::move(table));
  return *it->second;
}

Int phi_tilde(const LatticePolytope& p, const Character& character, const RootOfUnity& alpha) {
  if (alpha.is_one()) throw std::invalid_argument("phi_tilde is defined for nontrivial eigenvalues only");
  const PhiTable& table = p_alpha(p, character);
  Int sum = 0;
  for (int i = 0; i <= p.dim(); ++i) sum += table.phi(alpha, i);
  return sum;
}

}  // namespace milnor

#include "milnor/hodge.hpp"

#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "milnor/ehrhart.hpp"
#include "milnor/errors.hpp"
#include "milnor/fan.hpp"
#include "milnor/lattice_points.hpp"

namespace milnor {

Int HodgeTable::get(int p, int q, const RootOfUnity& alpha) const {
  auto it = entries_.find({p, q, alpha});
  return it == entries_.end() ? 0 : it->second;
}

void HodgeTable::set(int p, int q, const RootOfUnity& alpha, Int value) {
  if (value == 0) entries_.erase({p, q, alpha});
  else entries_[{p, q, alpha}] = value;
}

void HodgeTable::add(int p, int q, const RootOfUnity& alpha, Int value) {
  set(p, q, alpha, checked_add(get(p, q, alpha), value));
}

Int HodgeTable::total() const {
  Int s = 0;
  for (const auto& [idx, v] : entries_) s = checked_add(s, v);
  return s;
}

Int HodgeTable::total(const RootOfUnity& alpha) const {
  Int s = 0;
  for (const auto& [idx, v] : entries_)
    if (idx.alpha == alpha) s = checked_add(s, v);
  return s;
}

Int HodgeTable::antidiagonal(int r, const RootOfUnity& alpha) const {
  Int s = 0;
  for (const auto& [idx, v] : entries_)
    if (idx.alpha == alpha && idx.p + idx.q == r) s = checked_add(s, v);
  return s;
}

std::set<RootOfUnity> HodgeTable::alphas() const {
  std::set<RootOfUnity> out;
  for (const auto& [idx, v] : entries_) out.insert(idx.alpha);
  return out;
}

HodgeTable& HodgeTable::operator+=(const HodgeTable& other) {
  dim_ = std::max(dim_, other.dim_);
  for (const auto& [idx, v] : other.entries_) add(idx.p, idx.q, idx.alpha, v);
  return *this;
}

std::string HodgeTable::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [idx, v] : entries_) {
    if (!first) os << ", ";
    first = false;
    os << '(' << idx.p << ',' << idx.q << ',' << idx.alpha.str() << ")->" << v;
  }
  os << '}';
  return os.str();
}

HodgeTable lefschetz_twist(const HodgeTable& table, int m) {
  HodgeTable out(table.dim() + m);
  for (const auto& [idx, v] : table.entries())
    for (int i = 0; i <= m; ++i)
      out.add(idx.p + i, idx.q + i, idx.alpha, checked_mul(sign_power(i) * binomial(m, i), v));
  return out;
}

HodgeTable torus_product(const HodgeTable& table, int j) {
  HodgeTable out(table.dim() + j);
  for (const auto& [idx, v] : table.entries())
    for (int i = 0; i <= j; ++i)
      out.add(idx.p + i, idx.q + i, idx.alpha, checked_mul(sign_power(j - i) * binomial(j, i), v));
  return out;
}

BoundaryValues boundary_values(const LatticePolytope& p, const Character& character) {
  const int m = p.dim();
  if (m == 0) throw std::invalid_argument("boundary values need a polytope of positive dimension");
  const Int sign = sign_power(m - 1);
  const RootOfUnity one;

  const auto face_counts = face_relint_counts(p, character);
  const BucketCounts skeleton = lattice_point_count(p, 1, Region::OneSkeleton, character);
  const PhiTable& phi = p_alpha(p, character);

  BoundaryValues b;
  b.known = HodgeTable(m);
  b.alphas.insert(one);
  for (const auto& fc : face_counts)
    for (const auto& [a, c] : fc) b.alphas.insert(a);
  for (const auto& [a, c] : skeleton) b.alphas.insert(a);
  for (const auto& [a, c] : phi.coefficients) b.alphas.insert(a);
  for (const auto& a : std::set<RootOfUnity>(b.alphas)) b.alphas.insert(a.inverse());

  for (int p_ = 0; p_ < m; ++p_)
    if (2 * p_ > m - 1) b.known.set(p_, p_, one, sign_power(m + p_ + 1) * binomial(m, p_ + 1));

  for (int r = 1; r < m; ++r) {
    BucketCounts sum;
    for (std::size_t f = 0; f < p.faces().size(); ++f)
      if (p.faces()[f].dim == r + 1)
        for (const auto& [a, c] : face_counts[f]) sum[a] += c;
    for (const auto& [a, c] : sum) {
      b.known.set(r, 0, a, sign * c);
      b.known.set(0, r, a.inverse(), sign * c);
    }
  }

  auto pi = [&](const RootOfUnity& a) {
    auto it = skeleton.find(a);
    return it == skeleton.end() ? Int{0} : it->second;
  };
  for (const auto& a : b.alphas) b.known.set(0, 0, a, a.is_one() ? sign * (pi(a) - 1) : sign * pi(a.inverse()));

  for (int p_ = 0; p_ < m; ++p_)
    for (const auto& a : b.alphas) {
      const Int value = (a.is_one() ? sign_power(p_ + m + 1) * binomial(m, p_ + 1) : 0) +
                        sign_power(m + 1) * phi.phi(a, m - p_);
      b.row_sums[{p_, a}] = value;
    }
  return b;
}

namespace {

using MemoKey = std::pair<std::vector<IVec>, Character>;

bool is_known(int p, int q, int m) { return p + q > m - 1 || p == 0 || q == 0; }

std::string where(int p, int q, const RootOfUnity& a, int m) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + "," + a.str() + ") of a " + std::to_string(m) +
         "-dimensional polytope";
}

HodgeTable compute_table(const LatticePolytope& poly, const Character& character) {
  const int m = poly.dim();
  if (m == 0) return HodgeTable(0);
  const BoundaryValues b = boundary_values(poly, character);
  HodgeTable e = b.known;
  std::set<RootOfUnity> alphas = b.alphas;

  if (m >= 2) {
    // Proper strata of the closure in the toric variety of a simplicial
    // refinement of the normal fan.
    HodgeTable strata(m);
    const Fan fan = simplicial_refinement(normal_fan(poly));
    for (const auto& cone : fan.cones) {
      if (cone.rays.empty()) continue;
      const int face_dim = poly.faces()[cone.source].dim;
      if (face_dim < 1) continue;
      const FacePolytope fp = face_polytope(poly, character, cone.source);
      strata += torus_product(hodge_table(fp.polytope, fp.character), m - fan.cone_dim(cone) - face_dim);
    }
    for (const auto& a : strata.alphas()) {
      alphas.insert(a);
      alphas.insert(a.inverse());
    }
    for (int p = 0; p < m; ++p)
      for (int q = 0; p + q < m - 1; ++q)
        for (const auto& a : alphas) {
          const int pd = m - 1 - p, qd = m - 1 - q;
          const RootOfUnity ad = a.inverse();
          const Int closure = b.known.get(pd, qd, ad) + strata.get(pd, qd, ad);
          const Int value = closure - strata.get(p, q, a);
          if (is_known(p, q, m)) {
            if (value != b.known.get(p, q, a))
              throw ConsistencyError("closure duality disagrees with the boundary formula at " + where(p, q, a, m));
          } else {
            e.set(p, q, a, value);
          }
        }
  }

  for (int p = 0; p < m; ++p) {
    const int q = m - 1 - p;
    for (const auto& a : alphas) {
      Int rest = 0;
      for (int qq = 0; qq < m; ++qq)
        if (qq != q) rest += e.get(p, qq, a);
      auto it = b.row_sums.find({p, a});
      const Int target = it == b.row_sums.end() ? 0 : it->second;
      const Int value = target - rest;
      if (is_known(p, q, m)) {
        if (value != b.known.get(p, q, a))
          throw ConsistencyError("row sum disagrees with the boundary formula at " + where(p, q, a, m));
      } else {
        e.set(p, q, a, value);
      }
    }
  }

  for (const auto& [idx, v] : e.entries())
    if (e.get(idx.q, idx.p, idx.alpha.inverse()) != v)
      throw ConsistencyError("conjugation symmetry fails at " + where(idx.p, idx.q, idx.alpha, m));
  const Int expected = sign_power(m - 1) * normalized_volume(poly);
  if (e.total() != expected)
    throw ConsistencyError("Euler characteristic " + std::to_string(e.total()) + " differs from " +
                           std::to_string(expected) + " for a " + std::to_string(m) + "-dimensional polytope");
  return e;
}

}  // namespace

const HodgeTable& hodge_table(const LatticePolytope& p, const Character& character) {
  static std::mutex mutex;
  static std::map<MemoKey, std::unique_ptr<HodgeTable>> memo;
  MemoKey key{p.vertices(), character};
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return *it->second;
  }
  auto table = std::make_unique<HodgeTable>(compute_table(p, character));
  std::lock_guard lock(mutex);
  auto [it, inserted] = memo.emplace(std::move(key), std::move(table));
  return *it->second;
}

std::map<int, Int> pseudo_prime_row_sums(const LatticePolytope& p, const Character& character,
                                         const RootOfUnity& alpha) {
  if (alpha.is_one()) throw std::invalid_argument("pseudo-prime row sums are defined for nontrivial eigenvalues");
  if (primeness(p) == Primeness::Neither) throw InputError("polytope is not pseudo-prime");
  const int m = p.dim();
  const auto& faces = p.faces();
  std::vector<Int> tilde(faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const FacePolytope fp = face_polytope(p, character, static_cast<int>(f));
    tilde[f] = phi_tilde(fp.polytope, fp.character, alpha);
  }
  std::map<int, Int> out;
  for (int r = 0; r < m; ++r) {
    Int sum = 0;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (faces[f].dim != r + 1) continue;
      for (int g : p.subfaces(static_cast<int>(f))) sum += sign_power(faces[g].dim) * tilde[g];
    }
    out[r] = sign_power(m + r) * sum;
  }
  return out;
}

}  // namespace milnor

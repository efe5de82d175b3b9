#include "milnor/monodromy.hpp"

#include <algorithm>
#include <set>

#include "milnor/errors.hpp"
#include "milnor/lattice_points.hpp"

namespace milnor {
namespace {

Int line_sum(const HodgeTable& t, const RootOfUnity& a, int r1, int r2) {
  Int s = 0;
  if (r1 >= 0) s += t.antidiagonal(r1, a);
  if (r2 >= 0) s += t.antidiagonal(r2, a);
  return s;
}

Int bucket(const BucketCounts& counts, const RootOfUnity& a) {
  auto it = counts.find(a);
  return it == counts.end() ? 0 : it->second;
}

}  // namespace

std::string describe_face(const CompactFace& face) {
  std::string s = "conv{";
  for (std::size_t i = 0; i < face.vertices.size(); ++i) {
    if (i) s += ",";
    s += to_string(face.vertices[i]);
  }
  return s + "}";
}

MotivicTable motivic_milnor_table(const NewtonPolyhedron& np) {
  MotivicTable out;
  out.n = np.n();
  out.first_sum = HodgeTable(out.n);
  out.second_sum = HodgeTable(out.n);
  for (const auto& face : np.faces) {
    const FaceChart fc = face_chart(np, face);
    FaceTables ft;
    ft.face_id = face.id;
    ft.delta = hodge_table(fc.delta, fc.character);
    out.first_sum += lefschetz_twist(ft.delta, face.m);
    if (face.dim >= 1) {
      ft.gamma = hodge_table(fc.gamma, Character::trivial(face.dim));
      out.second_sum += lefschetz_twist(ft.gamma, face.m + 1);
    }
    out.faces.push_back(std::move(ft));
  }
  out.total = out.first_sum + out.second_sum;
  return out;
}

Int JordanSpectrum::count(const RootOfUnity& lambda, int size) const {
  auto it = blocks.find({lambda, size});
  return it == blocks.end() ? 0 : it->second;
}

Int JordanSpectrum::at_least(const RootOfUnity& lambda, int k) const {
  Int s = 0;
  for (const auto& [key, c] : blocks)
    if (key.first == lambda && key.second >= k) s += c;
  return s;
}

UnipotentRoutes unipotent_routes(const MotivicTable& t) {
  const int n = t.n;
  const Int sign = sign_power(n - 1);
  const RootOfUnity one;
  UnipotentRoutes r;
  r.via_total.assign(n + 1, 0);
  r.via_first_sum.assign(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    r.via_total[k] = sign * line_sum(t.total, one, n - 1 + k, n + k);
    r.via_first_sum[k] = sign * line_sum(t.first_sum, one, n - 2 - k, n - 1 - k);
  }
  return r;
}

JordanSpectrum jordan_blocks(const MotivicTable& t) {
  const int n = t.n;
  const Int sign = sign_power(n - 1);
  JordanSpectrum js;
  js.n = n;

  std::set<RootOfUnity> lambdas = t.total.alphas();
  for (const auto& a : t.first_sum.alphas()) lambdas.insert(a);
  lambdas.insert(RootOfUnity());

  const UnipotentRoutes routes = unipotent_routes(t);
  for (int k = 1; k < n; ++k)
    if (routes.via_total[k] != routes.via_first_sum[k])
      throw ConsistencyError("eigenvalue-1 block counts disagree at size >= " + std::to_string(k) + ": " +
                             std::to_string(routes.via_total[k]) + " vs " + std::to_string(routes.via_first_sum[k]));

  for (const auto& lambda : lambdas) {
    const int max_size = lambda.is_one() ? n - 1 : n;
    std::vector<Int> at_least(max_size + 2, 0);
    for (int k = 1; k <= max_size; ++k)
      at_least[k] = lambda.is_one() ? routes.via_total[k] : sign * line_sum(t.first_sum, lambda, n - 2 + k, n - 1 + k);
    const Int multiplicity = sign * (t.total.total(lambda) - (lambda.is_one() ? 1 : 0));
    Int weighted = 0;
    for (int k = 1; k <= max_size; ++k) {
      const Int c = at_least[k] - at_least[k + 1];
      if (c < 0 || at_least[k] < 0)
        throw ConsistencyError("negative Jordan block count for eigenvalue " + lambda.str() + " at size " +
                               std::to_string(k));
      if (c > 0) js.blocks[{lambda, k}] = c;
      weighted += k * c;
    }
    if (weighted != multiplicity)
      throw ConsistencyError("Jordan blocks for eigenvalue " + lambda.str() + " account for " +
                             std::to_string(weighted) + " dimensions, multiplicity is " + std::to_string(multiplicity));
    if (multiplicity > 0) js.multiplicities[lambda] = multiplicity;
    js.mu += multiplicity;
  }
  return js;
}

JordanSpectrum jordan_blocks(const NewtonPolyhedron& np) { return jordan_blocks(motivic_milnor_table(np)); }

std::pair<Int, Int> fastpath_top(const NewtonPolyhedron& np, const RootOfUnity& lambda) {
  if (lambda.is_one()) throw std::invalid_argument("fastpath_top needs an eigenvalue other than 1");
  Int top = 0, next = 0;
  for (const auto& face : np.faces) {
    if (!face.interior_touching || !lambda.divides_order(face.d)) continue;
    if (face.dim == 0) ++top;
    if (face.dim == 1) {
      // Heights k and e-k correspond to the buckets λ^{-1} and λ.
      const FaceChart fc = face_chart(np, face);
      const BucketCounts relint = lattice_point_count(fc.delta, 1, Region::RelativeInterior, fc.character);
      next += bucket(relint, lambda) + bucket(relint, lambda.inverse());
    }
  }
  return {top, next};
}

std::pair<Int, Int> fastpath_unipotent(const NewtonPolyhedron& np) {
  std::set<IVec> skeleton;
  Int two_faces = 0;
  for (const auto& face : np.faces) {
    if (face.dim == 0) skeleton.insert(face.vertices[0]);
    if (face.dim == 1) {
      const IVec dir = sub(face.vertices[1], face.vertices[0]);
      const IVec step = primitive(dir);
      for (Int j = 0; j <= gcd_of(dir); ++j) skeleton.insert(add(face.vertices[0], scale(step, j)));
    }
    if (face.dim == 2 && face.interior_touching) {
      const FaceChart fc = face_chart(np, face);
      two_faces += bucket(lattice_point_count(fc.gamma, 1, Region::RelativeInterior, Character::trivial(2)), RootOfUnity());
    }
  }
  const Int positive = std::count_if(skeleton.begin(), skeleton.end(), [](const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x > 0; });
  });
  return {positive, 2 * two_faces};
}

int first_non_prime_face(const NewtonPolyhedron& np) {
  for (const auto& face : np.faces)
    if (face.dim >= 2 && primeness(face_chart(np, face).gamma) != Primeness::Prime) return face.id;
  return -1;
}

Int prime_face_blocks(const NewtonPolyhedron& np, const RootOfUnity& lambda, int k) {
  if (lambda.is_one()) throw std::invalid_argument("prime_face_blocks needs an eigenvalue other than 1");
  if (k < 1) throw std::invalid_argument("block size must be positive");
  if (int bad = first_non_prime_face(np); bad >= 0)
    throw InputError("face " + describe_face(np.faces[bad]) + " is not prime");
  const int n = np.n();
  Int total = 0;
  for (const auto& face : np.faces) {
    const FaceChart fc = face_chart(np, face);
    const auto e = pseudo_prime_row_sums(fc.delta, fc.character, lambda);
    for (int kk : {k, k + 1})
      for (int r = 0; r <= face.dim; ++r) {
        if ((n - 2 + kk - r) % 2 != 0) continue;
        const int d = (n - 2 + kk - r) / 2;
        auto it = e.find(r);
        if (it != e.end()) total += sign_power(d) * binomial(face.m, d) * it->second;
      }
  }
  return sign_power(n - 1) * total;
}

Int newton_number(const NewtonPolyhedron& np) {
  const int n = np.n();
  Int mu = sign_power(n);
  for (const auto& face : np.faces)
    if (face.m == 0) mu += sign_power(n - face.dim - 1) * normalized_volume(face_chart(np, face).delta);
  return mu;
}

PyramidCheck pyramid_identity(const NewtonPolyhedron& np, const CompactFace& face) {
  const FaceChart fc = face_chart(np, face);
  PyramidCheck check;
  check.delta = hodge_table(fc.delta, fc.character);
  if (face.dim >= 1) check.gamma = hodge_table(fc.gamma, Character::trivial(face.dim));
  const RootOfUnity one;
  for (int p = 0; p <= face.dim; ++p)
    for (int q = 0; q <= face.dim; ++q) {
      const Int got = check.gamma.get(p, q, one) + check.delta.get(p, q, one);
      const Int want = p == q ? sign_power(face.dim + p) * binomial(face.dim, p) : 0;
      if (got != want && check.pass) {
        check.pass = false;
        check.detail = "face " + describe_face(face) + " at (" + std::to_string(p) + "," + std::to_string(q) +
                       "): " + std::to_string(got) + " != " + std::to_string(want);
      }
    }
  return check;
}

}  // namespace milnor

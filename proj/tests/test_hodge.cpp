#include <doctest.h>

#include <functional>

#include "milnor/errors.hpp"
#include "milnor/hodge.hpp"
#include "milnor/monodromy.hpp"
#include "milnor/newton.hpp"

using namespace milnor;

namespace {

const RootOfUnity kOne;
RootOfUnity r(Int a, Int b) { return RootOfUnity(a, b); }

const LatticePolytope kCusp({{0, 0}, {2, 0}, {0, 3}}, 2);
const Character kCuspChar({3, 2}, 6);

HodgeTable table_of(std::initializer_list<std::tuple<int, int, RootOfUnity, Int>> entries) {
  HodgeTable t;
  for (const auto& [p, q, a, v] : entries) t.add(p, q, a, v);
  return t;
}

LatticePolytope simplex(int d, Int scale) {
  std::vector<IVec> pts{IVec(d, 0)};
  for (int i = 0; i < d; ++i) {
    IVec e(d, 0);
    e[i] = scale;
    pts.push_back(e);
  }
  return LatticePolytope(pts, d);
}

// Polynomials in L = uv, lowest degree first.
using Poly = std::vector<Int>;

Poly poly_add(Poly a, const Poly& b, Int s = 1) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
  return a;
}

// The open parts z_k = e(Z*_{s Δ_k}) from e(closed hypersurface in P^k) by
// inclusion-exclusion over the torus orbits of P^k, whose closures meet the
// hypersurface in the same kind of hypersurface of lower dimension.
std::vector<Poly> open_parts(int max_k, const std::function<Poly(int)>& closed) {
  std::vector<Poly> z(max_k + 1);
  for (int k = 1; k <= max_k; ++k) {
    Poly rest = closed(k);
    for (int j = 1; j < k; ++j) rest = poly_add(rest, z[j], -binomial(k + 1, j + 1));
    z[k] = rest;
  }
  return z;
}

Poly projective_space(int d) { return Poly(d + 1, 1); }

Poly smooth_quadric(int d) {
  Poly p = projective_space(d);
  if (d % 2 == 0) p[d / 2] += 1;
  return p;
}

void check_matches(const HodgeTable& t, const Poly& poly) {
  HodgeTable want;
  for (std::size_t i = 0; i < poly.size(); ++i) want.add(static_cast<int>(i), static_cast<int>(i), kOne, poly[i]);
  CHECK(t.str() == want.str());
}

}  // namespace

TEST_CASE("boundary values of the cusp triangle") {
  const BoundaryValues b = boundary_values(kCusp, kCuspChar);
  CHECK(b.known.get(0, 0, kOne) == -2);
  CHECK(b.known.get(0, 0, r(1, 2)) == -1);
  CHECK(b.known.get(0, 0, r(1, 3)) == -1);
  CHECK(b.known.get(0, 0, r(2, 3)) == -1);
  CHECK(b.known.get(1, 0, r(5, 6)) == -1);
  CHECK(b.known.get(0, 1, r(1, 6)) == -1);
  CHECK(b.known.get(1, 1, kOne) == 1);
  CHECK_THROWS_AS(boundary_values(LatticePolytope({{}}, 0), Character::trivial(0)), std::invalid_argument);
}

TEST_CASE("full table of the cusp triangle") {
  const HodgeTable& t = hodge_table(kCusp, kCuspChar);
  const HodgeTable want = table_of({{0, 0, kOne, -2},
                                    {0, 0, r(1, 2), -1},
                                    {0, 0, r(1, 3), -1},
                                    {0, 0, r(2, 3), -1},
                                    {1, 0, r(5, 6), -1},
                                    {0, 1, r(1, 6), -1},
                                    {1, 1, kOne, 1}});
  CHECK(t == want);
  CHECK(t.entries().size() == 7);
  CHECK(t.total() == -normalized_volume(kCusp));
}

TEST_CASE("every 2-dimensional polytope has e^{1,1}_1 = 1 in the top range") {
  for (const auto& p : {kCusp, simplex(2, 1), simplex(2, 4), LatticePolytope({{0, 0}, {3, 0}, {0, 1}, {2, 2}}, 2)}) {
    const HodgeTable& t = hodge_table(p, Character::trivial(2));
    CHECK(t.get(1, 1, kOne) == 1);
    for (const auto& [idx, v] : t.entries())
      if (idx.p + idx.q == 2) CHECK((idx.p == 1 && idx.alpha.is_one()));
  }
}

TEST_CASE("tables of segments") {
  const LatticePolytope seg({{0}, {2}}, 1);
  const HodgeTable& t = hodge_table(seg, Character({1}, 2));
  CHECK(t == table_of({{0, 0, kOne, 1}, {0, 0, r(1, 2), 1}}));
  CHECK(hodge_table(LatticePolytope({{0}, {1}}, 1), Character::trivial(1)) == table_of({{0, 0, kOne, 1}}));
  // Segment of length 3: four points, Π_1 = 4.
  CHECK(hodge_table(LatticePolytope({{0}, {3}}, 1), Character::trivial(1)) == table_of({{0, 0, kOne, 3}}));
}

TEST_CASE("hypersurfaces with Newton polytope a standard simplex") {
  const auto z = open_parts(4, [](int k) { return projective_space(k - 1); });
  for (int d = 1; d <= 4; ++d) check_matches(hodge_table(simplex(d, 1), Character::trivial(d)), z[d]);
}

TEST_CASE("generic quadrics in tori") {
  const auto z = open_parts(4, [](int k) { return smooth_quadric(k - 1); });
  for (int d = 1; d <= 4; ++d) check_matches(hodge_table(simplex(d, 2), Character::trivial(d)), z[d]);
}

TEST_CASE("tables satisfy conjugation symmetry and the Euler characteristic") {
  const std::vector<std::pair<LatticePolytope, Character>> cases{
      {simplex(4, 2), Character({1, 0, 0, 0}, 2)},
      {simplex(3, 6), Character({1, 2, 3}, 6)},
      {LatticePolytope({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}, 3),
       Character::trivial(3)},
      {LatticePolytope({{0, 0, 0, 0}, {2, 0, 0, 0}, {0, 2, 0, 0}, {2, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}, 4),
       Character({1, 1, 1, 1}, 2)},
  };
  for (const auto& [p, chi] : cases) {
    const HodgeTable& t = hodge_table(p, chi);
    for (const auto& [idx, v] : t.entries()) CHECK(t.get(idx.q, idx.p, idx.alpha.inverse()) == v);
    CHECK(t.total() == sign_power(p.dim() - 1) * normalized_volume(p));
  }
}

TEST_CASE("pseudo-prime row sums") {
  const auto five_sixths = pseudo_prime_row_sums(kCusp, kCuspChar, r(5, 6));
  CHECK(five_sixths.at(1) == -1);
  CHECK(five_sixths.at(1) == hodge_table(kCusp, kCuspChar).antidiagonal(1, r(5, 6)));
  const auto half = pseudo_prime_row_sums(kCusp, kCuspChar, r(1, 2));
  CHECK(half.at(0) == -1);
  for (const auto& [row, v] : pseudo_prime_row_sums(kCusp, kCuspChar, r(1, 7))) CHECK(v == 0);

  // A pyramid over an octahedron: the apex edges lie in four 2-faces.
  const LatticePolytope pyramid({{0, 1, 1, 0}, {2, 1, 1, 0}, {1, 0, 1, 0}, {1, 2, 1, 0}, {1, 1, 0, 0}, {1, 1, 2, 0}, {1, 1, 1, 1}}, 4);
  CHECK(primeness(pyramid) == Primeness::Neither);
  CHECK_THROWS_AS(pseudo_prime_row_sums(pyramid, Character::trivial(4), r(1, 2)), InputError);
}

TEST_CASE("Lefschetz twist and torus factors") {
  const HodgeTable point = table_of({{0, 0, kOne, 1}});
  CHECK(lefschetz_twist(point, 0) == point);
  CHECK(lefschetz_twist(point, 1) == table_of({{0, 0, kOne, 1}, {1, 1, kOne, -1}}));
  CHECK(lefschetz_twist(hodge_table(kCusp, kCuspChar), 2).total() == 0);
  CHECK(torus_product(point, 1) == table_of({{0, 0, kOne, -1}, {1, 1, kOne, 1}}));
  CHECK(torus_product(point, 2) == table_of({{0, 0, kOne, 1}, {1, 1, kOne, -2}, {2, 2, kOne, 1}}));
}

TEST_CASE("pyramid identity on faces") {
  const NewtonPolyhedron cusp = newton_polyhedron(parse_polynomial("x^2 + y^3"));
  const PyramidCheck edge = pyramid_identity(cusp, cusp.faces[2]);
  CHECK(edge.pass);
  CHECK(edge.delta.get(0, 0, kOne) + edge.gamma.get(0, 0, kOne) == -1);
  CHECK(edge.delta.get(1, 1, kOne) + edge.gamma.get(1, 1, kOne) == 1);
  const PyramidCheck vertex = pyramid_identity(cusp, cusp.faces[0]);
  CHECK(vertex.pass);
  CHECK(vertex.delta == table_of({{0, 0, kOne, 1}, {0, 0, r(1, 3), 1}, {0, 0, r(2, 3), 1}}));

  const NewtonPolyhedron np = newton_polyhedron(parse_polynomial("x^5 + x^2*y^2 + y^5"));
  for (const auto& face : np.faces) {
    const PyramidCheck pc = pyramid_identity(np, face);
    CHECK_MESSAGE(pc.pass, pc.detail);
    if (face.vertices == std::vector<ExponentVector>{{2, 2}}) CHECK(pc.delta.get(0, 0, kOne) == 1);
  }
}

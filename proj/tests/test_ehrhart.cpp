#include <doctest.h>

#include "milnor/ehrhart.hpp"
#include "milnor/newton.hpp"

using namespace milnor;

namespace {

const RootOfUnity kOne;
const RootOfUnity kHalf(1, 2);

FaceChart chart_of(const char* text, const std::vector<ExponentVector>& vertices) {
  static std::vector<NewtonPolyhedron> keep;
  keep.push_back(newton_polyhedron(parse_polynomial(text)));
  for (const auto& f : keep.back().faces)
    if (f.vertices == vertices) return face_chart(keep.back(), f);
  FAIL("no such face");
  return {};
}

}  // namespace

TEST_CASE("P_alpha of a segment with the height character") {
  const FaceChart fc = chart_of("x^5 + x^2*y^2 + y^5", {{2, 2}});
  const PhiTable& t = p_alpha(fc.delta, fc.character);
  CHECK(t.coefficients.at(kOne) == std::vector<Int>{0, 0, 1});
  CHECK(t.coefficients.at(kHalf) == std::vector<Int>{0, 1, 0});
  CHECK(t.coefficients.size() == 2);
}

TEST_CASE("P_alpha of a unit segment and a point") {
  const PhiTable& seg = p_alpha(LatticePolytope({{0}, {1}}, 1), Character::trivial(1));
  CHECK(seg.coefficients.at(kOne) == std::vector<Int>{0, 0, 1});
  const PhiTable& pt = p_alpha(LatticePolytope({{}}, 0), Character::trivial(0));
  CHECK(pt.coefficients.at(kOne) == std::vector<Int>{0, 1});
}

TEST_CASE("P_1 of the cusp triangle matches its Ehrhart h*-vector") {
  // l*(kT) = 3k^2 - 3k + 1 gives (1-t)^3 Σ l*(kT) t^k = t + 4t^2 + t^3.
  const PhiTable& t = p_alpha(LatticePolytope({{0, 0}, {2, 0}, {0, 3}}, 2), Character::trivial(2));
  CHECK(t.coefficients.at(kOne) == std::vector<Int>{0, 1, 4, 1});
}

TEST_CASE("phi_tilde") {
  const FaceChart fc = chart_of("x^5 + x^2*y^2 + y^5", {{2, 2}});
  CHECK(phi_tilde(fc.delta, fc.character, kHalf) == 1);
  CHECK(phi_tilde(LatticePolytope({{}}, 0), Character::trivial(0), kHalf) == 0);
  CHECK(phi_tilde(LatticePolytope({{0}, {1}}, 1), Character::trivial(1), kHalf) == 0);
  CHECK_THROWS_AS(phi_tilde(fc.delta, fc.character, kOne), std::invalid_argument);
}

TEST_CASE("shift identity P_1(conv(0, face)) = t P_1(face)") {
  for (const char* text : {"x^2 + y^3", "x^5 + x^2*y^2 + y^5", "x^4+y^4+z^4+x^2*y^2*z^2", "x^6+y^5+z^4+x*y^2*z+x^2*y*z^2"}) {
    const NewtonPolyhedron np = newton_polyhedron(parse_polynomial(text));
    for (const auto& face : np.faces) {
      const FaceChart fc = face_chart(np, face);
      const PhiTable& big = p_alpha(fc.delta, fc.character);
      const PhiTable& small = p_alpha(fc.gamma, Character::trivial(face.dim));
      CHECK(big.phi(kOne, 0) == 0);
      for (int j = 0; j <= face.dim + 1; ++j) CHECK(big.phi(kOne, j + 1) == small.phi(kOne, j));
    }
  }
}

TEST_CASE("conjugate characters swap the buckets") {
  const FaceChart fc = chart_of("x^2 + y^3", {{0, 3}, {2, 0}});
  const PhiTable& a = p_alpha(fc.delta, fc.character);
  const PhiTable& b = p_alpha(fc.delta, fc.character.conjugate());
  for (const auto& [alpha, coeffs] : a.coefficients) CHECK(b.coefficients.at(alpha.inverse()) == coeffs);
}

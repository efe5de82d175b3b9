#include <doctest.h>

#include <algorithm>

#include "milnor/errors.hpp"
#include "milnor/newton.hpp"

using namespace milnor;

namespace {

NewtonPolyhedron np_of(const char* text) { return newton_polyhedron(parse_polynomial(text)); }

const CompactFace& face_with(const NewtonPolyhedron& np, const std::vector<ExponentVector>& vertices) {
  for (const auto& f : np.faces)
    if (f.vertices == vertices) return f;
  FAIL("no such face");
  return np.faces.front();
}

}  // namespace

TEST_CASE("compact faces of the cusp") {
  const NewtonPolyhedron np = np_of("x^2 + y^3");
  CHECK(np.convenient);
  REQUIRE(np.faces.size() == 3);
  CHECK(np.faces[0].vertices == std::vector<ExponentVector>{{0, 3}});
  CHECK(np.faces[1].vertices == std::vector<ExponentVector>{{2, 0}});
  CHECK(np.faces[2].vertices == std::vector<ExponentVector>{{0, 3}, {2, 0}});
  CHECK(np.faces[2].subfaces == std::vector<int>{0, 1});
  CHECK(np.faces[2].interior_touching);
  CHECK_FALSE(np.faces[0].interior_touching);
  CHECK(np.faces[2].d == 6);
  CHECK(np.faces[2].m == 0);
}

TEST_CASE("non-convenient supports are rejected naming the axis") {
  try {
    newton_polyhedron(make_support({"x", "y"}, {{2, 0}}));
    FAIL("accepted a non-convenient support");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("y-axis") != std::string::npos);
  }
  CHECK_THROWS_AS(newton_polyhedron(make_support({"x", "y"}, {{0, 0}, {2, 0}, {0, 2}})), InputError);
  CHECK_THROWS_AS(np_of("x^2*y + y^3"), InputError);
}

TEST_CASE("interior vertex of x^5 + x^2 y^2 + y^5") {
  const NewtonPolyhedron np = np_of("x^5 + x^2*y^2 + y^5");
  CHECK(np.faces.size() == 5);
  const CompactFace& v = face_with(np, {{2, 2}});
  CHECK(v.interior_touching);
  CHECK(v.d == 2);
  CHECK(v.m == 1);
  CHECK(v.S == std::vector<int>{0, 1});
  const CompactFace& e = face_with(np, {{0, 5}, {2, 2}});
  CHECK(e.d == 10);
  CHECK(e.m == 0);
}

TEST_CASE("face charts") {
  const NewtonPolyhedron cusp = np_of("x^2 + y^3");
  const FaceChart edge = face_chart(cusp, cusp.faces[2]);
  CHECK(edge.d == 6);
  CHECK(edge.height({1, 1}) == 1);
  CHECK(edge.height({0, 0}) == 6);
  CHECK(edge.height({2, 0}) == 0);
  CHECK(edge.height({0, 3}) == 0);
  CHECK(edge.delta.dim() == 2);
  CHECK(edge.gamma.dim() == 1);

  const NewtonPolyhedron np = np_of("x^5 + x^2*y^2 + y^5");
  const FaceChart v = face_chart(np, face_with(np, {{2, 2}}));
  CHECK(v.cone_chart.dim() == 1);
  CHECK(v.d == 2);
  for (Int j = 0; j <= 3; ++j) CHECK(v.height({j, j}) == 2 - j);

  const CompactFace& axis = face_with(np, {{5, 0}});
  const FaceChart a = face_chart(np, axis);
  CHECK(a.d == 5);
  CHECK(axis.S == std::vector<int>{0});
  CHECK(axis.m == 0);

  const NewtonPolyhedron sq = np_of("x^2 + y^2");
  const CompactFace& x2 = face_with(sq, {{2, 0}});
  CHECK(x2.d == 2);
  CHECK(x2.S == std::vector<int>{0});
  CHECK(x2.m == 0);
}

TEST_CASE("heights are primitive and vanish exactly on the face") {
  for (const char* text : {"x^2 + y^3", "x^5 + x^2*y^2 + y^5", "x^4+y^4+z^4+x^2*y^2*z^2", "x^6+y^4+z^3+x*y*z",
                           "x^3*y + y^3*z + z^3*x + x^5 + y^5 + z^5"}) {
    const NewtonPolyhedron np = np_of(text);
    for (const auto& face : np.faces) {
      const FaceChart fc = face_chart(np, face);
      CHECK(gcd_of(fc.ell) == 1);
      CHECK(fc.height(IVec(np.n(), 0)) == fc.d);
      for (const auto& v : face.vertices) CHECK(fc.height(v) == 0);
      if (face.dim == np.n() - 1)
        for (const auto& p : np.support.points) CHECK(fc.height(p) <= 0);
    }
  }
}

TEST_CASE("the Newton boundary is a ball and the face poset is closed") {
  for (const char* text : {"x^2 + y^3", "x^4+y^4+z^4+x^2*y^2*z^2", "x^7+y^7+z^7+x^2*y^2*z^2", "x^5+y^5+z^5+x^2*y*z+x*y^3",
                           "x^3+y^3+z^3+w^3+x*y*z*w"}) {
    const NewtonPolyhedron np = np_of(text);
    int euler = 0;
    for (const auto& f : np.faces) {
      euler += f.dim % 2 == 0 ? 1 : -1;
      CHECK(f.m >= 0);
      CHECK(f.m == static_cast<int>(f.S.size()) - f.dim - 1);
      CHECK(f.d >= 1);
      for (int g : f.subfaces)
        CHECK(std::includes(f.vertices.begin(), f.vertices.end(), np.faces[g].vertices.begin(),
                            np.faces[g].vertices.end()));
      for (const auto& g : np.faces) {
        if (g.id == f.id) continue;
        std::vector<ExponentVector> meet;
        std::set_intersection(f.vertices.begin(), f.vertices.end(), g.vertices.begin(), g.vertices.end(),
                              std::back_inserter(meet));
        if (meet.empty()) continue;
        const bool present = std::any_of(np.faces.begin(), np.faces.end(), [&](const CompactFace& h) { return h.vertices == meet; });
        CHECK(present);
      }
    }
    CHECK(euler == 1);
  }
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "aniso/errors.hpp"
#include "aniso/families.hpp"
#include "aniso/geometry.hpp"
#include "oracles.hpp"

using namespace aniso;
using doctest::Approx;

TEST_SUITE("geometry") {

TEST_CASE("triangle measure, edges and circumradius against Heron") {
  const Simplex t = make_triangle(0.3, -0.2, 1.7, 0.4, 0.1, 2.2);
  const auto ed = edge_data(t);
  REQUIRE(ed.lengths.size() == 3);
  const double a = ed.lengths[0], b = ed.lengths[1], c = ed.lengths[2];
  CHECK(measure(t) == Approx(oracle::heron(a, b, c)).epsilon(1e-13));
  CHECK(circumradius(t) == Approx(oracle::triangle_circumradius(a, b, c)).epsilon(1e-13));
  CHECK(diameter(t) == c);
  CHECK(ed.min_edge() == a);
}

TEST_CASE("tetrahedron measure against Cayley-Menger") {
  const Simplex t = make_tetrahedron({{{0, 0, 0}, {1.2, 0.1, 0}, {0.3, 0.9, 0.2}, {0.1, 0.4, 1.3}}});
  auto d = [&](int i, int j) { return (t.vertex(i) - t.vertex(j)).norm(); };
  CHECK(measure(t) == Approx(oracle::tet_volume(d(0, 1), d(0, 2), d(0, 3), d(1, 2), d(1, 3), d(2, 3))).epsilon(1e-12));
}

TEST_CASE("sliver edges and volume") {
  for (double s : {1.0 / 32, 1.0 / 128}) {
    const Simplex t = sliver(s, 1.5, 1.0);
    const auto o = oracle::sliver(s, 1.5, 1.0);
    const auto ed = edge_data(t);
    CHECK(measure(t) == Approx(o.volume).epsilon(1e-12));
    CHECK(ed.min_edge() == Approx(o.L1).epsilon(1e-14));
    CHECK(ed.h_T() == Approx(o.L6).epsilon(1e-14));
  }
}

TEST_CASE("right triangle angles and radii") {
  const Simplex t = make_triangle(0, 0, 3, 0, 0, 4);
  const auto a = angles(t);
  CHECK(a.interior[0] == Approx(std::numbers::pi / 2));
  CHECK(a.max_angle() == Approx(std::numbers::pi / 2));
  CHECK(a.interior[0] + a.interior[1] + a.interior[2] == Approx(std::numbers::pi));
  CHECK(circumradius(t) == Approx(2.5));
  CHECK(inradius(t) == Approx(1.0));
}

TEST_CASE("regular tetrahedron dihedral and face angles") {
  const Simplex t = make_tetrahedron({{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}});
  const auto a = angles(t);
  REQUIRE(a.dihedral.size() == 6);
  REQUIRE(a.face.size() == 12);
  for (const auto& dh : a.dihedral) CHECK(dh.angle == Approx(std::acos(1.0 / 3.0)));
  for (const auto& f : a.face) CHECK(f.angle == Approx(std::numbers::pi / 3));
  CHECK(circumradius(t) == Approx(std::sqrt(3.0)));
  CHECK(inradius(t) == Approx(1.0 / std::sqrt(3.0)));
}

TEST_CASE("facets and outward normals") {
  const Simplex t = make_tetrahedron({{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  double flux = 0.0;
  for (int i = 0; i < 4; ++i) {
    const Vec n = outward_normal(t, i);
    CHECK(n.norm() == Approx(1.0));
    // pointing away from the opposite vertex
    CHECK(n.dot(t.vertex(i) - facet_vertices(t, i)[0]) < 0);
    flux += facet_measure(t, i) * n.sum();
  }
  // sum |F_i| n_i = 0 for a closed surface
  CHECK(flux == Approx(0.0).scale(1.0));
  CHECK(facet_measure(t, 0) == Approx(std::sqrt(3.0) / 2));
}

TEST_CASE("relabeling keeps measure and edges") {
  const Simplex t = make_tetrahedron({{{0, 0, 0}, {2, 0.1, 0}, {0.3, 0.7, 0.2}, {0.1, 0.4, 0.5}}});
  const std::vector<int> order{2, 0, 3, 1};
  const Simplex r = t.relabeled(order);
  CHECK(r.vertex(0) == t.vertex(2));
  CHECK(measure(r) == Approx(measure(t)));
  CHECK(edge_data(r).lengths == edge_data(t).lengths);
}

TEST_CASE("degenerate and malformed input is rejected") {
  CHECK_THROWS_AS(make_triangle(0, 0, 1, 1, 2, 2), DegenerateSimplex);
  CHECK_THROWS_AS(make_tetrahedron({{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}}), DegenerateSimplex);
  CHECK_THROWS_AS(Simplex({Vec::Zero(2), Vec::Ones(2)}), Error);
  CHECK_THROWS_AS(Simplex({Vec::Zero(2), Vec::Ones(3), Vec::Zero(2)}), Error);
}

TEST_CASE("simplex_measure of lower-dimensional pieces") {
  const std::vector<Vec> seg{Vec::Zero(3), Vec::Ones(3)};
  CHECK(simplex_measure(seg) == Approx(std::sqrt(3.0)));
  const std::vector<Vec> pt{Vec::Ones(2)};
  CHECK(simplex_measure(pt) == 1.0);
}
}

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "aniso/errors.hpp"
#include "aniso/format.hpp"
#include "aniso/meshes.hpp"

#ifndef ANISO_TEST_DATA
#define ANISO_TEST_DATA "tests/data"
#endif

using namespace aniso;
using doctest::Approx;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Mesh parse(const std::string& text) {
  std::istringstream in(text);
  return read_mesh(in);
}

}  // namespace

TEST_SUITE("meshes") {

TEST_CASE("family names") {
  CHECK(parse_family("iv") == Family::IV);
  CHECK(parse_family("6") == Family::VI);
  CHECK_THROWS_AS(parse_family("VII"), std::invalid_argument);
  CHECK(parse_diagonal_rule(to_string(DiagonalRule::Staggered)) == DiagonalRule::Staggered);
}

TEST_CASE("grid coordinates") {
  const auto x = grid_coordinates(Family::II, 8, 1);
  const double tau = 2.0 / 128 * std::log(8.0);
  CHECK(x[4] == Approx(tau));
  CHECK(x[2] == Approx(tau / 2));
  CHECK(x[8] == Approx(1.0));
  const auto c = grid_coordinates(Family::III, 4, 0);
  CHECK(c[1] == Approx(0.5 * (1 - std::cos(std::acos(-1.0) / 4))));
  CHECK(grid_coordinates(Family::IV, 4, 1)[1] == Approx(1.0 / 16));
  CHECK(grid_coordinates(Family::IV, 4, 0)[1] == Approx(0.25));
}

TEST_CASE("generator counts and coverage") {
  for (Family f : {Family::I, Family::II, Family::III, Family::IV}) {
    const Mesh m = generate(f, 8);
    CHECK(m.vertices.size() == 81u);
    CHECK(m.cells.size() == 128u);
    CHECK(total_measure(m) == Approx(1.0).epsilon(1e-13));
    CHECK(conformity_check(m).conformal());
  }
  for (Family f : {Family::V, Family::VI}) {
    const Mesh m = generate(f, 8);
    CHECK(total_measure(m) == Approx(1.0).epsilon(1e-13));
    CHECK(conformity_check(m).conformal());
  }
  CHECK_THROWS_AS(generate(Family::I, 1), InvalidN);
  CHECK_THROWS_AS(generate(Family::II, 7), InvalidN);
}

TEST_CASE("golden file for family I, N = 4") {
  std::ostringstream out;
  write_mesh(generate(Family::I, 4), out);
  CHECK(out.str() == slurp(std::string(ANISO_TEST_DATA) + "/family_I_N4.mesh"));
}

TEST_CASE("read/write round trip") {
  const Mesh m = generate(Family::III, 6);
  std::ostringstream out;
  write_mesh(m, out);
  const Mesh back = parse(out.str());
  REQUIRE(back.vertices.size() == m.vertices.size());
  for (std::size_t i = 0; i < m.vertices.size(); ++i) CHECK((back.vertices[i] - m.vertices[i]).norm() == 0.0);
  CHECK(back.cells == m.cells);
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("2 3\n") == 1);
  CHECK(line_of("2 3 1\n0 0\n1 x\n0 1\n0 1 2\n") == 3);
  CHECK(line_of("2 3 1\n0 0\n1 0\n0 1\n0 1 5\n") == 5);
  CHECK(line_of("2 3 1\n0 0\n1 0\n0 1\n0 1 2\nextra\n") == 6);
  CHECK(line_of("2 3 1\n0 0\n1 0\n") == 4);
}

TEST_CASE("conformity violations") {
  // hanging node: (0.5, 0) sits on the edge of the left triangle
  const Mesh hang = parse("2 5 3\n0 0\n1 0\n0 1\n0.5 0\n1 1\n0 1 2\n0 3 4\n3 1 4\n");
  const auto r = conformity_check(hang);
  CHECK(!r.conformal());
  bool saw_hanging = false;
  for (const auto& v : r.violations) saw_hanging |= v.kind == Violation::Kind::HangingNode;
  CHECK(saw_hanging);
  CHECK_THROWS_AS(quality(hang), NonConformal);

  const Mesh dup = parse("2 3 2\n0 0\n1 0\n0 1\n0 1 2\n2 0 1\n");
  CHECK(!conformity_check(dup).conformal());
  CHECK(conformity_check(dup).violations.front().kind == Violation::Kind::DuplicateCell);
  CHECK(!conformity_check(dup).violations.front().describe().empty());
}

TEST_CASE("quality metrics on small meshes") {
  const auto q = quality(generate(Family::I, 32), false);
  CHECK(table_style(q.min_angle_metric) == "4.00000");
  CHECK(table_style(q.max_angle_metric) == "2.00000");
  const auto q3 = quality(generate(Family::III, 32), false);
  CHECK(table_style(q3.min_angle_metric) == "4.08092e+01");
  const auto q6 = quality(generate(Family::VI, 32), false);
  CHECK(table_style(q6.max_angle_metric) == "1.60625e+01");
}

TEST_CASE("quality CSV") {
  const auto q = quality(generate(Family::I, 2));
  std::ostringstream out;
  write_quality_csv(q, out);
  const std::string s = out.str();
  CHECK(s.rfind("cell_id,h_T,H_T,H_T/h_T,max_angle,classification\n", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 9);
}
}

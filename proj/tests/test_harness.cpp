#include <doctest.h>

#include <cmath>
#include <sstream>

#include "aniso/families.hpp"
#include "aniso/format.hpp"
#include "aniso/harness.hpp"

using namespace aniso;
using doctest::Approx;

TEST_SUITE("harness") {

TEST_CASE("level validation") {
  CHECK_NOTHROW(validate_levels({64, 128, 256}));
  CHECK_THROWS_AS(validate_levels({}), std::invalid_argument);
  CHECK_THROWS_AS(validate_levels({100}), std::invalid_argument);
  CHECK_THROWS_AS(validate_levels({64, 256}), std::invalid_argument);
  CHECK_THROWS_AS(validate_levels({1}), std::invalid_argument);
}

TEST_CASE("builtin cases") {
  CHECK(builtin_names().size() == 6u);
  CHECK(builtin_cases().size() >= builtin_names().size());
  CHECK_THROWS_AS(builtin_case("nope"), std::invalid_argument);
  const auto c = builtin_case("p1bubble", 2.0);
  CHECK(c.kind == ElementKind::P1Bubble);
  CHECK(!c.reference.empty());
}

TEST_CASE("lag3d case I converges at rate 4") {
  const auto t = run_study(builtin_case("lag3d-I"), {64, 128, 256});
  REQUIRE(t.rows.size() == 3);
  CHECK(sig5(t.rows[0].err) == "2.4336e-08");
  CHECK(sig5(t.rows[1].err) == "1.5209e-09");
  CHECK(sig5(t.rows[2].err) == "9.5053e-11");
  CHECK(!t.rows[0].rate);
  CHECK(*t.rows[2].rate == Approx(4.0).epsilon(1e-3));
}

TEST_CASE("lag3d case II stagnates for eps = 6") {
  const auto t = run_study(builtin_case("lag3d-II", 6.0), {64, 128});
  CHECK(sig5(t.rows[0].err) == "1.0206e-01");
  CHECK(std::abs(*t.rows[1].rate) < 1e-3);
}

TEST_CASE("CSV layout") {
  const auto t = run_study(builtin_case("lag3d-II", 3.0), {64, 128});
  std::ostringstream out;
  write_csv(t, out);
  std::istringstream in(out.str());
  std::string header, row1, row2;
  std::getline(in, header);
  std::getline(in, row1);
  std::getline(in, row2);
  CHECK(header.rfind("N,s,Err,r,Err_full", 0) == 0);
  CHECK(row1.rfind("64,", 0) == 0);
  CHECK(row2.rfind("128,", 0) == 0);
}

TEST_CASE("inverse inequality ratios stay bounded") {
  const auto rows = inverse_inequality_check(named_family("dagger-good"), {16, 32, 64, 128});
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 0; i < 2; ++i) {
    const double first = rows.front().ratio[i], last = rows.back().ratio[i];
    CHECK(last < 4 * first);
    CHECK(last > 0);
  }
}

TEST_CASE("sliver row geometry") {
  const auto r = sliver_row(1.5, 1.0, 32);
  CHECK(r.s == Approx(1.0 / 32));
  CHECK(r.H_over_h > 0);
  CHECK(sig5(r.h3_over_vol) == "6.7882e+01");
}
}

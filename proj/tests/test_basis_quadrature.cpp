#include <doctest.h>

#include <cmath>
#include <random>

#include "aniso/basis.hpp"
#include "aniso/checks.hpp"
#include "aniso/errors.hpp"
#include "aniso/interpolation.hpp"
#include "aniso/polynomial.hpp"
#include "aniso/quadrature.hpp"
#include "oracles.hpp"

using namespace aniso;
using doctest::Approx;

namespace {

const Simplex ref2 = make_triangle(0, 0, 1, 0, 0, 1);
const Simplex ref3 = make_tetrahedron({{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});

double max_identity_error(const Mat& D) { return (D - Mat::Identity(D.rows(), D.cols())).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_SUITE("basis") {

TEST_CASE("polynomial space dimension and ordering") {
  CHECK(dim_polynomials(2, 2) == 6);
  CHECK(dim_polynomials(3, 2) == 10);
  CHECK(monomials(3, 2).size() == 10u);
  const auto& m = monomials(2, 2);
  CHECK(m[0] == MultiIndex{0, 0, 0});
  CHECK(m[1] == MultiIndex{1, 0, 0});
  CHECK(m[3] == MultiIndex{2, 0, 0});
  CHECK(multi_indices(3, 2).size() == 6u);
}

TEST_CASE("polynomial arithmetic and derivatives") {
  const auto p = Polynomial::from_terms(2, {{{2, 0, 0}, 2.0}, {{1, 1, 0}, -1.0}, {{0, 2, 0}, 3.0}});
  const Vec x = Eigen::Vector2d(0.3, -0.7);
  CHECK(p(x) == Approx(2 * 0.09 + 0.21 + 3 * 0.49));
  CHECK(p.derivative_at(x, {1, 0, 0}) == Approx(4 * 0.3 + 0.7));
  CHECK(p.derivative_at(x, {1, 1, 0}) == Approx(-1.0));
  CHECK(p.derivative_at(x, {3, 0, 0}) == 0.0);
  const auto q = p * p;
  CHECK(q.degree() == 4);
  CHECK(q(x) == Approx(p(x) * p(x)));
  CHECK(p.derivative({0, 1, 0})(x) == Approx(p.derivative_at(x, {0, 1, 0})));
}

TEST_CASE("barycentric coordinates") {
  std::mt19937 rng(1);
  for (int d = 2; d <= 3; ++d) {
    const Simplex t = random_simplex(rng, d);
    Vec c = Vec::Zero(d);
    for (int i = 0; i <= d; ++i) c += t.vertex(i) / (d + 1);
    CHECK(barycentric(t, c).isApprox(Vec::Constant(d + 1, 1.0 / (d + 1)), 1e-12));
    for (int i = 0; i <= d; ++i) {
      const Vec l = barycentric(t, t.vertex(i));
      for (int j = 0; j <= d; ++j) CHECK(l[j] == Approx(i == j ? 1.0 : 0.0).scale(1.0));
    }
    // exterior point, against a direct solve of [1; p] lambda = [1; x]
    const Vec x = t.vertex(0) + 2.0 * (t.vertex(1) - t.vertex(0)) - (t.vertex(2) - t.vertex(0));
    Mat M(d + 1, d + 1);
    Vec rhs(d + 1);
    for (int j = 0; j <= d; ++j) {
      M(0, j) = 1;
      M.block(1, j, d, 1) = t.vertex(j);
    }
    rhs << 1, x;
    const Vec oracle_l = M.fullPivLu().solve(rhs);
    const Vec l = barycentric(t, x);
    CHECK(l.sum() == Approx(1.0));
    CHECK(l.minCoeff() < 0);
    CHECK((l - oracle_l).norm() < 1e-10);
    const auto bp = barycentric_polynomials(t);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int n = 0; n < 100; ++n) {
      Vec y(d);
      for (int i = 0; i < d; ++i) y[i] = u(rng);
      double sum = 0;
      for (const auto& p : bp) sum += p(y - t.vertex(0));
      CHECK(sum == Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("basis sizes") {
  CHECK(lagrange_basis(ref2, 1).size() == 3);
  CHECK(lagrange_basis(ref2, 2).size() == 6);
  CHECK(lagrange_basis(ref3, 2).size() == 10);
  CHECK(p1bubble_basis(ref2).size() == 4);
  CHECK(cr_basis(ref3).size() == 4);
  CHECK(morley_basis(ref2).size() == 6);
  CHECK(morley_basis(ref3).size() == 10);
  CHECK(rt0_basis(ref2).size() == 3);
  CHECK(rt0_basis(ref3).size() == 4);
  CHECK_THROWS_AS(lagrange_basis(ref2, 3), UnsupportedDegree);
  CHECK_THROWS_AS(p1bubble_basis(ref3), WrongDimension);
  CHECK_THROWS_AS(parse_kind("hermite"), UnsupportedKind);
  CHECK(parse_kind(to_string(ElementKind::Morley)) == ElementKind::Morley);
}

TEST_CASE("bubble basis values") {
  const auto b = p1bubble_basis(ref2);
  const Vec c = Eigen::Vector2d(1.0 / 3, 1.0 / 3);
  CHECK(b.value(3, c) == Approx(1.0));
  for (int i = 0; i < 3; ++i) {
    CHECK(b.value(i, c) == Approx(0.0).scale(1.0));
    for (int j = 0; j < 3; ++j) CHECK(b.value(i, ref2.vertex(j)) == Approx(i == j ? 1.0 : 0.0).scale(1.0));
  }
}

TEST_CASE("CR basis is 1 - 2 lambda_i in 2D") {
  const auto b = cr_basis(ref2);
  const auto l = barycentric_polynomials(ref2);
  const Vec x = Eigen::Vector2d(0.2, 0.3);
  for (int i = 0; i < 3; ++i) CHECK(b.value(i, x) == Approx(1 - 2 * l[static_cast<std::size_t>(i)](x)));
  // nodal CR shares the functions: value at the facet barycenter
  for (int i = 0; i < 3; ++i) {
    const auto f = facet_vertices(ref2, i);
    const Vec m = (f[0] + f[1]) / 2;
    for (int j = 0; j < 3; ++j) CHECK(b.value(j, m) == Approx(i == j ? 1.0 : 0.0).scale(1.0));
  }
}

TEST_CASE("RT0 on the reference simplex") {
  for (const Simplex* t : {&ref2, &ref3}) {
    const auto b = rt0_basis(*t);
    const int d = t->dim();
    for (int i = 0; i <= d; ++i) {
      const auto f = b.vector_field(i);
      CHECK(f.divergence(Vec::Constant(d, 0.1)) == Approx(b.iota[static_cast<std::size_t>(i)] / measure(*t)));
      CHECK(apply(b.dofs[static_cast<std::size_t>(i)], f) == Approx(1.0));
    }
  }
}

TEST_CASE("duality matrices are the identity") {
  std::mt19937 rng(2);
  for (int n = 0; n < 20; ++n)
    for (int d = 2; d <= 3; ++d) {
      const Simplex t = random_simplex(rng, d);
      for (ElementKind k : {ElementKind::P0, ElementKind::Lagrange1, ElementKind::Lagrange2, ElementKind::CR,
                            ElementKind::NodalCR, ElementKind::Morley, ElementKind::RT0}) {
        CAPTURE(to_string(k));
        CHECK(max_identity_error(duality_matrix(make_basis(k, t))) < 1e-9);
      }
      if (d == 2) CHECK(max_identity_error(duality_matrix(p1bubble_basis(t))) < 1e-9);
    }
}

TEST_CASE("interpolation of constants") {
  const auto one = polynomial_field(Polynomial::constant(2, 1.0));
  const Vec x = Eigen::Vector2d(0.25, 0.5);
  for (ElementKind k : {ElementKind::Lagrange1, ElementKind::P1Bubble, ElementKind::CR, ElementKind::NodalCR})
    CHECK(interpolate(k, ref2, one)(x) == Approx(1.0));
}
}

TEST_SUITE("quadrature") {

TEST_CASE("weights sum to one") {
  for (int k = 1; k <= 3; ++k)
    for (int deg = 0; deg <= 12; ++deg) CHECK(gauss_rule(k, deg).weights.sum() == Approx(1.0).epsilon(1e-14));
  CHECK(vertex_rule(2).weights.sum() == Approx(1.0));
  CHECK(edge_midpoint_rule().size() == 3);
}

TEST_CASE("moments on the reference triangle and tetrahedron") {
  for (int deg = 1; deg <= 10; ++deg) {
    const auto& r2 = gauss_rule(2, deg);
    const auto& r3 = gauss_rule(3, deg);
    for (int a = 0; a <= deg; ++a)
      for (int b = 0; a + b <= deg; ++b) {
        const double I2 = integrate(ref2, [&](const Vec& x) { return std::pow(x[0], a) * std::pow(x[1], b); }, r2);
        CHECK(I2 == Approx(oracle::reference_moment(a, b)).epsilon(1e-13));
        for (int c = 0; a + b + c <= deg; ++c) {
          const double I3 = integrate(
              ref3, [&](const Vec& x) { return std::pow(x[0], a) * std::pow(x[1], b) * std::pow(x[2], c); }, r3);
          CHECK(I3 == Approx(oracle::reference_moment(a, b, c)).epsilon(1e-13));
        }
      }
  }
}

TEST_CASE("edge-midpoint rule is exact to degree 2 and not 3") {
  const auto& r = edge_midpoint_rule();
  CHECK(integrate(ref2, [](const Vec& x) { return x[0] * x[1]; }, r) == Approx(oracle::reference_moment(1, 1)));
  CHECK(integrate(ref2, [](const Vec& x) { return x[0] * x[0]; }, r) == Approx(oracle::reference_moment(2, 0)));
  CHECK(integrate(ref2, [](const Vec& x) { return x[0] * x[0] * x[0]; }, r) !=
        Approx(oracle::reference_moment(3, 0)));
}

TEST_CASE("gauss legendre on [0,1]") {
  std::vector<double> x, w;
  gauss_legendre(5, x, w);
  double s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], 9);
  CHECK(s == Approx(0.1).epsilon(1e-14));
}

TEST_CASE("default degrees") {
  CHECK(default_degree(2) >= 2);
  CHECK(default_rule(2).degree == default_degree(2));
}
}

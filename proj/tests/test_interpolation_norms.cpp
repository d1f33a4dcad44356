#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "aniso/checks.hpp"
#include "aniso/errors.hpp"
#include "aniso/families.hpp"
#include "aniso/harness.hpp"
#include "aniso/interpolation.hpp"
#include "aniso/norms.hpp"
#include "aniso/standardization.hpp"

using namespace aniso;
using doctest::Approx;

namespace {

const Simplex ref2 = make_triangle(0, 0, 1, 0, 0, 1);

Polynomial random_polynomial(std::mt19937& rng, int d, int k) {
  std::uniform_real_distribution<double> u(-1, 1);
  Polynomial p(d, k);
  for (auto& c : p.coefficients()) c = u(rng);
  return p;
}

VectorField random_vector_field(std::mt19937& rng, int d, int k) {
  std::vector<ScalarField> c;
  for (int i = 0; i < d; ++i) c.push_back(polynomial_field(random_polynomial(rng, d, k)));
  return VectorField(c);
}

}  // namespace

TEST_SUITE("interpolation") {

TEST_CASE("Lagrange P1 of x^2 + y^2 on the right-angled family") {
  const double s = 1.0 / 16, eps = 2.5;
  const Simplex t = right_angled(s, eps);
  const auto phi = polynomial_field(Polynomial::from_terms(2, {{{2, 0, 0}, 1.0}, {{0, 2, 0}, 1.0}}));
  const auto I = interpolate(ElementKind::Lagrange1, t, phi);
  for (Vec x : {Vec(Eigen::Vector2d(0.01, 0.001)), Vec(Eigen::Vector2d(0.03, 0.0005))})
    CHECK(I(x) == Approx(s * x[0] + std::pow(s, eps) * x[1]).epsilon(1e-12));
}

TEST_CASE("polynomial reproduction") {
  std::mt19937 rng(3);
  struct Case {
    ElementKind kind;
    int degree;
  };
  for (int d = 2; d <= 3; ++d) {
    const Simplex t = random_simplex(rng, d);
    const Vec x = (t.vertex(0) + t.vertex(1) + t.vertex(d)) / 3;
    for (Case c : {Case{ElementKind::P0, 0}, Case{ElementKind::Lagrange1, 1}, Case{ElementKind::Lagrange2, 2},
                   Case{ElementKind::CR, 1}, Case{ElementKind::NodalCR, 1}, Case{ElementKind::Morley, 2}}) {
      const auto f = polynomial_field(random_polynomial(rng, d, c.degree));
      const auto I = interpolate(c.kind, t, f);
      CAPTURE(to_string(c.kind));
      CHECK(I(x) == Approx(f(x)).epsilon(1e-9));
      CHECK(I.derivative(x, {1, 0, 0}) == Approx(f.derivative(x, {1, 0, 0})).epsilon(1e-8));
    }
  }
}

TEST_CASE("CR preserves face means") {
  std::mt19937 rng(4);
  const Simplex t = random_simplex(rng, 2);
  const auto f = polynomial_field(random_polynomial(rng, 2, 2));
  const auto I = interpolate(ElementKind::CR, t, f);
  for (int i = 0; i < 3; ++i) {
    const auto fv = facet_vertices(t, i);
    const auto& r = gauss_rule(1, 4);
    CHECK(integrate(fv, [&](const Vec& x) { return I(x); }, r) == Approx(integrate(fv, f, r)).epsilon(1e-12));
  }
}

TEST_CASE("L2 projections") {
  std::mt19937 rng(5);
  const Simplex t = random_simplex(rng, 3);
  const auto c = polynomial_field(Polynomial::constant(3, 2.5));
  CHECK(l2_project(t, c, 0)(t.vertex(1)) == Approx(2.5));
  const auto lin = polynomial_field(random_polynomial(rng, 3, 1));
  const auto P = l2_project(t, lin, 1);
  CHECK(P(t.vertex(2)) == Approx(lin(t.vertex(2))).epsilon(1e-10));
  const auto quad = polynomial_field(random_polynomial(rng, 3, 2));
  const auto Q = l2_project(t, quad, 1);
  for (const auto& l : barycentric_polynomials(t)) {
    const Vec o = t.vertex(0);
    const double r = integrate(t, [&](const Vec& x) { return (Q(x) - quad(x)) * l(x - o); });
    CHECK(std::abs(r) < 1e-12 * measure(t) * 10);
  }
}

TEST_CASE("Poincare bound for the mean") {
  std::mt19937 rng(6);
  for (int n = 0; n < 100; ++n) {
    const int d = 2 + n % 2;
    const Simplex t = random_simplex(rng, d);
    const auto f = polynomial_field(random_polynomial(rng, d, 2));
    const auto P = l2_project(t, f, 0);
    const double lhs = lp_norm(t, [&](const Vec& x) { return P(x) - f(x); }, 2.0);
    const double rhs = diameter(t) / std::numbers::pi * seminorm(t, f, h_seminorm(1));
    CHECK(lhs <= rhs * (1 + 1e-12));
  }
}

TEST_CASE("RT0 interpolation of (0, y^2) on the reference triangle") {
  const VectorField v({polynomial_field(Polynomial::constant(2, 0.0)),
                       polynomial_field(Polynomial::from_terms(2, {{{0, 2, 0}, 1.0}}))});
  const auto I = rt0_interpolate(ref2, v);
  for (Vec x : {Vec(Eigen::Vector2d(0.2, 0.3)), Vec(Eigen::Vector2d(0.7, 0.1))})
    CHECK((I.vector_value(x) - x / 3).norm() < 1e-14);
}

TEST_CASE("commuting residuals") {
  std::mt19937 rng(7);
  for (int n = 0; n < 10; ++n) {
    const int d = 2 + n % 2;
    const Simplex t = random_simplex(rng, d);
    CHECK(commuting_residual(ElementKind::CR, t, polynomial_field(random_polynomial(rng, d, 3))) < 1e-8);
    CHECK(commuting_residual(t, random_vector_field(rng, d, 2)) < 1e-8);
    if (d == 2) CHECK(commuting_residual(ElementKind::Morley, t, polynomial_field(random_polynomial(rng, 2, 4))) < 1e-8);
  }
}

TEST_CASE("Piola transform") {
  std::mt19937 rng(8);
  for (int d = 2; d <= 3; ++d) {
    const Simplex t = random_simplex(rng, d);
    const auto F = factorize(standardize(t));
    const auto v_ref = random_vector_field(rng, d, 2);
    const auto v = piola_push(F, v_ref);
    const auto phi_ref = polynomial_field(random_polynomial(rng, d, 2));
    const auto phi = push_scalar(F, phi_ref);
    const Mat A = F.matrix();
    const double sgn = A.determinant() > 0 ? 1.0 : -1.0;
    const auto ref = reference_vertices(d, standardize(t).type);
    const Simplex T_hat(ref);
    const double lhs = integrate(t, [&](const Vec& x) { return v.divergence(x) * phi(x); });
    const double rhs = integrate(T_hat, [&](const Vec& x) { return v_ref.divergence(x) * phi_ref(x); });
    CHECK(lhs == Approx(sgn * rhs).epsilon(1e-9));
    // Jacobian against the chain rule
    const Vec xh = Vec::Constant(d, 0.2);
    const Vec x = F.map(xh);
    const Mat J = v.jacobian(x);
    const Mat Jexp = A * v_ref.jacobian(xh) * A.inverse() / A.determinant();
    CHECK((J - Jexp).norm() < 1e-8 * Jexp.norm());
  }
  // identity map leaves the field alone
  AffineFactorization I{Mat::Identity(2, 2), Mat::Identity(2, 2), Mat::Identity(2, 2), Vec::Zero(2)};
  const auto w = random_vector_field(rng, 2, 1);
  const Vec y = Eigen::Vector2d(0.3, 0.4);
  CHECK((piola_push(I, w)(y) - w(y)).norm() < 1e-15);
}

TEST_CASE("Lagrange L-infinity ratio is 1/8 on right-angled elements") {
  const auto phi = polynomial_field(Polynomial::from_terms(2, {{{2, 0, 0}, 1.0}, {{0, 2, 0}, 1.0}}));
  for (double eps : {1.5, 2.0, 3.0})
    for (int k = 5; k <= 10; ++k) CHECK(lagrange_linf_ratio(right_angled(std::ldexp(1.0, -k), eps), phi) ==
                                        Approx(0.125).epsilon(1e-9));
}
}

TEST_SUITE("norms") {

TEST_CASE("seminorm conventions") {
  // xy: Hessian [[0,1],[1,0]]; tensor counts the mixed term twice
  const auto f = polynomial_field(Polynomial::from_terms(2, {{{1, 1, 0}, 1.0}}));
  const double area = measure(ref2);
  CHECK(seminorm(ref2, f, h_seminorm(2, Convention::Tensor)) == Approx(std::sqrt(2 * area)));
  CHECK(seminorm(ref2, f, h_seminorm(2, Convention::MultiIndex)) == Approx(std::sqrt(area)));
}

TEST_CASE("Lp norms of constants and sup norm") {
  const auto f = [](const Vec&) { return 3.0; };
  CHECK(lp_norm(ref2, f, 2.0) == Approx(3.0 * std::sqrt(0.5)));
  CHECK(lp_norm(ref2, f, 1.0) == Approx(1.5));
  CHECK(lp_norm(ref2, [](const Vec& x) { return x[0] - x[1]; }, kInfinity) == Approx(1.0));
  CHECK(!sup_sample_points(ref2).empty());
}

TEST_CASE("directional seminorm equals Cartesian for the axis frame") {
  const auto f = polynomial_field(Polynomial::from_terms(2, {{{2, 0, 0}, 2.0}, {{1, 1, 0}, -1.0}, {{0, 2, 0}, 3.0}}));
  SeminormSpec dir = h_seminorm(2);
  dir.frame = Frame::Directional;
  dir.directions = {Eigen::Vector2d(1, 0), Eigen::Vector2d(0, 1)};
  CHECK(seminorm(ref2, f, dir) == Approx(seminorm(ref2, f, h_seminorm(2))));
}

TEST_CASE("missing derivatives raise") {
  const ScalarField f(2, 1, [](const Vec& x, const MultiIndex& a) { return order(a) == 0 ? x[0] : 1.0; });
  CHECK_THROWS_AS(seminorm(ref2, f, h_seminorm(2)), MissingDerivative);
}

TEST_CASE("field derivatives agree with finite differences") {
  const auto w = plane_wave(0.7, Eigen::Vector2d(1.3, -2.1), 0.4);
  const Vec x = Eigen::Vector2d(0.2, 0.6);
  const double h = 1e-5;
  const double fd = (w(x + Vec(Eigen::Vector2d(h, 0))) - w(x - Vec(Eigen::Vector2d(h, 0)))) / (2 * h);
  CHECK(w.derivative(x, {1, 0, 0}) == Approx(fd).epsilon(1e-4));
}
}

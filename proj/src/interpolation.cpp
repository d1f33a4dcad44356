#include "aniso/interpolation.hpp"

#include <cmath>

#include "aniso/errors.hpp"
#include "aniso/norms.hpp"
#include "aniso/quadrature.hpp"

namespace aniso {

namespace {

MultiIndex unit(int j) {
  MultiIndex a{0, 0, 0};
  a[static_cast<std::size_t>(j)] = 1;
  return a;
}

MultiIndex plus(MultiIndex a, const MultiIndex& b) {
  for (std::size_t i = 0; i < 3; ++i) a[i] += b[i];
  return a;
}

// d^b f as a field of its own.
ScalarField derived(const ScalarField& f, const MultiIndex& b) {
  if (order(b) > f.max_order()) throw MissingDerivative("field lacks the derivatives needed here");
  return ScalarField(f.dim(), f.max_order() - order(b),
                     [f, b](const Vec& x, const MultiIndex& a) { return f.derivative(x, plus(a, b)); });
}

double l2_distance(const Simplex& t, const ScalarFn& a, const ScalarFn& b) {
  return lp_norm(t, [&](const Vec& x) { return a(x) - b(x); }, 2.0);
}

}  // namespace

Interpolant::Interpolant(ShapeBasis basis, Eigen::VectorXd coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != basis_.size()) throw UnsupportedKind("coefficient count does not match dof count");
}

double Interpolant::derivative(const Vec& x, const MultiIndex& a) const {
  if (basis_.vector_valued()) throw UnsupportedKind("scalar evaluation of a vector interpolant");
  double v = 0.0;
  for (int i = 0; i < basis_.size(); ++i) v += coeffs_(i) * basis_.derivative(i, x, a);
  return v;
}

Vec Interpolant::vector_value(const Vec& x) const {
  if (!basis_.vector_valued()) throw UnsupportedKind("vector evaluation of a scalar interpolant");
  Vec v = Vec::Zero(basis_.simplex.dim());
  for (int i = 0; i < basis_.size(); ++i) v += coeffs_(i) * basis_.vector_value(i, x);
  return v;
}

Mat Interpolant::jacobian(const Vec& x) const {
  const int d = basis_.simplex.dim();
  Mat j = Mat::Zero(d, d);
  for (int i = 0; i < basis_.size(); ++i)
    for (int c = 0; c < d; ++c)
      for (int k = 0; k < d; ++k) j(c, k) += coeffs_(i) * basis_.vector_derivative(i, c, x, unit(k));
  return j;
}

double Interpolant::divergence(const Vec& x) const { return jacobian(x).trace(); }

ScalarField Interpolant::field() const {
  return ScalarField(basis_.simplex.dim(), 64,
                     [self = *this](const Vec& x, const MultiIndex& a) { return self.derivative(x, a); });
}

VectorField Interpolant::vector_field() const {
  std::vector<ScalarField> comps;
  for (int c = 0; c < basis_.simplex.dim(); ++c)
    comps.emplace_back(basis_.simplex.dim(), 64, [self = *this, c](const Vec& x, const MultiIndex& a) {
      double v = 0.0;
      for (int i = 0; i < self.basis_.size(); ++i)
        v += self.coeffs_(i) * self.basis_.vector_derivative(i, c, x, a);
      return v;
    });
  return VectorField(std::move(comps));
}

Interpolant interpolate(const ShapeBasis& basis, const ScalarField& f) {
  if (basis.vector_valued()) throw UnsupportedKind("RT0 interpolates vector fields");
  Eigen::VectorXd c(basis.size());
  for (int i = 0; i < basis.size(); ++i) c(i) = apply(basis.dofs[static_cast<std::size_t>(i)], f);
  return Interpolant(basis, c);
}

Interpolant interpolate(ElementKind kind, const Simplex& t, const ScalarField& f) {
  return interpolate(make_basis(kind, t), f);
}

Interpolant rt0_interpolate(const Simplex& t, const VectorField& v) {
  auto basis = rt0_basis(t);
  Eigen::VectorXd c(basis.size());
  for (int i = 0; i < basis.size(); ++i) c(i) = apply(basis.dofs[static_cast<std::size_t>(i)], v);
  return Interpolant(std::move(basis), c);
}

Interpolant l2_project(const Simplex& t, const ScalarField& f, int k) {
  if (k != 0 && k != 1) throw UnsupportedDegree("L2 projection implemented for k = 0, 1");
  auto basis = k == 0 ? p0_basis(t) : lagrange_basis(t, 1);
  const int n = basis.size();
  const auto& rule = default_rule(t.dim());
  Mat gram = Mat::Zero(n, n);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  const double vol = measure(t);
  for (int q = 0; q < rule.size(); ++q) {
    const Vec x = rule.point(t.vertices(), q);
    const double w = rule.weights(q) * vol;
    Eigen::VectorXd phi(n);
    for (int i = 0; i < n; ++i) phi(i) = basis.value(i, x);
    gram += w * phi * phi.transpose();
    rhs += w * f(x) * phi;
  }
  Eigen::LLT<Mat> llt(gram);
  if (llt.info() != Eigen::Success) throw SingularGram("Gram matrix is not positive definite");
  return Interpolant(std::move(basis), llt.solve(rhs));
}

VectorField piola_push(const AffineFactorization& F, const VectorField& v_ref) {
  const Mat A = F.matrix();
  const Mat Ainv = A.inverse();
  const double det = A.determinant();
  const int d = v_ref.dim();
  int max_order = 64;
  for (int i = 0; i < d; ++i) max_order = std::min(max_order, v_ref.component(i).max_order());
  std::vector<ScalarField> comps;
  for (int i = 0; i < d; ++i) {
    comps.emplace_back(d, std::min(1, max_order), [=](const Vec& x, const MultiIndex& a) {
      const Vec xh = F.inverse_map(x);
      if (order(a) == 0) return A.row(i).dot(v_ref(xh)) / det;
      int j = 0;
      while (a[static_cast<std::size_t>(j)] == 0) ++j;
      // d v_i / d x_j = (1/det) sum_k A_ik sum_l d v_hat_k / d x_hat_l (A^-1)_lj
      return (A.row(i) * v_ref.jacobian(xh) * Ainv.col(j))(0) / det;
    });
  }
  return VectorField(std::move(comps));
}

ScalarField push_scalar(const AffineFactorization& F, const ScalarField& f_ref) {
  const Mat Ainv = F.matrix().inverse();
  return ScalarField(f_ref.dim(), std::min(1, f_ref.max_order()), [=](const Vec& x, const MultiIndex& a) {
    const Vec xh = F.inverse_map(x);
    if (order(a) == 0) return f_ref(xh);
    int j = 0;
    while (a[static_cast<std::size_t>(j)] == 0) ++j;
    return f_ref.gradient(xh).dot(Ainv.col(j));
  });
}

double commuting_residual(ElementKind kind, const Simplex& t, const ScalarField& f) {
  const int d = t.dim();
  std::vector<MultiIndex> derivs;
  if (kind == ElementKind::CR) {
    for (int j = 0; j < d; ++j) derivs.push_back(unit(j));
  } else if (kind == ElementKind::Morley) {
    derivs = multi_indices(d, 2);
  } else {
    throw UnsupportedKind("no commuting identity for " + to_string(kind));
  }
  const auto I = interpolate(kind, t, f);
  double worst = 0.0;
  for (const auto& b : derivs) {
    const auto proj = l2_project(t, derived(f, b), 0);
    worst = std::max(worst, l2_distance(
                                t, [&](const Vec& x) { return I.derivative(x, b); },
                                [&](const Vec& x) { return proj(x); }));
  }
  return worst;
}

double commuting_residual(const Simplex& t, const VectorField& v) {
  const auto I = rt0_interpolate(t, v);
  const ScalarField div(t.dim(), 0, [v](const Vec& x, const MultiIndex&) { return v.divergence(x); });
  const auto proj = l2_project(t, div, 0);
  return l2_distance(t, [&](const Vec& x) { return I.divergence(x); }, [&](const Vec& x) { return proj(x); });
}

}  // namespace aniso

#pragma once

// Local interpolation operators, L2 projections and the Piola transform.

#include "aniso/basis.hpp"
#include "aniso/fields.hpp"
#include "aniso/standardization.hpp"

namespace aniso {

class Interpolant {
 public:
  Interpolant(ShapeBasis basis, Eigen::VectorXd coeffs);

  ElementKind kind() const { return basis_.kind; }
  const ShapeBasis& basis() const { return basis_; }
  const Eigen::VectorXd& coefficients() const { return coeffs_; }

  double operator()(const Vec& x) const { return derivative(x, {0, 0, 0}); }
  double derivative(const Vec& x, const MultiIndex& a) const;

  // RT0 only
  Vec vector_value(const Vec& x) const;
  Mat jacobian(const Vec& x) const;
  double divergence(const Vec& x) const;

  ScalarField field() const;
  VectorField vector_field() const;

 private:
  ShapeBasis basis_;
  Eigen::VectorXd coeffs_;
};

/// I_T f = sum_i chi_i(f) theta_i for every scalar kind.
Interpolant interpolate(const ShapeBasis& basis, const ScalarField& f);
Interpolant interpolate(ElementKind kind, const Simplex& t, const ScalarField& f);
Interpolant rt0_interpolate(const Simplex& t, const VectorField& v);

/// Pi^k f for k in {0, 1}; Gram system solved by Cholesky.
Interpolant l2_project(const Simplex& t, const ScalarField& f, int k);

/// v(x) = (1/det A) A v_hat(x_hat) with x = A x_hat + b; Jacobian follows the chain rule.
VectorField piola_push(const AffineFactorization& F, const VectorField& v_ref);
/// phi(x) = phi_hat(x_hat); first derivatives only.
ScalarField push_scalar(const AffineFactorization& F, const ScalarField& f_ref);

/// Largest L2 norm over components of D(I f) - Pi^0(D f):
/// CR: first derivatives; Morley: second derivatives.
double commuting_residual(ElementKind kind, const Simplex& t, const ScalarField& f);
/// RT0: ||div(I v) - Pi^0(div v)||.
double commuting_residual(const Simplex& t, const VectorField& v);

}  // namespace aniso

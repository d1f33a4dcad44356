#pragma once

// Scalar and vector fields with analytic partial derivatives.

#include <functional>
#include <vector>

#include "aniso/geometry.hpp"
#include "aniso/polynomial.hpp"

namespace aniso {

using DerivativeFn = std::function<double(const Vec&, const MultiIndex&)>;

class ScalarField {
 public:
  ScalarField() = default;
  /// eval(x, a) must return d^a f(x) for every |a| <= max_order.
  ScalarField(int dim, int max_order, DerivativeFn eval);

  int dim() const { return dim_; }
  int max_order() const { return max_order_; }

  double operator()(const Vec& x) const { return eval_(x, {0, 0, 0}); }
  /// Throws MissingDerivative when |a| > max_order.
  double derivative(const Vec& x, const MultiIndex& a) const;
  Vec gradient(const Vec& x) const;

  friend ScalarField operator+(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator-(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator*(double s, const ScalarField& a);

 private:
  int dim_ = 0;
  int max_order_ = 0;
  DerivativeFn eval_;
};

/// p(x - origin); derivatives of every order are available.
ScalarField polynomial_field(const Polynomial& p, const Vec& origin);
ScalarField polynomial_field(const Polynomial& p);
/// a * sin(k . x + phase), analytic to any order.
ScalarField plane_wave(double amplitude, const Vec& k, double phase);

class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::vector<ScalarField> components);

  int dim() const { return static_cast<int>(c_.size()); }
  const ScalarField& component(int i) const { return c_[static_cast<std::size_t>(i)]; }

  Vec operator()(const Vec& x) const;
  /// J(i, j) = d v_i / d x_j
  Mat jacobian(const Vec& x) const;
  double divergence(const Vec& x) const;

 private:
  std::vector<ScalarField> c_;
};

}  // namespace aniso

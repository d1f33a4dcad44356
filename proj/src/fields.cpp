#include "aniso/fields.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "aniso/errors.hpp"

namespace aniso {

ScalarField::ScalarField(int dim, int max_order, DerivativeFn eval)
    : dim_(dim), max_order_(max_order), eval_(std::move(eval)) {}

double ScalarField::derivative(const Vec& x, const MultiIndex& a) const {
  if (order(a) > max_order_)
    throw MissingDerivative("field supplies derivatives up to order " + std::to_string(max_order_) +
                            ", requested " + std::to_string(order(a)));
  return eval_(x, a);
}

Vec ScalarField::gradient(const Vec& x) const {
  Vec g(dim_);
  for (int j = 0; j < dim_; ++j) {
    MultiIndex a{0, 0, 0};
    a[static_cast<std::size_t>(j)] = 1;
    g(j) = derivative(x, a);
  }
  return g;
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  return ScalarField(a.dim_, std::min(a.max_order_, b.max_order_),
                     [fa = a.eval_, fb = b.eval_](const Vec& x, const MultiIndex& m) {
                       return fa(x, m) + fb(x, m);
                     });
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  return ScalarField(a.dim_, std::min(a.max_order_, b.max_order_),
                     [fa = a.eval_, fb = b.eval_](const Vec& x, const MultiIndex& m) {
                       return fa(x, m) - fb(x, m);
                     });
}

ScalarField operator*(double s, const ScalarField& a) {
  return ScalarField(a.dim_, a.max_order_,
                     [s, fa = a.eval_](const Vec& x, const MultiIndex& m) { return s * fa(x, m); });
}

ScalarField polynomial_field(const Polynomial& p, const Vec& origin) {
  return ScalarField(p.dim(), 64, [p, origin](const Vec& x, const MultiIndex& a) {
    return p.derivative_at(x - origin, a);
  });
}

ScalarField polynomial_field(const Polynomial& p) {
  return ScalarField(p.dim(), 64,
                     [p](const Vec& x, const MultiIndex& a) { return p.derivative_at(x, a); });
}

ScalarField plane_wave(double amplitude, const Vec& k, double phase) {
  return ScalarField(static_cast<int>(k.size()), 64,
                     [amplitude, k, phase](const Vec& x, const MultiIndex& a) {
                       double f = amplitude;
                       for (int j = 0; j < k.size(); ++j)
                         f *= std::pow(k(j), a[static_cast<std::size_t>(j)]);
                       return f * std::sin(k.dot(x) + phase + order(a) * std::numbers::pi / 2);
                     });
}

VectorField::VectorField(std::vector<ScalarField> components) : c_(std::move(components)) {}

Vec VectorField::operator()(const Vec& x) const {
  Vec v(dim());
  for (int i = 0; i < dim(); ++i) v(i) = c_[static_cast<std::size_t>(i)](x);
  return v;
}

Mat VectorField::jacobian(const Vec& x) const {
  Mat j(dim(), dim());
  for (int i = 0; i < dim(); ++i) j.row(i) = c_[static_cast<std::size_t>(i)].gradient(x).transpose();
  return j;
}

double VectorField::divergence(const Vec& x) const { return jacobian(x).trace(); }

}  // namespace aniso

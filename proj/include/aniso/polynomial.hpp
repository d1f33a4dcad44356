#pragma once

// Dense multivariate polynomials in graded lexicographic monomial order.

#include <array>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace aniso {

using MultiIndex = std::array<int, 3>;

inline int order(const MultiIndex& a) { return a[0] + a[1] + a[2]; }

/// Exponents of every monomial of total degree <= k in d variables, graded
/// lexicographic: by total degree, then x_1 exponent descending.
const std::vector<MultiIndex>& monomials(int d, int k);

/// Number of monomials of degree <= k in d variables, binom(d+k, k).
int dim_polynomials(int d, int k);

/// All multi-indices with |a| == m in d variables, same ordering.
std::vector<MultiIndex> multi_indices(int d, int m);

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int dim, int degree);

  static Polynomial constant(int dim, double c);
  /// c + g . x
  static Polynomial affine(double c, const Eigen::VectorXd& g);
  static Polynomial from_terms(int dim, const std::vector<std::pair<MultiIndex, double>>& terms);

  void set_coefficient(const MultiIndex& a, double c);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const std::vector<double>& coefficients() const { return c_; }
  std::vector<double>& coefficients() { return c_; }
  double coefficient(const MultiIndex& a) const;

  double operator()(const Eigen::VectorXd& x) const { return derivative_at(x, {0, 0, 0}); }
  /// Value of the partial derivative d^a p at x, without building the derivative.
  double derivative_at(const Eigen::VectorXd& x, const MultiIndex& a) const;
  Eigen::VectorXd gradient_at(const Eigen::VectorXd& x) const;

  Polynomial derivative(const MultiIndex& a) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(double a);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  void raise_degree(int k);

  int dim_ = 0;
  int degree_ = 0;
  std::vector<double> c_;
};

}  // namespace aniso

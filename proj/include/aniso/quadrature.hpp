#pragma once

#include <functional>
#include <span>

#include "aniso/geometry.hpp"

namespace aniso {

/// Rule on the reference k-simplex. Nodes are barycentric (rows of k+1
/// entries); weights sum to 1, so integrals scale by the simplex measure.
struct QuadratureRule {
  int k = 0;
  int degree = 0;
  Mat nodes;
  Eigen::VectorXd weights;

  int size() const { return static_cast<int>(weights.size()); }
  /// Physical node j on the simplex spanned by pts.
  Vec point(std::span<const Vec> pts, int j) const;
};

/// Collapsed-coordinate Gauss rule exact for polynomials of total degree <= degree.
/// Cached; safe to call concurrently.
const QuadratureRule& gauss_rule(int k, int degree);
/// Vertex (trapezoidal) rule, degree 1.
const QuadratureRule& vertex_rule(int k);
/// Edge-midpoint rule on triangles, degree 2.
const QuadratureRule& edge_midpoint_rule();

/// 8 for d = 2, 6 for d = 3; ANISO_QUAD_DEGREE overrides both.
int default_degree(int d);
const QuadratureRule& default_rule(int k);

/// Gauss-Legendre nodes and weights on [0, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

using ScalarFn = std::function<double(const Vec&)>;

double integrate(std::span<const Vec> pts, const ScalarFn& f, const QuadratureRule& rule);
double integrate(const Simplex& t, const ScalarFn& f, const QuadratureRule& rule);
double integrate(const Simplex& t, const ScalarFn& f);

}  // namespace aniso

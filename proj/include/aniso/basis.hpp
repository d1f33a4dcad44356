#pragma once

// Shape functions and degrees of freedom on a physical simplex.

#include <string>
#include <vector>

#include "aniso/fields.hpp"
#include "aniso/geometry.hpp"
#include "aniso/polynomial.hpp"

namespace aniso {

enum class ElementKind { P0, Lagrange1, Lagrange2, P1Bubble, CR, NodalCR, Morley, RT0 };

std::string to_string(ElementKind k);
/// Accepts the names printed by to_string, case-insensitive. Throws UnsupportedKind.
ElementKind parse_kind(const std::string& name);

/// Degree-of-freedom functional. Every scalar functional is a mean over the
/// sub-simplex spanned by `support` (a single point means point evaluation).
struct Dof {
  enum class Type { Mean, NormalDerivativeMean, Flux };
  Type type = Type::Mean;
  std::vector<Vec> support;
  Vec normal;  // outward unit normal for NormalDerivativeMean and Flux
};

double apply(const Dof& dof, const ScalarField& f);
double apply(const Dof& dof, const VectorField& v);

/// Barycentric coordinates of x with respect to t.
Vec barycentric(const Simplex& t, const Vec& x);

class ShapeBasis {
 public:
  ElementKind kind;
  Simplex simplex;
  Vec origin;
  Mat to_local;                                 // xi = to_local (x - origin), the barycentric lambda_2.. lambda_{d+1}
  std::vector<Polynomial> scalar;               // scalar kinds, polynomials in xi
  std::vector<std::vector<Polynomial>> vector;  // RT0: d components per function, polynomials in x - origin
  std::vector<double> iota;                     // RT0 orientation signs
  std::vector<Dof> dofs;

  int size() const { return static_cast<int>(dofs.size()); }
  bool vector_valued() const { return kind == ElementKind::RT0; }

  double value(int i, const Vec& x) const;
  double derivative(int i, const Vec& x, const MultiIndex& a) const;
  Vec vector_value(int i, const Vec& x) const;
  /// d(theta_i)_c / d^a at x for component c.
  double vector_derivative(int i, int c, const Vec& x, const MultiIndex& a) const;

  ScalarField field(int i) const;
  VectorField vector_field(int i) const;
};

/// lambda_1 .. lambda_{d+1} as polynomials in x - t.vertex(0).
std::vector<Polynomial> barycentric_polynomials(const Simplex& t);

ShapeBasis p0_basis(const Simplex& t);
/// k in {1, 2}; throws UnsupportedDegree otherwise.
ShapeBasis lagrange_basis(const Simplex& t, int k);
ShapeBasis p1bubble_basis(const Simplex& t);
ShapeBasis cr_basis(const Simplex& t);
ShapeBasis nodal_cr_basis(const Simplex& t);
ShapeBasis morley_basis(const Simplex& t);
ShapeBasis rt0_basis(const Simplex& t);
ShapeBasis make_basis(ElementKind kind, const Simplex& t);

/// D(j, i) = chi_j(theta_i); identity for a unisolvent element.
Mat duality_matrix(const ShapeBasis& b);

}  // namespace aniso

#pragma once

// Lebesgue norms and Sobolev seminorms on a single simplex.

#include <limits>
#include <vector>

#include "aniso/fields.hpp"
#include "aniso/quadrature.hpp"

namespace aniso {

class Interpolant;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Frame { Cartesian, Directional };

/// Tensor: every ordered derivative tuple counts (mixed second derivatives
/// twice), the Frobenius norm of the derivative tensor. MultiIndex: each
/// multi-index counts once.
enum class Convention { Tensor, MultiIndex };

struct SeminormSpec {
  int m = 1;
  double p = 2.0;  // 1, 2, ... or kInfinity
  Frame frame = Frame::Cartesian;
  std::vector<Vec> directions;  // r_1 .. r_d for Frame::Directional
  std::vector<double> weights;  // optional per-direction length weights, e.g. H~_i
  Convention convention = Convention::Tensor;
};

/// Nodes used for sup norms: a degree-12 rule plus vertices and edge midpoints.
std::vector<Vec> sup_sample_points(const Simplex& t);

double lp_norm(const Simplex& t, const ScalarFn& f, double p, const QuadratureRule& rule);
double lp_norm(const Simplex& t, const ScalarFn& f, double p);

/// Derivative values of order spec.m at x, one entry per tuple of the spec.
std::vector<double> derivative_tuple_values(const DerivativeFn& f, int dim, const Vec& x,
                                            const SeminormSpec& spec);

double seminorm(const Simplex& t, const DerivativeFn& f, const SeminormSpec& spec,
                const QuadratureRule& rule);
/// Throws MissingDerivative when f lacks derivatives of order spec.m.
double seminorm(const Simplex& t, const ScalarField& f, const SeminormSpec& spec,
                const QuadratureRule& rule);
double seminorm(const Simplex& t, const ScalarField& f, const SeminormSpec& spec);

double error_seminorm(const Simplex& t, const ScalarField& f, const Interpolant& I,
                      const SeminormSpec& spec, const QuadratureRule& rule);
double error_seminorm(const Simplex& t, const ScalarField& f, const Interpolant& I,
                      const SeminormSpec& spec);

/// |x|_H^m shorthand for the common Cartesian L2 case.
SeminormSpec h_seminorm(int m, Convention c = Convention::Tensor);

}  // namespace aniso

#pragma once

// Vertex relabeling and the two-step affine map x = A_T (A_tilde A_hat) x_hat + b_T.

#include <array>
#include <vector>

#include "aniso/geometry.hpp"

namespace aniso {

enum class SimplexType { TypeI, TypeII };

struct StandardizedSimplex {
  Simplex base;             // relabeled, p_1 .. p_{d+1}
  std::vector<int> order;   // base.vertex(k) == original.vertex(order[k])
  std::vector<double> h;    // h_1 .. h_d
  SimplexType type = SimplexType::TypeI;
  // d = 2: s, t. d = 3: s1, t1, s21, s22, t2.
  double s = 0, t = 1;
  double s1 = 0, t1 = 1, s21 = 0, s22 = 0, t2 = 1;
  // Set when no labeling met every condition (only happens on numeric ties).
  bool flagged = false;

  int dim() const { return base.dim(); }
};

struct AffineFactorization {
  Mat A_hat;
  Mat A_tilde;
  Mat A_T;
  Vec b_T;

  /// A_T * A_tilde * A_hat
  Mat matrix() const { return A_T * A_tilde * A_hat; }
  Vec map(const Vec& x_hat) const { return matrix() * x_hat + b_T; }
  Vec inverse_map(const Vec& x) const;
};

struct DirectionFrame {
  std::vector<Vec> r;
  std::vector<Vec> r_tilde;
};

struct MathscrH {
  std::vector<double> values;
};

/// Reference vertices p_hat_1 .. p_hat_{d+1}; Type II moves p_hat_3 to (1,1,0).
std::vector<Vec> reference_vertices(int d, SimplexType type = SimplexType::TypeI);

StandardizedSimplex standardize(const Simplex& t);
AffineFactorization factorize(const StandardizedSimplex& s);
MathscrH mathscr_h(const StandardizedSimplex& s);
bool check_condition_M(const StandardizedSimplex& s, double M);
/// Smallest M for which check_condition_M holds (0 for d = 2).
double minimal_M(const StandardizedSimplex& s);
DirectionFrame direction_frame(const StandardizedSimplex& s);

/// True if the vertex order of t already meets the labeling conditions;
/// `type` receives the tag it would get.
bool satisfies_conditions(const Simplex& t, SimplexType* type = nullptr);

}  // namespace aniso

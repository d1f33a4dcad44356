#include "aniso/standardization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/QR>

#include "aniso/errors.hpp"
#include "aniso/format.hpp"

namespace aniso {

namespace {

constexpr double kTieTol = 1e-12;

double len(const Simplex& t, int i, int j) { return (t.vertex(i) - t.vertex(j)).norm(); }

// a >= b up to relative rounding.
bool geq(double a, double b) { return a >= b * (1.0 - kTieTol); }

// Signed position of x relative to the plane bisecting p_a p_b, positive toward p_b.
double side(const Simplex& t, int a, int b, const Vec& x) {
  const Vec d = t.vertex(b) - t.vertex(a);
  return (x - 0.5 * (t.vertex(a) + t.vertex(b))).dot(d) / d.squaredNorm();
}

bool is_min_edge(const Simplex& t, int i, int j) {
  const double l = len(t, i, j);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (!geq(len(t, a, b), l)) return false;
  return true;
}

// p_1 p_2 is the longest edge sharing exactly one endpoint with edge (i, j).
bool is_max_adjacent(const Simplex& t, int i, int j) {
  const double l = len(t, 0, 1);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      const bool touches = (a == i || a == j || b == i || b == j);
      const bool same = (std::min(i, j) == a && std::max(i, j) == b);
      if (touches && !same && !geq(l, len(t, a, b))) return false;
    }
  return true;
}

struct Edge {
  double length;
  int i, j;
};

std::vector<Edge> edges(const Simplex& t) {
  std::vector<Edge> e;
  for (int i = 0; i <= t.dim(); ++i)
    for (int j = i + 1; j <= t.dim(); ++j) e.push_back({len(t, i, j), i, j});
  return e;
}

// Longest (or shortest) edge; near-ties go to the lexicographically smallest pair.
Edge pick(const std::vector<Edge>& es, bool longest) {
  double best = longest ? 0.0 : INFINITY;
  for (const auto& e : es) best = longest ? std::max(best, e.length) : std::min(best, e.length);
  for (const auto& e : es) {
    const bool tied = longest ? geq(e.length, best) : geq(best, e.length);
    if (tied) return e;  // es is already in lexicographic order
  }
  return es.front();
}

std::vector<int> construct_order(const Simplex& t, SimplexType& type) {
  type = SimplexType::TypeI;
  const auto es = edges(t);
  if (t.dim() == 2) {
    const Edge e = pick(es, true);
    const int k = 3 - e.i - e.j;
    const double li = len(t, k, e.i), lj = len(t, k, e.j);
    // h_1 = |p_1 p_2| >= h_2 = |p_1 p_3|
    if (geq(li, lj)) return {k, e.i, e.j};
    return {k, e.j, e.i};
  }
  const Edge lmin = pick(es, false);
  std::vector<Edge> adjacent;
  for (const auto& e : es) {
    const int shared = (e.i == lmin.i || e.i == lmin.j) + (e.j == lmin.i || e.j == lmin.j);
    if (shared == 1) adjacent.push_back(e);
  }
  const Edge lmax = pick(adjacent, true);
  const int v = (lmax.i == lmin.i || lmax.i == lmin.j) ? lmax.i : lmax.j;
  const int b = (v == lmax.i) ? lmax.j : lmax.i;
  const int a = (v == lmin.i) ? lmin.j : lmin.i;
  const int c = 6 - v - b - a;
  if (side(t, v, b, t.vertex(c)) <= kTieTol) return {v, b, a, c};  // type I, ties included
  type = SimplexType::TypeII;
  return {b, v, a, c};
}

}  // namespace

std::vector<Vec> reference_vertices(int d, SimplexType type) {
  std::vector<Vec> p(static_cast<std::size_t>(d + 1), Vec::Zero(d));
  for (int i = 0; i < d; ++i) p[static_cast<std::size_t>(i + 1)](i) = 1.0;
  if (d == 3 && type == SimplexType::TypeII) p[2](0) = 1.0;
  return p;
}

bool satisfies_conditions(const Simplex& t, SimplexType* type) {
  if (t.dim() == 2) {
    const double l12 = len(t, 0, 1), l13 = len(t, 0, 2), l23 = len(t, 1, 2);
    if (type) *type = SimplexType::TypeI;
    return geq(l23, l12) && geq(l23, l13) && geq(l12, l13);
  }
  const double tol = kTieTol;
  const double q3 = side(t, 0, 1, t.vertex(2));
  const double q4 = side(t, 0, 1, t.vertex(3));
  if (is_min_edge(t, 0, 2) && is_max_adjacent(t, 0, 2) && q3 <= tol && q4 <= tol) {
    if (type) *type = SimplexType::TypeI;
    return true;
  }
  if (is_min_edge(t, 1, 2) && is_max_adjacent(t, 1, 2) && q3 >= -tol && q4 <= tol) {
    if (type) *type = SimplexType::TypeII;
    return true;
  }
  return false;
}

StandardizedSimplex standardize(const Simplex& t) {
  const int d = t.dim();
  std::vector<int> order(static_cast<std::size_t>(d + 1));
  std::iota(order.begin(), order.end(), 0);
  SimplexType type = SimplexType::TypeI;
  bool flagged = false;
  if (!satisfies_conditions(t, &type)) {
    SimplexType built = SimplexType::TypeI;
    order = construct_order(t, built);
    flagged = !satisfies_conditions(t.relabeled(order), &type);
    if (flagged) type = built;
  }
  StandardizedSimplex out{t.relabeled(order), order, {}, type};
  out.flagged = flagged;
  const Simplex& b = out.base;

  // Coordinates in an orthonormal frame along the relabeled edges. Householder
  // QR keeps the frame orthogonal for nearly flat elements, where Gram-Schmidt
  // does not.
  const Eigen::HouseholderQR<Mat> qr(b.edge_matrix());
  Mat R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < d; ++k)
    if (R(k, k) < 0) R.row(k) *= -1.0;
  auto local = [&](int i) -> Vec { return R.col(i - 1); };

  const double h1 = len(b, 0, 1);
  if (d == 2) {
    const double h2 = len(b, 0, 2);
    const Vec q = local(2);
    out.h = {h1, h2};
    out.s = q(0) / h2;
    out.t = q(1) / h2;
    return out;
  }
  const Vec q3 = local(2), q4 = local(3);
  const double h3 = len(b, 0, 3);
  if (type == SimplexType::TypeI) {
    const double h2 = len(b, 0, 2);
    out.h = {h1, h2, h3};
    out.s1 = q3(0) / h2;
    out.t1 = q3(1) / h2;
  } else {
    const double h2 = len(b, 1, 2);
    out.h = {h1, h2, h3};
    out.s1 = (h1 - q3(0)) / h2;
    out.t1 = q3(1) / h2;
  }
  out.s21 = q4(0) / h3;
  out.s22 = q4(1) / h3;
  out.t2 = q4(2) / h3;
  return out;
}

AffineFactorization factorize(const StandardizedSimplex& s) {
  const int d = s.dim();
  AffineFactorization f;
  f.A_hat = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) f.A_hat(i, i) = s.h[static_cast<std::size_t>(i)];
  f.A_tilde = Mat::Identity(d, d);
  if (d == 2) {
    f.A_tilde(0, 1) = s.s;
    f.A_tilde(1, 1) = s.t;
  } else {
    f.A_tilde(0, 1) = s.type == SimplexType::TypeI ? s.s1 : -s.s1;
    f.A_tilde(1, 1) = s.t1;
    f.A_tilde(0, 2) = s.s21;
    f.A_tilde(1, 2) = s.s22;
    f.A_tilde(2, 2) = s.t2;
  }
  const auto ref = reference_vertices(d, s.type);
  Mat v(d, d), p(d, d);
  for (int k = 0; k < d; ++k) {
    v.col(k) = s.base.vertex(k + 1) - s.base.vertex(0);
    p.col(k) = ref[static_cast<std::size_t>(k + 1)];
  }
  f.A_T = v * (f.A_tilde * f.A_hat * p).inverse();
  f.b_T = s.base.vertex(0);

  // Rounding in the inverse grows with the conditioning of A_tilde.
  Eigen::JacobiSVD<Mat> svd(f.A_tilde);
  const auto& sv = svd.singularValues();
  const double kappa = sv(0) / sv(d - 1);
  const double err = (f.A_T.transpose() * f.A_T - Mat::Identity(d, d)).cwiseAbs().maxCoeff();
  if (!(err < 1e-12 * std::max(1.0, kappa)))
    throw FactorizationFailure("A_T is not orthogonal (deviation " + printf_double("%.3e", err) +
                               "); vertices are mislabeled");
  return f;
}

Vec AffineFactorization::inverse_map(const Vec& x) const {
  const Vec y = A_T.transpose() * (x - b_T);
  const Mat m = A_tilde * A_hat;
  return m.triangularView<Eigen::Upper>().solve(y);
}

MathscrH mathscr_h(const StandardizedSimplex& s) {
  if (s.dim() == 2) return {{s.h[0], s.h[1] * s.t}};
  return {{s.h[0], s.h[1] * s.t1, s.h[2] * s.t2}};
}

double minimal_M(const StandardizedSimplex& s) {
  if (s.dim() == 2) return 0.0;
  return std::abs(s.s22) * s.h[2] / (s.h[1] * s.t1);
}

bool check_condition_M(const StandardizedSimplex& s, double M) {
  if (s.dim() == 2) return true;
  return std::abs(s.s22) <= M * s.h[1] * s.t1 / s.h[2];
}

DirectionFrame direction_frame(const StandardizedSimplex& s) {
  const int d = s.dim();
  const Simplex& b = s.base;
  DirectionFrame f;
  f.r.push_back((b.vertex(1) - b.vertex(0)).normalized());
  if (d == 3 && s.type == SimplexType::TypeII)
    f.r.push_back((b.vertex(2) - b.vertex(1)).normalized());
  else
    f.r.push_back((b.vertex(2) - b.vertex(0)).normalized());
  if (d == 3) f.r.push_back((b.vertex(3) - b.vertex(0)).normalized());

  if (d == 2) {
    f.r_tilde = {Eigen::Vector2d(1, 0), Eigen::Vector2d(s.s, s.t)};
  } else {
    const double s1 = s.type == SimplexType::TypeI ? s.s1 : -s.s1;
    f.r_tilde = {Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(s1, s.t1, 0),
                 Eigen::Vector3d(s.s21, s.s22, s.t2)};
  }
  return f;
}

}  // namespace aniso

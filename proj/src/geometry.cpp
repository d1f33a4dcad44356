#include "aniso/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "aniso/errors.hpp"

namespace aniso {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double max_pairwise_distance(const std::vector<Vec>& v) {
  double h = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) h = std::max(h, (v[i] - v[j]).norm());
  return h;
}

}  // namespace

Simplex::Simplex(std::vector<Vec> vertices) : vertices_(std::move(vertices)) {
  const auto n = vertices_.size();
  if (n != 3 && n != 4)
    throw WrongDimension("a simplex needs 3 (triangle) or 4 (tetrahedron) vertices");
  const auto d = static_cast<Eigen::Index>(n - 1);
  for (const auto& p : vertices_)
    if (p.size() != d) throw WrongDimension("vertex dimension does not match simplex dimension");
  const double h = max_pairwise_distance(vertices_);
  const double vol = std::abs(signed_volume_factor()) / factorial(static_cast<int>(d));
  if (!(h > 0.0) || !(vol / std::pow(h, static_cast<double>(d)) >= kDegeneracyTolerance))
    throw DegenerateSimplex("simplex is degenerate (|T|/h_T^d below tolerance)");
}

Mat Simplex::edge_matrix() const {
  const int d = dim();
  Mat e(d, d);
  for (int i = 0; i < d; ++i) e.col(i) = vertices_[static_cast<std::size_t>(i + 1)] - vertices_[0];
  return e;
}

double Simplex::signed_volume_factor() const { return edge_matrix().determinant(); }

Simplex Simplex::relabeled(std::span<const int> order) const {
  std::vector<Vec> v;
  v.reserve(order.size());
  for (int k : order) v.push_back(vertices_.at(static_cast<std::size_t>(k)));
  return Simplex(std::move(v));
}

Simplex make_triangle(double x1, double y1, double x2, double y2, double x3, double y3) {
  return Simplex({Eigen::Vector2d(x1, y1), Eigen::Vector2d(x2, y2), Eigen::Vector2d(x3, y3)});
}

Simplex make_tetrahedron(const std::array<std::array<double, 3>, 4>& p) {
  std::vector<Vec> v;
  for (const auto& q : p) v.push_back(Eigen::Vector3d(q[0], q[1], q[2]));
  return Simplex(std::move(v));
}

double AngleData::max_angle() const {
  double m = 0.0;
  for (double a : interior) m = std::max(m, a);
  for (const auto& f : face) m = std::max(m, f.angle);
  return m;
}

double AngleData::max_dihedral() const {
  double m = 0.0;
  for (const auto& a : dihedral) m = std::max(m, a.angle);
  return m;
}

double simplex_measure(std::span<const Vec> points) {
  const auto k = static_cast<Eigen::Index>(points.size()) - 1;
  if (k <= 0) return 1.0;
  const auto d = points[0].size();
  Mat e(d, k);
  for (Eigen::Index i = 0; i < k; ++i) e.col(i) = points[static_cast<std::size_t>(i + 1)] - points[0];
  const double gram = (k == d) ? std::abs(e.determinant()) : std::sqrt(std::max(0.0, (e.transpose() * e).determinant()));
  return gram / factorial(static_cast<int>(k));
}

double measure(const Simplex& t) {
  return std::abs(t.signed_volume_factor()) / factorial(t.dim());
}

EdgeData edge_data(const Simplex& t) {
  const int n = t.dim() + 1;
  std::vector<std::pair<double, std::pair<int, int>>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({(t.vertex(i) - t.vertex(j)).norm(), {i, j}});
  std::stable_sort(edges.begin(), edges.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  EdgeData out;
  for (const auto& [len, ends] : edges) {
    out.lengths.push_back(len);
    out.endpoints.push_back(ends);
  }
  return out;
}

double diameter(const Simplex& t) { return max_pairwise_distance(t.vertices()); }

double circumradius(const Simplex& t) {
  const double vol = measure(t);
  auto len = [&](int i, int j) { return (t.vertex(i) - t.vertex(j)).norm(); };
  if (t.dim() == 2) return len(0, 1) * len(1, 2) * len(0, 2) / (4.0 * vol);
  // Three edges at p_1 and the edges opposite to them.
  const double aA = len(0, 1) * len(2, 3);
  const double bB = len(0, 2) * len(1, 3);
  const double cC = len(0, 3) * len(1, 2);
  const double prod = (aA + bB + cC) * (aA + bB - cC) * (aA - bB + cC) * (-aA + bB + cC);
  return std::sqrt(std::max(0.0, prod)) / (24.0 * vol);
}

std::vector<Vec> facet_vertices(const Simplex& t, int i) {
  std::vector<Vec> f;
  for (int k = 0; k <= t.dim(); ++k)
    if (k != i) f.push_back(t.vertex(k));
  return f;
}

double facet_measure(const Simplex& t, int i) {
  const auto f = facet_vertices(t, i);
  return simplex_measure(f);
}

double inradius(const Simplex& t) {
  double surface = 0.0;
  for (int i = 0; i <= t.dim(); ++i) surface += facet_measure(t, i);
  return t.dim() * measure(t) / surface;
}

Vec outward_normal(const Simplex& t, int i) {
  const auto f = facet_vertices(t, i);
  Vec n;
  if (t.dim() == 2) {
    const Vec e = f[1] - f[0];
    n = Eigen::Vector2d(e(1), -e(0));
  } else {
    const Eigen::Vector3d a = f[1] - f[0];
    const Eigen::Vector3d b = f[2] - f[0];
    n = a.cross(b);
  }
  n.normalize();
  if (n.dot(f[0] - t.vertex(i)) < 0.0) n = -n;
  return n;
}

double angle_between(const Vec& a, const Vec& b) {
  // atan2 form keeps accuracy for angles near 0 and pi.
  const double c = a.dot(b);
  double s;
  if (a.size() == 2) {
    s = std::abs(a(0) * b(1) - a(1) * b(0));
  } else {
    s = Eigen::Vector3d(a).cross(Eigen::Vector3d(b)).norm();
  }
  return std::atan2(s, c);
}

AngleData angles(const Simplex& t) {
  AngleData out;
  const int n = t.dim() + 1;
  if (t.dim() == 2) {
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      out.interior.push_back(angle_between(t.vertex(j) - t.vertex(i), t.vertex(k) - t.vertex(i)));
    }
    return out;
  }
  std::vector<Vec> normals;
  for (int i = 0; i < n; ++i) normals.push_back(outward_normal(t, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out.dihedral.push_back({i, j, angle_between(normals[static_cast<std::size_t>(i)],
                                                  -normals[static_cast<std::size_t>(j)])});
  for (int f = 0; f < n; ++f) {
    for (int v = 0; v < n; ++v) {
      if (v == f) continue;
      std::array<int, 2> others{};
      int m = 0;
      for (int w = 0; w < n; ++w)
        if (w != f && w != v) others[static_cast<std::size_t>(m++)] = w;
      out.face.push_back({f, v,
                          angle_between(t.vertex(others[0]) - t.vertex(v),
                                        t.vertex(others[1]) - t.vertex(v))});
    }
  }
  return out;
}

}  // namespace aniso

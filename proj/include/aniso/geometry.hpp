#pragma once

// Metric computations on triangles and tetrahedra.

#include <array>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace aniso {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// |T|_d / h_T^d below this value marks a simplex as degenerate.
inline constexpr double kDegeneracyTolerance = 1e-14;

/// A triangle (d = 2) or tetrahedron (d = 3) given by its d+1 vertices.
///
/// Construction validates the vertex count and rejects degenerate input, so
/// every live Simplex has positive measure.
class Simplex {
 public:
  explicit Simplex(std::vector<Vec> vertices);

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  const Vec& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
  const std::vector<Vec>& vertices() const { return vertices_; }

  /// Columns p_{i+1} - p_1, i = 1..d.
  Mat edge_matrix() const;
  /// det of edge_matrix(); sign encodes orientation.
  double signed_volume_factor() const;

  /// New simplex with vertex k taken from vertex order[k] of this one.
  Simplex relabeled(std::span<const int> order) const;

 private:
  std::vector<Vec> vertices_;
};

Simplex make_triangle(double x1, double y1, double x2, double y2, double x3,
                      double y3);
Simplex make_tetrahedron(const std::array<std::array<double, 3>, 4>& p);

/// Edge lengths sorted ascending with their (i < j) endpoint indices.
struct EdgeData {
  std::vector<double> lengths;
  std::vector<std::pair<int, int>> endpoints;

  double h_T() const { return lengths.back(); }
  double min_edge() const { return lengths.front(); }
};

struct DihedralAngle {
  int face_a;  // facet opposite vertex face_a
  int face_b;
  double angle;
};

struct FaceAngle {
  int face;    // facet opposite this vertex index
  int vertex;  // corner of the face where the angle sits
  double angle;
};

/// Angles in radians. For d = 2 only `interior` is filled (angle at vertex i);
/// for d = 3 the six dihedral and twelve face-interior angles are filled.
struct AngleData {
  std::vector<double> interior;
  std::vector<DihedralAngle> dihedral;
  std::vector<FaceAngle> face;

  double max_angle() const;     // d = 2: largest interior; d = 3: largest face angle
  double max_dihedral() const;  // d = 3 only; 0 for triangles
};

double measure(const Simplex& t);
EdgeData edge_data(const Simplex& t);
double diameter(const Simplex& t);
double circumradius(const Simplex& t);
double inradius(const Simplex& t);
AngleData angles(const Simplex& t);

/// Vertices of the facet opposite vertex i, in increasing index order.
std::vector<Vec> facet_vertices(const Simplex& t, int i);
double facet_measure(const Simplex& t, int i);
/// Unit normal of the facet opposite vertex i pointing away from vertex i.
Vec outward_normal(const Simplex& t, int i);

/// k-dimensional measure of the simplex spanned by k+1 points in R^d.
double simplex_measure(std::span<const Vec> points);

double angle_between(const Vec& a, const Vec& b);

}  // namespace aniso

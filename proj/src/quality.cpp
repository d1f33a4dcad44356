#include "aniso/quality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aniso/standardization.hpp"

namespace aniso {

namespace {

constexpr double kPi = std::numbers::pi;

// Shape of a single triangle given its three vertices in any ambient dimension.
struct TriangleShape {
  double ratio;  // H_T / h_T of the triangle
  double l1, l2, l3;
  double max_angle;
};

TriangleShape triangle_shape(const Vec& a, const Vec& b, const Vec& c) {
  std::array<double, 3> l{(b - c).norm(), (a - c).norm(), (a - b).norm()};
  const std::array<Vec, 3> pts{a, b, c};
  const double area = simplex_measure(pts);
  std::sort(l.begin(), l.end());
  // In 2D, H_T = h_1 h_2 h_T / |T| where h_1, h_2 are the two edges at the
  // vertex opposite the longest edge.
  const double ratio = l[0] * l[1] / area;
  const double cos_max = (l[0] * l[0] + l[1] * l[1] - l[2] * l[2]) / (2 * l[0] * l[1]);
  return {ratio, l[0], l[1], l[2], std::acos(std::clamp(cos_max, -1.0, 1.0))};
}

Taxonomy classify_triangle(const TriangleShape& t, double gamma0) {
  if (t.ratio <= gamma0) {
    if (t.l1 / t.l3 >= 0.5) return Taxonomy::Isotropic;
    if (std::abs(t.max_angle - kPi / 2) <= 1e-6) return Taxonomy::RightAngled;
    return Taxonomy::DaggerGood;
  }
  return t.l1 / t.l2 > 0.5 ? Taxonomy::Blade : Taxonomy::DaggerBad;
}

Taxonomy classify_tet(const Simplex& t, double ratio, double gamma0) {
  const auto ed = edge_data(t);
  if (ratio <= gamma0)
    return ed.lengths.front() / ed.lengths.back() >= 0.5 ? Taxonomy::Isotropic : Taxonomy::Unclassified;

  int blades = 0, daggers = 0;
  std::vector<int> dagger_faces;
  for (int f = 0; f < 4; ++f) {
    const auto v = facet_vertices(t, f);
    const auto shape = triangle_shape(v[0], v[1], v[2]);
    const auto label = classify_triangle(shape, gamma0);
    if (label == Taxonomy::Blade) ++blades;
    if (label == Taxonomy::DaggerBad) {
      ++daggers;
      dagger_faces.push_back(f);
    }
  }
  if (blades == 0 && daggers == 0) return Taxonomy::Sliver;
  if (blades == 4) return Taxonomy::Spindle;
  if (daggers == 4) return Taxonomy::Splinter;
  if (daggers == 3) return Taxonomy::Spire;
  if (daggers == 2 && blades == 2) {
    // Two dagger faces share exactly one edge: the edge between the other two vertices.
    const auto [i, j] = ed.endpoints.front();
    const bool shared = std::none_of(dagger_faces.begin(), dagger_faces.end(),
                                     [&](int f) { return f == i || f == j; });
    return shared ? Taxonomy::Spear : Taxonomy::Spike;
  }
  return Taxonomy::Unclassified;
}

}  // namespace

std::string to_string(Taxonomy t) {
  switch (t) {
    case Taxonomy::Isotropic: return "Isotropic";
    case Taxonomy::RightAngled: return "RightAngled";
    case Taxonomy::DaggerGood: return "DaggerGood";
    case Taxonomy::DaggerBad: return "DaggerBad";
    case Taxonomy::Blade: return "Blade";
    case Taxonomy::Spire: return "Spire";
    case Taxonomy::Spear: return "Spear";
    case Taxonomy::Spindle: return "Spindle";
    case Taxonomy::Spike: return "Spike";
    case Taxonomy::Splinter: return "Splinter";
    case Taxonomy::Sliver: return "Sliver";
    case Taxonomy::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

double H_parameter(const Simplex& t) {
  const auto s = standardize(t);
  double prod = 1.0;
  for (double h : s.h) prod *= h;
  return prod / measure(t) * diameter(t);
}

double H_star(const Simplex& t) {
  const auto ed = edge_data(t);
  const double h = ed.h_T();
  const double edges = t.dim() == 2 ? ed.lengths[0] : ed.lengths[0] * ed.lengths[1];
  return h * h / measure(t) * edges;
}

double probe_angle(const Simplex& t) {
  const auto a = angles(t);
  if (t.dim() == 2) return a.max_angle();
  return std::max(a.max_dihedral(), a.max_angle());
}

QualityReport condition_report(const Simplex& t, double gamma0) {
  QualityReport r;
  const auto ed = edge_data(t);
  const auto ang = angles(t);
  const int d = t.dim();
  r.h_T = ed.h_T();
  r.H_T = H_parameter(t);
  r.H_star = H_star(t);
  r.ratio_new = r.H_T / r.h_T;
  r.ratio_classic = std::pow(r.h_T, d) / measure(t);
  r.hmax_over_hmin = ed.h_T() / ed.min_edge();
  r.R_over_h = circumradius(t) / r.h_T;
  r.max_angle = ang.max_angle();
  if (d == 3) r.max_dihedral = ang.max_dihedral();
  if (d == 2) {
    r.classification = classify_triangle(triangle_shape(t.vertex(0), t.vertex(1), t.vertex(2)), gamma0);
  } else {
    r.classification = classify_tet(t, r.ratio_new, gamma0);
  }
  return r;
}

Taxonomy classify(const Simplex& t, double gamma0) {
  if (t.dim() == 2)
    return classify_triangle(triangle_shape(t.vertex(0), t.vertex(1), t.vertex(2)), gamma0);
  return classify_tet(t, H_parameter(t) / diameter(t), gamma0);
}

bool is_good(const Simplex& t, double gamma0) { return H_parameter(t) / diameter(t) <= gamma0; }

ProbeReport equivalence_probe(const std::function<Simplex(double)>& family,
                              const std::vector<int>& levels) {
  ProbeReport rep;
  for (int k : levels) {
    const double s = std::ldexp(1.0, -k);
    const Simplex t = family(s);
    rep.rows.push_back({k, s, probe_angle(t), H_parameter(t) / diameter(t)});
  }
  if (rep.rows.size() >= 2) {
    const auto& first = rep.rows.front();
    const auto& last = rep.rows.back();
    rep.ratio_diverges = last.ratio > 4.0 * first.ratio;
    rep.angle_diverges = (kPi - last.angle) <= 0.5 * (kPi - first.angle);
  }
  if (rep.ratio_diverges && rep.angle_diverges)
    rep.verdict = "co-diverging";
  else if (!rep.ratio_diverges && !rep.angle_diverges)
    rep.verdict = "co-bounded";
  else
    rep.verdict = "inconsistent";
  return rep;
}

}  // namespace aniso

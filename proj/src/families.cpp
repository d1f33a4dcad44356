#include "aniso/families.hpp"

#include <cmath>
#include <stdexcept>

namespace aniso {

Simplex right_angled(double s, double eps) { return make_triangle(0, 0, s, 0, 0, std::pow(s, eps)); }

Simplex right_angled_scaled(double s, double delta) { return make_triangle(0, 0, s, 0, 0, delta * s); }

Simplex dagger(double s, double eps, double delta) {
  return make_triangle(0, 0, s, 0, std::pow(s, delta), std::pow(s, eps));
}

Simplex blade(double s, double eps) { return make_triangle(0, 0, 2 * s, 0, s, std::pow(s, eps)); }

Simplex blade_scaled(double s, double delta) { return make_triangle(0, 0, 2 * s, 0, s, delta * s); }

Simplex rotated_right(double s, double delta, double theta) {
  const double c = std::cos(theta), n = std::sin(theta);
  return make_triangle(0, 0, c * s, n * s, -n * delta * s, c * delta * s);
}

Simplex sliver(double s, double e1, double e2) {
  const double a = std::pow(s, e2), b = std::pow(s, e1);
  return make_tetrahedron({{{a, 0, 0}, {-a, 0, 0}, {0, -s, b}, {0, s, b}}});
}

Simplex lag3d_case1(double s, double eps, double delta) {
  return make_tetrahedron({{{0, 0, 0}, {s, 0, 0}, {0, std::pow(s, eps), 0}, {0, 0, std::pow(s, delta)}}});
}

Simplex lag3d_case2(double s, double eps) {
  return make_tetrahedron({{{0, 0, 0}, {s, 0, 0}, {s / 2, std::pow(s, eps), 0}, {0, 0, s}}});
}

Simplex dagger_tet(double s, double eps, double delta, double gamma) {
  const double sg = std::pow(s, gamma);
  // 2s - sqrt(4s^2 - s^(2 gamma)) without cancellation
  const double x3 = sg * sg / (2 * s + std::sqrt(4 * s * s - sg * sg));
  return make_tetrahedron({{{0, 0, 0}, {2 * s, 0, 0}, {x3, sg, 0}, {std::pow(s, delta), 0, std::pow(s, eps)}}});
}

std::function<Simplex(double)> named_family(const std::string& name) {
  if (name == "right-angled") return [](double s) { return right_angled(s, 3.0); };
  if (name == "dagger-good") return [](double s) { return dagger(s, 1.5, 2.0); };
  if (name == "dagger-bad") return [](double s) { return dagger(s, 2.0, 1.5); };
  if (name == "blade") return [](double s) { return blade(s, 2.0); };
  if (name == "sliver") return [](double s) { return sliver(s, 1.5, 1.0); };
  if (name == "dagger-tet") return [](double s) { return dagger_tet(s, 1.5, 2.0, 2.5); };
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::vector<std::string> named_families() {
  return {"right-angled", "dagger-good", "dagger-bad", "blade", "sliver", "dagger-tet"};
}

}  // namespace aniso

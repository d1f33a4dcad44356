#pragma once

// Closed-form reference values, computed without the library.

#include <algorithm>
#include <array>
#include <cmath>

namespace oracle {

inline double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

// Heron, in the cancellation-free form.
inline double heron(double a, double b, double c) {
  std::array<double, 3> e{a, b, c};
  std::sort(e.begin(), e.end());
  const double x = e[2], y = e[1], z = e[0];
  return 0.25 * std::sqrt((x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z)));
}

inline double triangle_circumradius(double a, double b, double c) { return a * b * c / (4.0 * heron(a, b, c)); }

// Cayley-Menger for a tetrahedron with edges d01, d02, d03, d12, d13, d23.
inline double tet_volume(double d01, double d02, double d03, double d12, double d13, double d23) {
  const double a = d01 * d01, b = d02 * d02, c = d03 * d03, d = d12 * d12, e = d13 * d13, f = d23 * d23;
  // 288 V^2 = det of the bordered distance matrix
  const double m[5][5] = {{0, 1, 1, 1, 1}, {1, 0, a, b, c}, {1, a, 0, d, e}, {1, b, d, 0, f}, {1, c, e, f, 0}};
  double t[5][5];
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) t[i][j] = m[i][j];
  double det = 1.0;
  for (int k = 0; k < 5; ++k) {
    int p = k;
    for (int i = k + 1; i < 5; ++i)
      if (std::abs(t[i][k]) > std::abs(t[p][k])) p = i;
    if (p != k) {
      for (int j = 0; j < 5; ++j) std::swap(t[k][j], t[p][j]);
      det = -det;
    }
    det *= t[k][k];
    for (int i = k + 1; i < 5; ++i) {
      const double f2 = t[i][k] / t[k][k];
      for (int j = k; j < 5; ++j) t[i][j] -= f2 * t[k][j];
    }
  }
  return std::sqrt(det / 288.0);
}

// Integral of x^a y^b over the unit right triangle.
inline double reference_moment(int a, int b) { return factorial(a) * factorial(b) / factorial(a + b + 2); }
// Integral of x^a y^b z^c over the unit right tetrahedron.
inline double reference_moment(int a, int b, int c) {
  return factorial(a) * factorial(b) * factorial(c) / factorial(a + b + c + 3);
}

// Sliver (s^e2,0,0), (-s^e2,0,0), (0,-s,s^e1), (0,s,s^e1): edges 2s^e2, 2s and
// four copies of sqrt(s^(2 e2) + s^2 + s^(2 e1)); volume (2/3) s^(1+e1+e2).
struct Sliver {
  double L1, L6, volume, h;
};
inline Sliver sliver(double s, double e1, double e2) {
  const double a = std::pow(s, e2), b = std::pow(s, e1);
  const double side = std::sqrt(a * a + s * s + b * b);
  const double shortest = std::min({2 * a, 2 * s, side});
  const double longest = std::max({2 * a, 2 * s, side});
  return {shortest, longest, 2.0 / 3.0 * s * a * b, longest};
}

}  // namespace oracle

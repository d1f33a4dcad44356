#pragma once

// Single-element families parameterized by s in (0, 1).

#include <functional>
#include <string>
#include <vector>

#include "aniso/geometry.hpp"

namespace aniso {

/// (0,0), (s,0), (0,s^eps)
Simplex right_angled(double s, double eps);
/// (0,0), (s,0), (0,delta s)
Simplex right_angled_scaled(double s, double delta);
/// (0,0), (s,0), (s^delta, s^eps); good for 1 < eps < delta, bad for 1 < delta < eps.
Simplex dagger(double s, double eps, double delta);
/// (0,0), (2s,0), (s,s^eps)
Simplex blade(double s, double eps);
/// (0,0), (2s,0), (s,delta s)
Simplex blade_scaled(double s, double delta);
/// right_angled_scaled rotated by theta about the origin.
Simplex rotated_right(double s, double delta, double theta);

/// (s^e2,0,0), (-s^e2,0,0), (0,-s,s^e1), (0,s,s^e1)
Simplex sliver(double s, double e1, double e2);
/// (0,0,0), (s,0,0), (0,s^eps,0), (0,0,s^delta)
Simplex lag3d_case1(double s, double eps, double delta);
/// (0,0,0), (s,0,0), (s/2,s^eps,0), (0,0,s)
Simplex lag3d_case2(double s, double eps);
/// Base (0,0,0), (2s,0,0), (2s - sqrt(4s^2 - s^(2 gamma)), s^gamma, 0) with apex
/// (s^delta, 0, s^eps); good when 1 < eps < delta < gamma.
Simplex dagger_tet(double s, double eps, double delta, double gamma);

/// Fixed-parameter families for sweeps: right-angled (eps 3), dagger-good
/// (eps 1.5, delta 2), dagger-bad (eps 2, delta 1.5), blade (eps 2),
/// sliver (1.5, 1.0), dagger-tet (1.5, 2, 2.5). Throws std::invalid_argument.
std::function<Simplex(double)> named_family(const std::string& name);
std::vector<std::string> named_families();

}  // namespace aniso

#include "aniso/norms.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "aniso/errors.hpp"
#include "aniso/interpolation.hpp"

namespace aniso {

namespace {

std::vector<std::vector<int>> tuples(int d, int m, Convention c) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(m), 0);
  int total = 1;
  for (int k = 0; k < m; ++k) total *= d;
  for (int n = 0; n < total; ++n) {
    int rem = n;
    for (int k = m - 1; k >= 0; --k) {
      t[static_cast<std::size_t>(k)] = rem % d;
      rem /= d;
    }
    if (c == Convention::MultiIndex && !std::is_sorted(t.begin(), t.end())) continue;
    out.push_back(t);
  }
  return out;
}

MultiIndex to_multi(const std::vector<int>& t) {
  MultiIndex a{0, 0, 0};
  for (int i : t) ++a[static_cast<std::size_t>(i)];
  return a;
}

}  // namespace

std::vector<Vec> sup_sample_points(const Simplex& t) {
  std::vector<Vec> pts;
  const auto& rule = gauss_rule(t.dim(), 12);
  for (int j = 0; j < rule.size(); ++j) pts.push_back(rule.point(t.vertices(), j));
  for (int i = 0; i <= t.dim(); ++i) {
    pts.push_back(t.vertex(i));
    for (int j = i + 1; j <= t.dim(); ++j) pts.push_back(0.5 * (t.vertex(i) + t.vertex(j)));
  }
  return pts;
}

double lp_norm(const Simplex& t, const ScalarFn& f, double p, const QuadratureRule& rule) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& x : sup_sample_points(t)) m = std::max(m, std::abs(f(x)));
    return m;
  }
  const double s = integrate(t, [&](const Vec& x) { return std::pow(std::abs(f(x)), p); }, rule);
  return std::pow(s, 1.0 / p);
}

double lp_norm(const Simplex& t, const ScalarFn& f, double p) {
  return lp_norm(t, f, p, default_rule(t.dim()));
}

std::vector<double> derivative_tuple_values(const DerivativeFn& f, int dim, const Vec& x,
                                            const SeminormSpec& spec) {
  const auto ts = tuples(dim, spec.m, spec.convention);
  std::vector<double> out;
  out.reserve(ts.size());
  if (spec.frame == Frame::Cartesian) {
    for (const auto& t : ts) {
      double w = 1.0;
      for (int i : t) w *= spec.weights.empty() ? 1.0 : spec.weights[static_cast<std::size_t>(i)];
      out.push_back(w * f(x, to_multi(t)));
    }
    return out;
  }
  // Directional: contract the Cartesian derivative tensor with r_{t_1}, ..., r_{t_m}.
  std::map<MultiIndex, double> cart;
  for (const auto& a : multi_indices(dim, spec.m)) cart[a] = f(x, a);
  const auto all = tuples(dim, spec.m, Convention::Tensor);
  for (const auto& t : ts) {
    double v = 0.0;
    for (const auto& j : all) {
      double c = 1.0;
      for (int k = 0; k < spec.m; ++k)
        c *= spec.directions[static_cast<std::size_t>(t[static_cast<std::size_t>(k)])](j[static_cast<std::size_t>(k)]);
      v += c * cart[to_multi(j)];
    }
    double w = 1.0;
    for (int i : t) w *= spec.weights.empty() ? 1.0 : spec.weights[static_cast<std::size_t>(i)];
    out.push_back(w * v);
  }
  return out;
}

double seminorm(const Simplex& t, const DerivativeFn& f, const SeminormSpec& spec,
                const QuadratureRule& rule) {
  const int d = t.dim();
  if (std::isinf(spec.p)) {
    double m = 0.0;
    for (const auto& x : sup_sample_points(t))
      for (double v : derivative_tuple_values(f, d, x, spec)) m = std::max(m, std::abs(v));
    return m;
  }
  double sum = 0.0;
  for (int j = 0; j < rule.size(); ++j) {
    const Vec x = rule.point(t.vertices(), j);
    double acc = 0.0;
    for (double v : derivative_tuple_values(f, d, x, spec)) acc += std::pow(std::abs(v), spec.p);
    sum += rule.weights(j) * acc;
  }
  return std::pow(sum * measure(t), 1.0 / spec.p);
}

double seminorm(const Simplex& t, const ScalarField& f, const SeminormSpec& spec,
                const QuadratureRule& rule) {
  if (spec.m > f.max_order())
    throw MissingDerivative("seminorm of order " + std::to_string(spec.m) + " needs more derivatives");
  return seminorm(t, [&f](const Vec& x, const MultiIndex& a) { return f.derivative(x, a); }, spec, rule);
}

double seminorm(const Simplex& t, const ScalarField& f, const SeminormSpec& spec) {
  return seminorm(t, f, spec, default_rule(t.dim()));
}

double error_seminorm(const Simplex& t, const ScalarField& f, const Interpolant& I,
                      const SeminormSpec& spec, const QuadratureRule& rule) {
  if (spec.m > f.max_order())
    throw MissingDerivative("error seminorm of order " + std::to_string(spec.m) + " needs more derivatives");
  return seminorm(
      t, [&](const Vec& x, const MultiIndex& a) { return f.derivative(x, a) - I.derivative(x, a); }, spec,
      rule);
}

double error_seminorm(const Simplex& t, const ScalarField& f, const Interpolant& I,
                      const SeminormSpec& spec) {
  return error_seminorm(t, f, I, spec, default_rule(t.dim()));
}

SeminormSpec h_seminorm(int m, Convention c) {
  SeminormSpec s;
  s.m = m;
  s.p = 2.0;
  s.convention = c;
  return s;
}

}  // namespace aniso

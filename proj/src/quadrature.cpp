#include "aniso/quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "aniso/errors.hpp"

namespace aniso {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const auto ui = static_cast<std::size_t>(i);
    x[ui] = 0.5 * (1.0 - z);
    w[ui] = 1.0 / ((1.0 - z * z) * dp * dp);
  }
}

namespace {

QuadratureRule build_gauss(int k, int degree) {
  QuadratureRule r;
  r.k = k;
  r.degree = degree;
  if (k == 0) {
    r.nodes = Mat::Ones(1, 1);
    r.weights = Eigen::VectorXd::Ones(1);
    return r;
  }
  // The collapse Jacobian adds up to k-1 to the degree in the outer variable.
  const int n = std::max(1, (degree + k) / 2 + 1);
  std::vector<double> x, w;
  gauss_legendre(n, x, w);
  int total = 1;
  for (int i = 0; i < k; ++i) total *= n;
  r.nodes.resize(total, k + 1);
  r.weights.resize(total);
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  for (int m = 0; m < total; ++m) {
    int rem = m;
    for (int j = 0; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = rem % n;
      rem /= n;
    }
    // Map the cube to the simplex one coordinate at a time.
    double remaining = 1.0, weight = 1.0;
    Eigen::VectorXd bary(k + 1);
    for (int j = 0; j < k; ++j) {
      const auto u = static_cast<std::size_t>(idx[static_cast<std::size_t>(j)]);
      bary(j + 1) = remaining * x[u];
      weight *= w[u] * remaining;
      remaining -= bary(j + 1);
    }
    bary(0) = remaining;
    r.nodes.row(m) = bary.transpose();
    r.weights(m) = weight;
  }
  // Reference simplex has measure 1/k!, normalize to unit total weight.
  r.weights /= r.weights.sum();
  return r;
}

template <class Key>
const QuadratureRule& cached(const Key& key, const std::function<QuadratureRule()>& make) {
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<QuadratureRule>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<QuadratureRule>(make());
  return *slot;
}

}  // namespace

Vec QuadratureRule::point(std::span<const Vec> pts, int j) const {
  Vec x = Vec::Zero(pts[0].size());
  for (int i = 0; i <= k; ++i) x += nodes(j, i) * pts[static_cast<std::size_t>(i)];
  return x;
}

const QuadratureRule& gauss_rule(int k, int degree) {
  if (k < 0 || k > 3 || degree < 0 || degree > 40)
    throw QuadratureFailure("no rule for simplex dimension " + std::to_string(k) + " degree " +
                            std::to_string(degree));
  return cached(std::pair{k, degree}, [&] { return build_gauss(k, degree); });
}

const QuadratureRule& vertex_rule(int k) {
  return cached(std::pair{k, -1}, [&] {
    QuadratureRule r;
    r.k = k;
    r.degree = 1;
    r.nodes = Mat::Identity(k + 1, k + 1);
    r.weights = Eigen::VectorXd::Constant(k + 1, 1.0 / (k + 1));
    return r;
  });
}

const QuadratureRule& edge_midpoint_rule() {
  return cached(std::pair{2, -2}, [] {
    QuadratureRule r;
    r.k = 2;
    r.degree = 2;
    r.nodes.resize(3, 3);
    r.nodes << 0.0, 0.5, 0.5, 0.5, 0.0, 0.5, 0.5, 0.5, 0.0;
    r.weights = Eigen::VectorXd::Constant(3, 1.0 / 3.0);
    return r;
  });
}

int default_degree(int d) {
  if (const char* env = std::getenv("ANISO_QUAD_DEGREE")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 40) return static_cast<int>(v);
  }
  return d == 3 ? 6 : 8;
}

const QuadratureRule& default_rule(int k) { return gauss_rule(k, default_degree(k)); }

double integrate(std::span<const Vec> pts, const ScalarFn& f, const QuadratureRule& rule) {
  double sum = 0.0;
  for (int j = 0; j < rule.size(); ++j) sum += rule.weights(j) * f(rule.point(pts, j));
  return sum * simplex_measure(pts);
}

double integrate(const Simplex& t, const ScalarFn& f, const QuadratureRule& rule) {
  return integrate(std::span<const Vec>(t.vertices()), f, rule);
}

double integrate(const Simplex& t, const ScalarFn& f) {
  return integrate(t, f, default_rule(t.dim()));
}

}  // namespace aniso

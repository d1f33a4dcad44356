#include "aniso/polynomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace aniso {

namespace {

std::vector<MultiIndex> build_monomials(int d, int k) {
  std::vector<MultiIndex> out;
  for (int m = 0; m <= k; ++m) {
    auto level = multi_indices(d, m);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

int index_of(int d, const MultiIndex& a) {
  // Position of a in the graded lex table; tables are nested so any k works.
  const auto& table = monomials(d, order(a));
  const auto it = std::find(table.begin(), table.end(), a);
  return static_cast<int>(it - table.begin());
}

double falling(int n, int k) {
  double f = 1.0;
  for (int i = 0; i < k; ++i) f *= n - i;
  return f;
}

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

std::vector<MultiIndex> multi_indices(int d, int m) {
  std::vector<MultiIndex> out;
  if (d == 1) {
    out.push_back({m, 0, 0});
  } else if (d == 2) {
    for (int a = m; a >= 0; --a) out.push_back({a, m - a, 0});
  } else {
    for (int a = m; a >= 0; --a)
      for (int b = m - a; b >= 0; --b) out.push_back({a, b, m - a - b});
  }
  return out;
}

const std::vector<MultiIndex>& monomials(int d, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<MultiIndex>> cache;
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace({d, k});
  if (inserted) it->second = build_monomials(d, k);
  return it->second;
}

int dim_polynomials(int d, int k) {
  double n = 1.0;
  for (int i = 1; i <= d; ++i) n = n * (k + i) / i;
  return static_cast<int>(n + 0.5);
}

Polynomial::Polynomial(int dim, int degree)
    : dim_(dim), degree_(degree), c_(static_cast<std::size_t>(dim_polynomials(dim, degree)), 0.0) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("polynomial dimension must be 1, 2 or 3");
}

Polynomial Polynomial::constant(int dim, double c) {
  Polynomial p(dim, 0);
  p.c_[0] = c;
  return p;
}

Polynomial Polynomial::affine(double c, const Eigen::VectorXd& g) {
  const int d = static_cast<int>(g.size());
  Polynomial p(d, 1);
  p.c_[0] = c;
  // Degree-one block is x_1, x_2, ... in that order.
  for (int i = 0; i < d; ++i) p.c_[static_cast<std::size_t>(1 + i)] = g(i);
  return p;
}

Polynomial Polynomial::from_terms(int dim, const std::vector<std::pair<MultiIndex, double>>& terms) {
  int k = 0;
  for (const auto& [a, c] : terms) k = std::max(k, order(a));
  Polynomial p(dim, k);
  for (const auto& [a, c] : terms) p.set_coefficient(a, c);
  return p;
}

void Polynomial::set_coefficient(const MultiIndex& a, double c) {
  raise_degree(order(a));
  c_[static_cast<std::size_t>(index_of(dim_, a))] = c;
}

double Polynomial::coefficient(const MultiIndex& a) const {
  if (order(a) > degree_) return 0.0;
  return c_[static_cast<std::size_t>(index_of(dim_, a))];
}

double Polynomial::derivative_at(const Eigen::VectorXd& x, const MultiIndex& a) const {
  for (int j = dim_; j < 3; ++j)
    if (a[static_cast<std::size_t>(j)] != 0) return 0.0;
  const auto& mons = monomials(dim_, degree_);
  double sum = 0.0;
  for (std::size_t n = 0; n < mons.size(); ++n) {
    if (c_[n] == 0.0) continue;
    const auto& e = mons[n];
    double term = c_[n];
    for (int j = 0; j < dim_; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      if (e[uj] < a[uj]) {
        term = 0.0;
        break;
      }
      term *= falling(e[uj], a[uj]) * ipow(x(j), e[uj] - a[uj]);
    }
    sum += term;
  }
  return sum;
}

Eigen::VectorXd Polynomial::gradient_at(const Eigen::VectorXd& x) const {
  Eigen::VectorXd g(dim_);
  for (int j = 0; j < dim_; ++j) {
    MultiIndex a{0, 0, 0};
    a[static_cast<std::size_t>(j)] = 1;
    g(j) = derivative_at(x, a);
  }
  return g;
}

Polynomial Polynomial::derivative(const MultiIndex& a) const {
  const int k = std::max(0, degree_ - order(a));
  Polynomial out(dim_, k);
  const auto& mons = monomials(dim_, degree_);
  for (std::size_t n = 0; n < mons.size(); ++n) {
    if (c_[n] == 0.0) continue;
    MultiIndex e = mons[n];
    double f = c_[n];
    bool zero = false;
    for (std::size_t j = 0; j < 3; ++j) {
      if (e[j] < a[j]) {
        zero = true;
        break;
      }
      f *= falling(e[j], a[j]);
      e[j] -= a[j];
    }
    if (!zero) out.c_[static_cast<std::size_t>(index_of(dim_, e))] += f;
  }
  return out;
}

void Polynomial::raise_degree(int k) {
  if (k <= degree_) return;
  degree_ = k;
  c_.resize(static_cast<std::size_t>(dim_polynomials(dim_, k)), 0.0);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (dim_ == 0) return *this = o;
  raise_degree(o.degree_);
  for (std::size_t n = 0; n < o.c_.size(); ++n) c_[n] += o.c_[n];
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (dim_ == 0) return *this = o * -1.0;
  raise_degree(o.degree_);
  for (std::size_t n = 0; n < o.c_.size(); ++n) c_[n] -= o.c_[n];
  return *this;
}

Polynomial& Polynomial::operator*=(double a) {
  for (double& c : c_) c *= a;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.dim_, a.degree_ + b.degree_);
  const auto& ma = monomials(a.dim_, a.degree_);
  const auto& mb = monomials(b.dim_, b.degree_);
  for (std::size_t i = 0; i < ma.size(); ++i) {
    if (a.c_[i] == 0.0) continue;
    for (std::size_t j = 0; j < mb.size(); ++j) {
      if (b.c_[j] == 0.0) continue;
      const MultiIndex e{ma[i][0] + mb[j][0], ma[i][1] + mb[j][1], ma[i][2] + mb[j][2]};
      out.c_[static_cast<std::size_t>(index_of(a.dim_, e))] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

}  // namespace aniso

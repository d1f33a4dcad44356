#include "aniso/basis.hpp"

#include <algorithm>
#include <cctype>

#include "aniso/errors.hpp"
#include "aniso/quadrature.hpp"

namespace aniso {

namespace {

Vec centroid(const std::vector<Vec>& pts) {
  Vec c = Vec::Zero(pts[0].size());
  for (const auto& p : pts) c += p;
  return c / static_cast<double>(pts.size());
}

double mean_over(const std::vector<Vec>& pts, const ScalarFn& f) {
  if (pts.size() == 1) return f(pts[0]);
  const auto& rule = default_rule(static_cast<int>(pts.size()) - 1);
  double sum = 0.0;
  for (int j = 0; j < rule.size(); ++j) sum += rule.weights(j) * f(rule.point(pts, j));
  return sum;
}

ShapeBasis empty_basis(ElementKind kind, const Simplex& t) {
  return ShapeBasis{kind, t, t.vertex(0), t.edge_matrix().inverse(), {}, {}, {}, {}};
}

// Barycentric coordinates as polynomials in xi. Products of these stay well
// scaled on flat elements, unlike their Cartesian expansions.
std::vector<Polynomial> local_barycentric(int d) {
  std::vector<Polynomial> l{Polynomial::affine(1.0, -Vec::Ones(d))};
  for (int i = 0; i < d; ++i) l.push_back(Polynomial::affine(0.0, Vec::Unit(d, i)));
  return l;
}

// d^a p(L (x - o)) by the chain rule: each x_i derivative is sum_j L(j, i) d/dxi_j.
double local_derivative(const Polynomial& p, const Mat& L, const Vec& o, const Vec& x, const MultiIndex& a) {
  const Vec xi = L * (x - o);
  const int m = order(a);
  if (m == 0) return p(xi);
  const int d = static_cast<int>(L.rows());
  std::vector<int> dirs;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < a[static_cast<std::size_t>(i)]; ++k) dirs.push_back(i);
  if (dirs.back() >= d) return 0.0;
  // walk all xi-index tuples, folding equal multi-indices together
  std::vector<std::pair<MultiIndex, double>> terms;
  std::vector<int> j(static_cast<std::size_t>(m), 0);
  for (;;) {
    double w = 1.0;
    MultiIndex b{0, 0, 0};
    for (int k = 0; k < m; ++k) {
      w *= L(j[static_cast<std::size_t>(k)], dirs[static_cast<std::size_t>(k)]);
      ++b[static_cast<std::size_t>(j[static_cast<std::size_t>(k)])];
    }
    auto it = std::find_if(terms.begin(), terms.end(), [&](const auto& t) { return t.first == b; });
    if (it == terms.end())
      terms.emplace_back(b, w);
    else
      it->second += w;
    int k = 0;
    while (k < m && ++j[static_cast<std::size_t>(k)] == d) j[static_cast<std::size_t>(k++)] = 0;
    if (k == m) break;
  }
  double sum = 0.0;
  for (const auto& [b, w] : terms)
    if (w != 0.0) sum += w * p.derivative_at(xi, b);
  return sum;
}

Dof point_dof(const Vec& x) { return Dof{Dof::Type::Mean, {x}, {}}; }

std::vector<Vec> all_but(const Simplex& t, std::initializer_list<int> skip) {
  std::vector<Vec> out;
  for (int k = 0; k <= t.dim(); ++k)
    if (std::find(skip.begin(), skip.end(), k) == skip.end()) out.push_back(t.vertex(k));
  return out;
}

Mat barycentric_gradients(const Simplex& t) {
  const int d = t.dim();
  const Mat inv = t.edge_matrix().inverse();
  Mat g(d + 1, d);
  g.bottomRows(d) = inv;
  g.row(0) = -inv.colwise().sum();
  return g;
}

}  // namespace

std::string to_string(ElementKind k) {
  switch (k) {
    case ElementKind::P0: return "P0";
    case ElementKind::Lagrange1: return "Lagrange1";
    case ElementKind::Lagrange2: return "Lagrange2";
    case ElementKind::P1Bubble: return "P1Bubble";
    case ElementKind::CR: return "CR";
    case ElementKind::NodalCR: return "NodalCR";
    case ElementKind::Morley: return "Morley";
    case ElementKind::RT0: return "RT0";
  }
  return "?";
}

ElementKind parse_kind(const std::string& name) {
  std::string n = name;
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
  for (auto k : {ElementKind::P0, ElementKind::Lagrange1, ElementKind::Lagrange2, ElementKind::P1Bubble,
                 ElementKind::CR, ElementKind::NodalCR, ElementKind::Morley, ElementKind::RT0}) {
    std::string s = to_string(k);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == n) return k;
  }
  throw UnsupportedKind("unknown element kind '" + name + "'");
}

double apply(const Dof& dof, const ScalarField& f) {
  switch (dof.type) {
    case Dof::Type::Mean:
      return mean_over(dof.support, [&](const Vec& x) { return f(x); });
    case Dof::Type::NormalDerivativeMean:
      return mean_over(dof.support, [&](const Vec& x) { return f.gradient(x).dot(dof.normal); });
    case Dof::Type::Flux:
      break;
  }
  throw UnsupportedKind("flux functional needs a vector field");
}

double apply(const Dof& dof, const VectorField& v) {
  if (dof.type != Dof::Type::Flux) throw UnsupportedKind("scalar functional applied to a vector field");
  return simplex_measure(dof.support) *
         mean_over(dof.support, [&](const Vec& x) { return v(x).dot(dof.normal); });
}

Vec barycentric(const Simplex& t, const Vec& x) {
  const int d = t.dim();
  const Vec y = t.edge_matrix().partialPivLu().solve(x - t.vertex(0));
  Vec l(d + 1);
  l.tail(d) = y;
  l(0) = 1.0 - y.sum();
  return l;
}

std::vector<Polynomial> barycentric_polynomials(const Simplex& t) {
  const Mat g = barycentric_gradients(t);
  std::vector<Polynomial> l;
  for (int i = 0; i <= t.dim(); ++i) l.push_back(Polynomial::affine(i == 0 ? 1.0 : 0.0, g.row(i).transpose()));
  return l;
}

double ShapeBasis::value(int i, const Vec& x) const { return derivative(i, x, {0, 0, 0}); }

double ShapeBasis::derivative(int i, const Vec& x, const MultiIndex& a) const {
  return local_derivative(scalar[static_cast<std::size_t>(i)], to_local, origin, x, a);
}

Vec ShapeBasis::vector_value(int i, const Vec& x) const {
  const auto& comps = vector[static_cast<std::size_t>(i)];
  Vec v(static_cast<Eigen::Index>(comps.size()));
  for (std::size_t c = 0; c < comps.size(); ++c) v(static_cast<Eigen::Index>(c)) = comps[c](x - origin);
  return v;
}

double ShapeBasis::vector_derivative(int i, int c, const Vec& x, const MultiIndex& a) const {
  return vector[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].derivative_at(x - origin, a);
}

ScalarField ShapeBasis::field(int i) const {
  return ScalarField(simplex.dim(), 64,
                     [p = scalar[static_cast<std::size_t>(i)], L = to_local, o = origin](const Vec& x, const MultiIndex& a) {
                       return local_derivative(p, L, o, x, a);
                     });
}

VectorField ShapeBasis::vector_field(int i) const {
  std::vector<ScalarField> comps;
  for (const auto& p : vector[static_cast<std::size_t>(i)]) comps.push_back(polynomial_field(p, origin));
  return VectorField(std::move(comps));
}

ShapeBasis p0_basis(const Simplex& t) {
  auto b = empty_basis(ElementKind::P0, t);
  b.scalar.push_back(Polynomial::constant(t.dim(), 1.0));
  b.dofs.push_back(Dof{Dof::Type::Mean, t.vertices(), {}});
  return b;
}

ShapeBasis lagrange_basis(const Simplex& t, int k) {
  if (k != 1 && k != 2) throw UnsupportedDegree("Lagrange degree " + std::to_string(k) + " not supported");
  const auto l = local_barycentric(t.dim());
  const int n = t.dim() + 1;
  if (k == 1) {
    auto b = empty_basis(ElementKind::Lagrange1, t);
    for (int i = 0; i < n; ++i) {
      b.scalar.push_back(l[static_cast<std::size_t>(i)]);
      b.dofs.push_back(point_dof(t.vertex(i)));
    }
    return b;
  }
  auto b = empty_basis(ElementKind::Lagrange2, t);
  const Polynomial one = Polynomial::constant(t.dim(), 1.0);
  for (int i = 0; i < n; ++i) {
    const auto& li = l[static_cast<std::size_t>(i)];
    b.scalar.push_back(li * (2.0 * li - one));
    b.dofs.push_back(point_dof(t.vertex(i)));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      b.scalar.push_back(4.0 * (l[static_cast<std::size_t>(i)] * l[static_cast<std::size_t>(j)]));
      b.dofs.push_back(point_dof(0.5 * (t.vertex(i) + t.vertex(j))));
    }
  return b;
}

ShapeBasis p1bubble_basis(const Simplex& t) {
  if (t.dim() != 2) throw WrongDimension("P1+bubble element is defined on triangles only");
  const auto l = local_barycentric(2);
  auto b = empty_basis(ElementKind::P1Bubble, t);
  const Polynomial bubble = 27.0 * (l[0] * l[1] * l[2]);
  for (int i = 0; i < 3; ++i) {
    b.scalar.push_back(l[static_cast<std::size_t>(i)] - (1.0 / 3.0) * bubble);
    b.dofs.push_back(point_dof(t.vertex(i)));
  }
  b.scalar.push_back(bubble);
  b.dofs.push_back(point_dof(centroid(t.vertices())));
  return b;
}

ShapeBasis cr_basis(const Simplex& t) {
  const auto l = local_barycentric(t.dim());
  const int d = t.dim();
  auto b = empty_basis(ElementKind::CR, t);
  for (int i = 0; i <= d; ++i) {
    b.scalar.push_back(Polynomial::constant(d, 1.0) - static_cast<double>(d) * l[static_cast<std::size_t>(i)]);
    b.dofs.push_back(Dof{Dof::Type::Mean, facet_vertices(t, i), {}});
  }
  return b;
}

ShapeBasis nodal_cr_basis(const Simplex& t) {
  auto b = cr_basis(t);
  b.kind = ElementKind::NodalCR;
  for (int i = 0; i <= t.dim(); ++i) b.dofs[static_cast<std::size_t>(i)] = point_dof(centroid(facet_vertices(t, i)));
  return b;
}

ShapeBasis morley_basis(const Simplex& t) {
  const int d = t.dim();
  const double dd = d;
  const auto l = local_barycentric(d);
  const Mat g = barycentric_gradients(t);
  const Polynomial one = Polynomial::constant(d, 1.0);
  auto b = empty_basis(ElementKind::Morley, t);
  auto lk = [&](int k) -> const Polynomial& { return l[static_cast<std::size_t>(k)]; };
  // lambda_k (d lambda_k - 2) / 2
  auto q = [&](int k) { return 0.5 * (lk(k) * (dd * lk(k) - 2.0 * one)); };

  for (int i = 0; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      const double gij = g.row(i).dot(g.row(j));
      Polynomial th = one - (dd - 1.0) * (lk(i) + lk(j)) + dd * (dd - 1.0) * (lk(i) * lk(j));
      th -= (dd - 1.0) * gij * ((1.0 / g.row(i).squaredNorm()) * q(i) + (1.0 / g.row(j).squaredNorm()) * q(j));
      b.scalar.push_back(th);
      b.dofs.push_back(Dof{Dof::Type::Mean, all_but(t, {i, j}), {}});
    }
  for (int i = 0; i <= d; ++i) {
    b.scalar.push_back((1.0 / g.row(i).norm()) * q(i));
    b.dofs.push_back(Dof{Dof::Type::NormalDerivativeMean, facet_vertices(t, i), outward_normal(t, i)});
  }
  return b;
}

ShapeBasis rt0_basis(const Simplex& t) {
  const int d = t.dim();
  const double vol = measure(t);
  auto b = empty_basis(ElementKind::RT0, t);
  for (int i = 0; i <= d; ++i) {
    // With outward normals every flux sign is +1.
    const double iota = 1.0;
    const Vec shift = t.vertex(i) - b.origin;
    std::vector<Polynomial> comps;
    for (int c = 0; c < d; ++c) {
      Vec g = Vec::Zero(d);
      g(c) = 1.0;
      comps.push_back(Polynomial::affine(-shift(c), g) * (iota / (d * vol)));
    }
    b.vector.push_back(comps);
    b.iota.push_back(iota);
    b.dofs.push_back(Dof{Dof::Type::Flux, facet_vertices(t, i), outward_normal(t, i)});
  }
  return b;
}

ShapeBasis make_basis(ElementKind kind, const Simplex& t) {
  switch (kind) {
    case ElementKind::P0: return p0_basis(t);
    case ElementKind::Lagrange1: return lagrange_basis(t, 1);
    case ElementKind::Lagrange2: return lagrange_basis(t, 2);
    case ElementKind::P1Bubble: return p1bubble_basis(t);
    case ElementKind::CR: return cr_basis(t);
    case ElementKind::NodalCR: return nodal_cr_basis(t);
    case ElementKind::Morley: return morley_basis(t);
    case ElementKind::RT0: return rt0_basis(t);
  }
  throw UnsupportedKind("unknown element kind");
}

Mat duality_matrix(const ShapeBasis& b) {
  const int n = b.size();
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    if (b.vector_valued()) {
      const auto f = b.vector_field(i);
      for (int j = 0; j < n; ++j) m(j, i) = apply(b.dofs[static_cast<std::size_t>(j)], f);
    } else {
      const auto f = b.field(i);
      for (int j = 0; j < n; ++j) m(j, i) = apply(b.dofs[static_cast<std::size_t>(j)], f);
    }
  }
  return m;
}

}  // namespace aniso

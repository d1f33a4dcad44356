#include "aniso/harness.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "aniso/families.hpp"
#include "aniso/format.hpp"
#include "aniso/interpolation.hpp"
#include "aniso/quality.hpp"
#include "aniso/standardization.hpp"

namespace aniso {

namespace {

ScalarField bubble_phi() {
  // 2x^2 - xy + 3y^2
  return polynomial_field(Polynomial::from_terms(2, {{{2, 0, 0}, 2.0}, {{1, 1, 0}, -1.0}, {{0, 2, 0}, 3.0}}));
}

ScalarField quadratic2d_phi() {
  // x^2 + y^2
  return polynomial_field(Polynomial::from_terms(2, {{{2, 0, 0}, 1.0}, {{0, 2, 0}, 1.0}}));
}

ScalarField lag3d_phi() {
  // x^2 + y^2/4 + z^2
  return polynomial_field(
      Polynomial::from_terms(3, {{{2, 0, 0}, 1.0}, {{0, 2, 0}, 0.25}, {{0, 0, 2}, 1.0}}));
}

const QuadratureRule& rule_for(RuleChoice r, int d) {
  switch (r) {
    case RuleChoice::Vertex: return vertex_rule(d);
    case RuleChoice::EdgeMidpoint:
      if (d != 2) throw std::invalid_argument("edge-midpoint rule exists for triangles only");
      return edge_midpoint_rule();
    case RuleChoice::Default: break;
  }
  return default_rule(d);
}

std::vector<int> doubling(int first, int count) {
  std::vector<int> n;
  for (int i = 0; i < count; ++i) n.push_back(first << i);
  return n;
}

bool near(double a, double b) { return std::abs(a - b) < 1e-12; }

StudyCase p1bubble_case(double eps) {
  StudyCase c;
  c.name = "p1bubble";
  c.description = "P1+bubble on (0,0),(s,0),(0,s^eps), phi = 2x^2 - xy + 3y^2, |phi - I phi|_H1 / |phi|_H2";
  c.generator = [eps](double s) { return right_angled(s, eps); };
  c.phi = bubble_phi();
  c.kind = ElementKind::P1Bubble;
  c.error_spec = h_seminorm(1);
  c.normalization_order = 2;
  c.rule = RuleChoice::EdgeMidpoint;
  c.default_levels = doubling(128, 4);
  if (near(eps, 1.5))
    c.reference = {{128, 2.9951e-02, {}}, {256, 2.1101e-02, 5.0529e-01}, {512, 1.4874e-02, 5.0452e-01},
                   {1024, 1.0491e-02, 5.0364e-01}};
  if (near(eps, 2.0))
    c.reference = {{128, 3.3397e-01, {}}, {256, 3.3366e-01, 1.3398e-03}, {512, 3.3350e-01, 6.9198e-04},
                   {1024, 3.3341e-01, 3.8939e-04}};
  return c;
}

StudyCase lag3d_case_I(double eps, double delta) {
  StudyCase c;
  c.name = "lag3d-I";
  c.description = "P1 Lagrange on (0,0,0),(s,0,0),(0,s^eps,0),(0,0,s^delta), phi = x^2 + y^2/4 + z^2, |phi - I phi|_H1";
  c.generator = [eps, delta](double s) { return lag3d_case1(s, eps, delta); };
  c.phi = lag3d_phi();
  c.kind = ElementKind::Lagrange1;
  c.error_spec = h_seminorm(1);
  c.rule = RuleChoice::Vertex;
  c.default_levels = doubling(64, 3);
  if (near(eps, 3.0) && near(delta, 2.0))
    c.reference = {{64, 2.4336e-08, {}}, {128, 1.5209e-09, 4.00}, {256, 9.5053e-11, 4.00}};
  return c;
}

StudyCase lag3d_case_II(double eps) {
  StudyCase c;
  c.name = "lag3d-II";
  c.description = "P1 Lagrange on (0,0,0),(s,0,0),(s/2,s^eps,0),(0,0,s), phi = x^2 + y^2/4 + z^2, |phi - I phi|_H1";
  c.generator = [eps](double s) { return lag3d_case2(s, eps); };
  c.phi = lag3d_phi();
  c.kind = ElementKind::Lagrange1;
  c.error_spec = h_seminorm(1);
  c.default_levels = doubling(64, 3);
  if (near(eps, 3.0)) c.reference = {{64, 1.9934e-04, {}}, {128, 7.0477e-05, 1.50}, {256, 2.4917e-05, 1.50}};
  if (near(eps, 6.0)) c.reference = {{64, 1.0206e-01, {}}, {128, 1.0206e-01, 0.0}, {256, 1.0206e-01, 0.0}};
  return c;
}

StudyCase lagrange2d_case(const std::string& name, std::function<Simplex(double)> gen, std::string what) {
  StudyCase c;
  c.name = name;
  c.description = "P1 Lagrange on " + what + ", phi = x^2 + y^2, |phi - I phi|_H1 / |phi|_H2";
  c.generator = std::move(gen);
  c.phi = quadratic2d_phi();
  c.kind = ElementKind::Lagrange1;
  c.error_spec = h_seminorm(1);
  c.normalization_order = 2;
  c.default_levels = doubling(32, 6);
  return c;
}

}  // namespace

void validate_levels(const std::vector<int>& Ns) {
  if (Ns.empty()) throw std::invalid_argument("no levels given");
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    const int n = Ns[i];
    if (n < 2 || (n & (n - 1)) != 0)
      throw std::invalid_argument("level " + std::to_string(n) + " is not a power of two >= 2");
    if (i > 0 && n != 2 * Ns[i - 1])
      throw std::invalid_argument("levels must double: " + std::to_string(Ns[i - 1]) + " then " +
                                  std::to_string(n));
  }
}

ConvergenceTable run_study(const StudyCase& c, const std::vector<int>& Ns) {
  validate_levels(Ns);
  ConvergenceTable table{c.name, {}};
  for (int N : Ns) {
    const double s = 1.0 / N;
    const Simplex t = c.generator(s);
    const auto I = interpolate(c.kind, t, c.phi);
    const auto& rule = rule_for(c.rule, t.dim());
    ConvergenceRow row;
    row.N = N;
    row.s = s;
    row.err_unnormalized = error_seminorm(t, c.phi, I, c.error_spec, rule);
    double scale = 1.0;
    if (c.normalization_order > 0) {
      SeminormSpec ns = c.error_spec;
      ns.m = c.normalization_order;
      scale = seminorm(t, c.phi, ns);
    }
    row.err = row.err_unnormalized / scale;
    if (c.rule != RuleChoice::Default)
      row.err_exact_rule = error_seminorm(t, c.phi, I, c.error_spec, default_rule(t.dim())) / scale;
    if (!table.rows.empty()) row.rate = std::log2(table.rows.back().err / row.err);
    table.rows.push_back(row);
  }
  return table;
}

std::vector<StudyCase> builtin_cases() {
  return {builtin_case("p1bubble", 1.5),
          builtin_case("p1bubble", 2.0),
          builtin_case("lag3d-I"),
          builtin_case("lag3d-II", 3.0),
          builtin_case("lag3d-II", 6.0),
          builtin_case("lagrange2d-right"),
          builtin_case("lagrange2d-dagger"),
          builtin_case("lagrange2d-blade")};
}

std::vector<std::string> builtin_names() {
  return {"p1bubble", "lag3d-I", "lag3d-II", "lagrange2d-right", "lagrange2d-dagger", "lagrange2d-blade"};
}

StudyCase builtin_case(const std::string& name, std::optional<double> eps, std::optional<double> delta) {
  if (name == "p1bubble") return p1bubble_case(eps.value_or(1.5));
  if (name == "lag3d-I") return lag3d_case_I(eps.value_or(3.0), delta.value_or(2.0));
  if (name == "lag3d-II") return lag3d_case_II(eps.value_or(3.0));
  if (name == "lagrange2d-right") {
    const double e = eps.value_or(3.0);
    return lagrange2d_case(name, [e](double s) { return right_angled(s, e); }, "(0,0),(s,0),(0,s^eps)");
  }
  if (name == "lagrange2d-dagger") {
    const double e = eps.value_or(1.5), d = delta.value_or(2.0);
    return lagrange2d_case(name, [e, d](double s) { return dagger(s, e, d); }, "(0,0),(s,0),(s^delta,s^eps)");
  }
  if (name == "lagrange2d-blade") {
    const double e = eps.value_or(2.0);
    return lagrange2d_case(name, [e](double s) { return blade(s, e); }, "(0,0),(2s,0),(s,s^eps)");
  }
  throw std::invalid_argument("unknown case '" + name + "'");
}

void write_csv(const ConvergenceTable& t, std::ostream& out) {
  const bool alt = !t.rows.empty() && t.rows.front().err_exact_rule.has_value();
  out << "N,s,Err,r,Err_full" << (alt ? ",Err_default_rule" : "") << '\n';
  for (const auto& r : t.rows) {
    out << r.N << ',' << sig5(r.s) << ',' << sig5(r.err) << ',' << (r.rate ? sig5(*r.rate) : "") << ','
        << shortest(r.err);
    if (alt) out << ',' << shortest(*r.err_exact_rule);
    out << '\n';
  }
}

std::vector<InverseRow> inverse_inequality_check(const std::function<Simplex(double)>& family,
                                                 const std::vector<int>& Ns, int k, double p, double q) {
  std::vector<InverseRow> rows;
  for (int N : Ns) {
    const double s = 1.0 / N;
    const Simplex t = family(s);
    const int d = t.dim();
    const auto S = standardize(t);
    const auto F = factorize(S);
    const auto H = mathscr_h(S).values;
    const Mat Ainv = F.A_T.inverse();
    std::vector<double> c{1.0, 2.0};
    if (d == 3) c.push_back(2.0 * (minimal_M(S) + 1.0));

    // Fixed reference polynomial: all monomials up to degree k with weights 1/(n+1).
    Polynomial ref(d, k);
    for (std::size_t n = 0; n < ref.coefficients().size(); ++n) ref.coefficients()[n] = 1.0 / (n + 1.0);
    const auto phi = push_scalar(F, polynomial_field(ref));

    InverseRow row;
    row.N = N;
    row.s = s;
    const double vol = measure(t);
    const double phi_p = lp_norm(t, [&](const Vec& x) { return phi(x); }, p);
    const double vol_factor = std::pow(vol, (std::isinf(q) ? 0.0 : 1.0 / q) - (std::isinf(p) ? 0.0 : 1.0 / p));
    for (int i = 0; i < d; ++i) {
      double w = 0.0;
      for (int j = 0; j < d; ++j) w += c[static_cast<std::size_t>(j)] * std::abs(Ainv(j, i)) / H[static_cast<std::size_t>(j)];
      MultiIndex a{0, 0, 0};
      a[static_cast<std::size_t>(i)] = 1;
      const double dphi = lp_norm(t, [&](const Vec& x) { return phi.derivative(x, a); }, q);
      row.weight.push_back(w);
      row.ratio.push_back(dphi / (vol_factor * w * phi_p));
    }
    rows.push_back(row);
  }
  return rows;
}

double lagrange_linf_ratio(const Simplex& t, const ScalarField& phi) {
  const int d = t.dim();
  const auto I = interpolate(ElementKind::Lagrange1, t, phi);
  double num = 0.0;
  for (const auto& x : sup_sample_points(t)) num = std::max(num, std::abs(phi(x) - I(x)));

  const auto S = standardize(t);
  const auto r = direction_frame(S).r;
  const auto H = mathscr_h(S).values;
  auto hessian = [&](const Vec& x) {
    Mat h(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        MultiIndex a{0, 0, 0};
        ++a[static_cast<std::size_t>(i)];
        ++a[static_cast<std::size_t>(j)];
        h(i, j) = phi.derivative(x, a);
      }
    return h;
  };
  double den = 0.0;
  for (const auto& g : multi_indices(d, 2)) {
    std::vector<int> dirs;
    double weight = 1.0;
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < g[static_cast<std::size_t>(i)]; ++k) {
        dirs.push_back(i);
        weight *= H[static_cast<std::size_t>(i)];
      }
    const Vec& u = r[static_cast<std::size_t>(dirs[0])];
    const Vec& v = r[static_cast<std::size_t>(dirs[1])];
    den += weight * lp_norm(t, [&](const Vec& x) { return u.dot(hessian(x) * v); }, 2.0);
  }
  return num / (den / std::sqrt(measure(t)));
}

SliverRow sliver_row(double e1, double e2, int N) {
  const double s = 1.0 / N;
  const Simplex t = sliver(s, e1, e2);
  const auto ed = edge_data(t);
  const double h = ed.h_T();
  SliverRow r;
  r.N = N;
  r.s = s;
  r.L6_over_L1 = ed.lengths.back() / ed.lengths.front();
  r.h3_over_vol = h * h * h / measure(t);
  r.Hstar_over_h = H_star(t) / h;
  r.H_over_h = H_parameter(t) / h;
  r.R_over_h = circumradius(t) / h;
  return r;
}

}  // namespace aniso

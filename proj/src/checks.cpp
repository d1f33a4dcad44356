#include "aniso/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "aniso/basis.hpp"
#include "aniso/fields.hpp"
#include "aniso/interpolation.hpp"
#include "aniso/norms.hpp"
#include "aniso/quality.hpp"
#include "aniso/standardization.hpp"

namespace aniso {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

// Collects one measured value per sample and counts violations.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void record(double value, bool ok) {
    ++n_;
    if (!ok) ++bad_;
    if (std::isnan(value)) {
      ++bad_;
      return;
    }
    lo_ = std::min(lo_, value);
    hi_ = std::max(hi_, value);
  }
  void fail() { ++n_, ++bad_; }

  // what: label of the measured value
  CheckResult result(const std::string& what, bool show_range = false) const {
    CheckResult r;
    r.name = name_;
    r.samples = n_;
    r.violations = bad_;
    r.pass = n_ > 0 && bad_ == 0;
    r.worst = hi_;
    r.detail = std::to_string(n_) + " samples, ";
    if (show_range)
      r.detail += what + " in [" + fmt(lo_) + ", " + fmt(hi_) + "]";
    else
      r.detail += "max " + what + " " + fmt(hi_);
    if (bad_ > 0) r.detail += ", " + std::to_string(bad_) + " violations";
    return r;
  }

 private:
  std::string name_;
  int n_ = 0, bad_ = 0;
  double lo_ = std::numeric_limits<double>::infinity();
  double hi_ = -std::numeric_limits<double>::infinity();
};

double uniform(std::mt19937& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

Polynomial random_polynomial(std::mt19937& rng, int d, int k) {
  Polynomial p(d, k);
  for (double& c : p.coefficients()) c = uniform(rng, -1, 1);
  return p;
}

ScalarField random_field(std::mt19937& rng, int d, int k) { return polynomial_field(random_polynomial(rng, d, k)); }

VectorField random_vector_field(std::mt19937& rng, int d, int k) {
  std::vector<ScalarField> c;
  for (int i = 0; i < d; ++i) c.push_back(random_field(rng, d, k));
  return VectorField(std::move(c));
}

ScalarField noisy(std::mt19937& rng, const ScalarField& f) {
  const int d = f.dim();
  Vec k(d);
  for (int i = 0; i < d; ++i) k(i) = uniform(rng, -2, 2);
  return f + plane_wave(0.05, k, uniform(rng, 0, 2 * std::numbers::pi));
}

double orthogonality_error(const Mat& Q) {
  return (Q.transpose() * Q - Mat::Identity(Q.rows(), Q.cols())).norm();
}

double relative(double a, double b, double scale) { return std::abs(a - b) / std::max(scale, 1e-300); }

double boundary_flux_moment(const Simplex& t, const std::function<Vec(const Vec&)>& v, const ScalarFn& phi) {
  const int d = t.dim();
  double sum = 0.0;
  for (int i = 0; i <= d; ++i) {
    const auto pts = facet_vertices(t, i);
    const Vec n = outward_normal(t, i);
    sum += integrate(pts, [&](const Vec& x) { return v(x).dot(n) * phi(x); }, default_rule(d - 1));
  }
  return sum;
}

double dof_error(const Mat& D) { return (D - Mat::Identity(D.rows(), D.cols())).cwiseAbs().maxCoeff(); }

}  // namespace

std::string to_line(const CheckResult& r) {
  return r.name + ": " + (r.pass ? "PASS" : "FAIL") + "  [" + r.detail + "]";
}

Simplex random_simplex(std::mt19937& rng, int d) {
  for (;;) {
    Mat stretch = Mat::Identity(d, d);
    for (int i = 0; i < d; ++i) stretch(i, i) = std::pow(10.0, -uniform(rng, 0, 2));
    Mat g(d, d);
    std::normal_distribution<double> normal;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) g(i, j) = normal(rng);
    const Mat Q = Eigen::HouseholderQR<Mat>(g).householderQ();
    std::vector<Vec> v;
    for (int i = 0; i <= d; ++i) {
      Vec p(d);
      for (int j = 0; j < d; ++j) p(j) = uniform(rng, -1, 1);
      v.push_back(Q * stretch * p);
    }
    // Cartesian round-off grows with h^d/|T|; fixed tolerances need a cap on it.
    Mat E(d, d);
    double h = 0.0;
    for (int i = 0; i < d; ++i) E.col(i) = v[static_cast<std::size_t>(i + 1)] - v[0];
    for (int i = 0; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j) h = std::max(h, (v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)]).norm());
    const double vol = std::abs(E.determinant()) / (d == 2 ? 2.0 : 6.0);
    if (std::pow(h, d) <= kMaxRandomAspect * vol) return Simplex(std::move(v));
  }
}

std::vector<CheckResult> geometry_suite(unsigned seed, int samples) {
  std::mt19937 rng(seed);
  Tally equiv("H_T vs H*_T equivalence");
  Tally h2("h_T <= H_T/2 (d=2)"), h3("h_T < H_T/6 (d=3)");
  Tally ident("H_T sin/product identity");
  Tally det("|det(A~ A^)| = d!|T|"), orth("A_T orthogonality");
  Tally ahat("||A^||_2 = max h_i <= h_T"), atilde("||A~||_2 bound"), cond("cond(A~) vs H_T/h_T");
  Tally frame("r_i = A_T r~_i"), map("reference vertices map to T");
  Tally idem("standardize idempotent"), relabel("relabeling invariance");

  for (int d = 2; d <= 3; ++d) {
    std::vector<int> perm(static_cast<std::size_t>(d + 1));
    std::iota(perm.begin(), perm.end(), 0);
    for (int n = 0; n < samples; ++n) {
      const Simplex t = random_simplex(rng, d);
      const auto ed = edge_data(t);
      const double h = ed.h_T(), vol = measure(t);
      const auto S = standardize(t);
      double prod = 1.0;
      for (double x : S.h) prod *= x;
      const double H = prod / vol * h;
      const double q = H / H_star(t);
      equiv.record(q, q > 0.5 && q < 2.0);

      if (d == 2) {
        h2.record(h / H, h <= 0.5 * H * (1 + 1e-12));
        ident.record(relative(H * S.t, 2 * h, 2 * h), relative(H * S.t, 2 * h, 2 * h) < 1e-10);
      } else {
        h3.record(6 * h / H, 6 * h < H);
        const double e = relative(H * S.t1 * S.t2, 6 * h, 6 * h);
        ident.record(e, e < 1e-10);
      }

      AffineFactorization F;
      try {
        F = factorize(S);
      } catch (const std::exception&) {
        det.fail();
        orth.fail();
        continue;
      }
      const double fact = d == 2 ? 2.0 : 6.0;
      const double de = relative(std::abs((F.A_tilde * F.A_hat).determinant()), fact * vol, fact * vol);
      det.record(de, de < 1e-10);

      Eigen::JacobiSVD<Mat> svd_t(F.A_tilde);
      const auto sv = svd_t.singularValues();
      const double kappa = sv(0) / sv(d - 1);
      const double oe = orthogonality_error(F.A_T);
      orth.record(oe, oe <= 1e-12 * std::max(1.0, kappa));

      const double ah = Eigen::JacobiSVD<Mat>(F.A_hat).singularValues()(0);
      const double hmax = *std::max_element(S.h.begin(), S.h.end());
      ahat.record(relative(ah, hmax, hmax), relative(ah, hmax, hmax) < 1e-12 && hmax <= h * (1 + 1e-12));
      const double abound = d == 2 ? std::sqrt(2.0) : 2.0;
      atilde.record(sv(0) / abound, sv(0) <= abound * (1 + 1e-12));
      const double c = (d == 2 ? 1.0 : 2.0 / 3.0) * H / h;
      cond.record(kappa / c, kappa <= c * (1 + 1e-10));

      const auto fr = direction_frame(S);
      double fe = 0.0;
      for (int i = 0; i < d; ++i)
        fe = std::max(fe, (fr.r[static_cast<std::size_t>(i)] - F.A_T * fr.r_tilde[static_cast<std::size_t>(i)]).norm());
      frame.record(fe, fe < 1e-10);

      const auto ref = reference_vertices(d, S.type);
      double me = 0.0;
      for (int i = 0; i <= d; ++i) me = std::max(me, (F.map(ref[static_cast<std::size_t>(i)]) - S.base.vertex(i)).norm() / h);
      map.record(me, me < 1e-10);

      const auto again = standardize(S.base);
      bool same = true;
      for (int i = 0; i <= d; ++i) same = same && again.order[static_cast<std::size_t>(i)] == i;
      idem.record(same ? 0.0 : 1.0, same || S.flagged);

      std::shuffle(perm.begin(), perm.end(), rng);
      const Simplex r = t.relabeled(perm);
      const auto er = edge_data(r);
      // determinant round-off is relative to h^d, not to |T|
      const double aspect = std::pow(h, d) / vol;
      double re = relative(measure(r), vol, vol) / aspect;
      for (std::size_t i = 0; i < er.lengths.size(); ++i) re = std::max(re, relative(er.lengths[i], ed.lengths[i], h));
      relabel.record(re, re < 1e-14);
    }
  }
  return {equiv.result("H_T/H*_T", true),
          h2.result("h_T/H_T"),
          h3.result("6 h_T/H_T"),
          ident.result("relative error"),
          det.result("relative error"),
          orth.result("||A_T^T A_T - I||"),
          ahat.result("relative error"),
          atilde.result("||A~||_2 / bound"),
          cond.result("cond(A~) / (c H_T/h_T)"),
          frame.result("error"),
          map.result("relative error"),
          idem.result("mismatch"),
          relabel.result("error relative to h_T^d")};
}

std::vector<CheckResult> operator_suite(unsigned seed, int samples) {
  std::mt19937 rng(seed + 1);
  Tally dual("duality matrices = I");
  Tally repro("polynomial reproduction");
  Tally cr("CR commuting residual"), mor("Morley commuting residual"), rt("RT0 commuting residual");
  Tally p_div("Piola div identity"), p_grad("Piola gradient identity"), p_bnd("Piola boundary identity");
  Tally poin("Poincare bound Pi0"), crb("CR h_T/pi bound"), morb("Morley h_T/pi bound");
  Tally linf("Lagrange Linf stability");
  Tally orthp("L2 projection orthogonality"), flux("RT0 flux preservation");

  const std::vector<ElementKind> kinds{ElementKind::P0,     ElementKind::Lagrange1, ElementKind::Lagrange2,
                                       ElementKind::P1Bubble, ElementKind::CR,      ElementKind::NodalCR,
                                       ElementKind::Morley, ElementKind::RT0};
  auto design_degree = [](ElementKind k) {
    switch (k) {
      case ElementKind::P0: return 0;
      case ElementKind::Lagrange2:
      case ElementKind::Morley: return 2;
      default: return 1;
    }
  };

  for (int d = 2; d <= 3; ++d) {
    for (int n = 0; n < samples; ++n) {
      const Simplex t = random_simplex(rng, d);
      const double h = diameter(t);
      const auto pts = sup_sample_points(t);

      double worst_dual = 0.0, worst_repro = 0.0;
      for (ElementKind k : kinds) {
        if (k == ElementKind::P1Bubble && d != 2) continue;
        const auto b = make_basis(k, t);
        worst_dual = std::max(worst_dual, dof_error(duality_matrix(b)));
        if (k == ElementKind::RT0) {
          Vec a(d);
          for (int i = 0; i < d; ++i) a(i) = uniform(rng, -1, 1);
          const double c = uniform(rng, -1, 1);
          std::vector<ScalarField> comps;
          for (int i = 0; i < d; ++i) {
            Vec g = Vec::Zero(d);
            g(i) = c;
            comps.push_back(polynomial_field(Polynomial::affine(a(i), g)));
          }
          const VectorField v(std::move(comps));
          const auto I = rt0_interpolate(t, v);
          for (const auto& x : pts) worst_repro = std::max(worst_repro, (I.vector_value(x) - v(x)).norm());
        } else {
          const auto f = random_field(rng, d, design_degree(k));
          const auto I = interpolate(b, f);
          for (const auto& x : pts) worst_repro = std::max(worst_repro, std::abs(I(x) - f(x)));
        }
      }
      dual.record(worst_dual, worst_dual < 1e-9);
      repro.record(worst_repro, worst_repro < 1e-9);

      const double rc = commuting_residual(ElementKind::CR, t, random_field(rng, d, 3));
      cr.record(rc, rc < 1e-8);
      const double rm = commuting_residual(ElementKind::Morley, t, random_field(rng, d, 4));
      mor.record(rm, rm < 1e-8);
      const auto vq = random_vector_field(rng, d, 2);
      const double rr = commuting_residual(t, vq);
      rt.record(rr, rr < 1e-8);

      {
        const auto If = rt0_interpolate(t, vq);
        double fe = 0.0, scale = 0.0;
        for (int i = 0; i <= d; ++i) {
          const auto fp = facet_vertices(t, i);
          const Vec nn = outward_normal(t, i);
          const double a = integrate(fp, [&](const Vec& x) { return vq(x).dot(nn); }, default_rule(d - 1));
          const double b = integrate(fp, [&](const Vec& x) { return If.vector_value(x).dot(nn); }, default_rule(d - 1));
          fe = std::max(fe, std::abs(a - b));
          scale = std::max(scale, std::abs(a));
        }
        flux.record(fe / std::max(scale, 1e-300), fe <= 1e-10 * std::max(scale, 1e-300));
      }

      // Piola: reference fields pushed to T, integrals compared on both sides.
      {
        const auto S = standardize(t);
        const auto F = factorize(S);
        const Simplex ref(reference_vertices(d, S.type));
        const auto vh = random_vector_field(rng, d, 2);
        const auto ph = random_field(rng, d, 2);
        const auto v = piola_push(F, vh);
        const auto phi = push_scalar(F, ph);
        const double sgn = F.matrix().determinant() > 0 ? 1.0 : -1.0;

        const double lhs1 = integrate(t, [&](const Vec& x) { return v.divergence(x) * phi(x); });
        const double rhs1 = integrate(ref, [&](const Vec& x) { return vh.divergence(x) * ph(x); });
        const double sc1 = integrate(ref, [&](const Vec& x) { return std::abs(vh.divergence(x) * ph(x)); });
        const double e1 = relative(lhs1, sgn * rhs1, sc1);
        p_div.record(e1, e1 < 1e-9);

        const double lhs2 = integrate(t, [&](const Vec& x) { return v(x).dot(phi.gradient(x)); });
        const double rhs2 = integrate(ref, [&](const Vec& x) { return vh(x).dot(ph.gradient(x)); });
        const double sc2 = integrate(ref, [&](const Vec& x) { return std::abs(vh(x).dot(ph.gradient(x))); });
        const double e2 = relative(lhs2, sgn * rhs2, sc2);
        p_grad.record(e2, e2 < 1e-9);

        const double lhs3 = boundary_flux_moment(t, [&](const Vec& x) { return v(x); }, [&](const Vec& x) { return phi(x); });
        const double rhs3 = boundary_flux_moment(ref, [&](const Vec& x) { return vh(x); }, [&](const Vec& x) { return ph(x); });
        const double e3 = relative(lhs3, sgn * rhs3, sc1 + sc2);
        p_bnd.record(e3, e3 < 1e-9);
      }

      {
        const auto f = random_field(rng, d, 2);
        const auto P = l2_project(t, f, 0);
        const double lhs = lp_norm(t, [&](const Vec& x) { return P(x) - f(x); }, 2.0);
        const double rhs = h / std::numbers::pi * seminorm(t, f, h_seminorm(1));
        poin.record(lhs / rhs, lhs <= rhs * (1 + 1e-10));
      }
      {
        const auto f = noisy(rng, random_field(rng, d, 2));
        const auto I = interpolate(ElementKind::CR, t, f);
        const double lhs = error_seminorm(t, f, I, h_seminorm(1));
        const double rhs = h / std::numbers::pi * seminorm(t, f, h_seminorm(2));
        crb.record(lhs / rhs, lhs <= rhs * (1 + 1e-10));
      }
      {
        const auto f = noisy(rng, random_field(rng, d, 3));
        const auto I = interpolate(ElementKind::Morley, t, f);
        const double lhs = error_seminorm(t, f, I, h_seminorm(2));
        const double rhs = h / std::numbers::pi * seminorm(t, f, h_seminorm(3));
        morb.record(lhs / rhs, lhs <= rhs * (1 + 1e-10));
      }
      {
        const auto f = random_field(rng, d, 2);
        const auto I = interpolate(ElementKind::Lagrange1, t, f);
        double err = 0.0, sup = 0.0;
        for (const auto& x : pts) {
          err = std::max(err, std::abs(f(x) - I(x)));
          sup = std::max(sup, std::abs(f(x)));
        }
        linf.record(err / sup, err <= (d + 2) * sup);
      }
      {
        const auto f = random_field(rng, d, 3);
        const auto P = l2_project(t, f, 1);
        const auto lam = barycentric_polynomials(t);
        const Vec o = t.vertex(0);
        double worst = 0.0;
        const double scale = lp_norm(t, [&](const Vec& x) { return f(x); }, 1.0);
        for (const auto& l : lam) {
          const double r = integrate(t, [&](const Vec& x) { return (P(x) - f(x)) * l(x - o); });
          worst = std::max(worst, std::abs(r) / std::max(scale, 1e-300));
        }
        orthp.record(worst, worst < 1e-10);
      }
    }
  }
  return {dual.result("|D - I|"),
          repro.result("pointwise error"),
          cr.result("residual"),
          mor.result("residual"),
          rt.result("residual"),
          p_div.result("relative error"),
          p_grad.result("relative error"),
          p_bnd.result("relative error"),
          poin.result("lhs/rhs"),
          crb.result("lhs/rhs"),
          morb.result("lhs/rhs"),
          linf.result("measured c"),
          orthp.result("relative residual"),
          flux.result("relative error")};
}

std::vector<CheckResult> run_suite(const std::string& suite, unsigned seed, int samples) {
  if (suite == "geometry") return geometry_suite(seed, samples);
  if (suite == "operators") return operator_suite(seed, samples);
  if (suite == "all") {
    auto a = geometry_suite(seed, samples);
    auto b = operator_suite(seed, samples);
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }
  throw std::invalid_argument("unknown suite '" + suite + "' (geometry, operators, all)");
}

}  // namespace aniso

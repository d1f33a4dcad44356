#pragma once

// Convergence studies on single-element families and related tables.

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aniso/basis.hpp"
#include "aniso/fields.hpp"
#include "aniso/norms.hpp"

namespace aniso {

enum class RuleChoice { Default, Vertex, EdgeMidpoint };

struct ReferenceRow {
  int N;
  double err;
  std::optional<double> rate;
};

struct StudyCase {
  std::string name;
  std::string description;
  std::function<Simplex(double)> generator;
  ScalarField phi;
  ElementKind kind = ElementKind::Lagrange1;
  SeminormSpec error_spec;
  int normalization_order = 0;  // 0: none, l: divide by |phi|_{W^{l,p}}
  RuleChoice rule = RuleChoice::Default;
  std::vector<int> default_levels;
  std::vector<ReferenceRow> reference;  // reference values, when the case has them
};

struct ConvergenceRow {
  int N = 0;
  double s = 0;
  double err = 0;                 // normalized if the case asks for it
  std::optional<double> rate;     // log2(err_{N/2} / err_N), from the second row on
  double err_unnormalized = 0;
  std::optional<double> err_exact_rule;  // err with the default rule when the case uses another
};

struct ConvergenceTable {
  std::string case_name;
  std::vector<ConvergenceRow> rows;
};

/// Throws std::invalid_argument unless Ns is non-empty and each entry is a power
/// of two exactly twice the previous one.
void validate_levels(const std::vector<int>& Ns);

ConvergenceTable run_study(const StudyCase& c, const std::vector<int>& Ns);

/// Names: p1bubble (eps 1.5 | 2.0), lag3d-I (eps 3, delta 2), lag3d-II (eps 3 | 6),
/// lagrange2d-right, lagrange2d-dagger, lagrange2d-blade.
std::vector<StudyCase> builtin_cases();
/// Builtin by name with optional parameter overrides; throws std::invalid_argument.
StudyCase builtin_case(const std::string& name, std::optional<double> eps = {},
                       std::optional<double> delta = {});
std::vector<std::string> builtin_names();

/// N,s,Err,r,Err_full[,Err_default_rule]
void write_csv(const ConvergenceTable& t, std::ostream& out);

struct InverseRow {
  int N = 0;
  double s = 0;
  std::vector<double> ratio;   // per x_i
  std::vector<double> weight;  // sum_j c_j |(A_T^-1)_ji| / H~_j
};

/// Measured ||d phi_h/dx_i||_q / (|T|^(1/q-1/p) weight_i ||phi_h||_p) for a fixed
/// reference polynomial of degree k pushed to each element.
std::vector<InverseRow> inverse_inequality_check(const std::function<Simplex(double)>& family,
                                                 const std::vector<int>& Ns, int k = 1, double p = 2.0,
                                                 double q = 2.0);

/// ||phi - I^L phi||_Linf / (|T|^(-1/2) sum_{|g|=2} H~^g ||d_r^g phi||_L2), with
/// d_r the derivatives along the standardized directions r_i.
double lagrange_linf_ratio(const Simplex& t, const ScalarField& phi);

struct SliverRow {
  int N = 0;
  double s = 0;
  double L6_over_L1 = 0;
  double h3_over_vol = 0;
  double Hstar_over_h = 0;  // the tabulated H/h column
  double H_over_h = 0;      // (prod h_i / |T|) h_T / h_T
  double R_over_h = 0;
};

SliverRow sliver_row(double e1, double e2, int N);

}  // namespace aniso

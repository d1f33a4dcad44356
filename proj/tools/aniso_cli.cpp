// aniso: quality reports, classification, mesh tables, convergence studies
// and property suites on the command line.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aniso/checks.hpp"
#include "aniso/errors.hpp"
#include "aniso/families.hpp"
#include "aniso/format.hpp"
#include "aniso/harness.hpp"
#include "aniso/meshes.hpp"
#include "aniso/quality.hpp"

namespace {

using namespace aniso;

// Thrown for bad flag values that CLI11 cannot catch by itself.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<double> parse_numbers(const std::string& text) {
  std::string s = text;
  for (char& c : s)
    if (c == ',' || c == ';') c = ' ';
  std::istringstream in(s);
  in.imbue(std::locale::classic());
  std::vector<double> v;
  double x;
  while (in >> x) v.push_back(x);
  if (!in.eof()) throw UsageError("cannot parse vertex list '" + text + "'");
  return v;
}

void print_quality(const Mesh& m, double gamma0, std::ostream& out) {
  const auto q = quality(m, true, gamma0);
  write_quality_csv(q, out);
  out << "MinAngle," << table_style(q.min_angle_metric) << '\n';
  out << "MaxAngle," << table_style(q.max_angle_metric) << '\n';
}

int cmd_quality(const std::optional<std::string>& mesh_path, const std::optional<std::string>& family,
                std::optional<int> n, const std::optional<std::string>& diagonal,
                const std::optional<std::string>& out_path, double gamma0) {
  Mesh m;
  if (mesh_path) {
    if (family || n) throw UsageError("--mesh excludes --family/--n");
    m = read_mesh(*mesh_path);
  } else {
    if (!family || !n) throw UsageError("give --mesh, or --family together with --n");
    const Family f = parse_family(*family);
    m = diagonal ? generate(f, *n, parse_diagonal_rule(*diagonal)) : generate(f, *n);
  }
  if (out_path) {
    std::ofstream out(*out_path);
    if (!out) throw Error("cannot open '" + *out_path + "' for writing");
    print_quality(m, gamma0, out);
  } else {
    print_quality(m, gamma0, std::cout);
  }
  return 0;
}

int cmd_classify(const std::string& vertices, double gamma0) {
  const auto v = parse_numbers(vertices);
  std::optional<Simplex> t;
  if (v.size() == 6) {
    t = make_triangle(v[0], v[1], v[2], v[3], v[4], v[5]);
  } else if (v.size() == 12) {
    t = make_tetrahedron({{{v[0], v[1], v[2]}, {v[3], v[4], v[5]}, {v[6], v[7], v[8]}, {v[9], v[10], v[11]}}});
  } else {
    throw UsageError("expected 6 (triangle) or 12 (tetrahedron) coordinates, got " + std::to_string(v.size()));
  }
  const auto r = condition_report(*t, gamma0);
  std::cout << "key,value\n"
            << "h_T," << shortest(r.h_T) << '\n'
            << "H_T," << shortest(r.H_T) << '\n'
            << "H*_T," << shortest(r.H_star) << '\n'
            << "H_T/h_T," << shortest(r.ratio_new) << '\n'
            << "h_T^d/|T|," << shortest(r.ratio_classic) << '\n'
            << "hmax/hmin," << shortest(r.hmax_over_hmin) << '\n'
            << "R/h_T," << shortest(r.R_over_h) << '\n'
            << "max_angle," << shortest(r.max_angle) << '\n';
  if (r.max_dihedral) std::cout << "max_dihedral," << shortest(*r.max_dihedral) << '\n';
  std::cout << "good," << (r.ratio_new <= gamma0 ? "yes" : "no") << '\n'
            << "classification," << to_string(r.classification) << '\n';
  return 0;
}

int cmd_mesh_table(const std::vector<std::string>& families, const std::vector<int>& Ns,
                   const std::optional<std::string>& diagonal) {
  std::vector<Family> fs;
  for (const auto& f : families) fs.push_back(parse_family(f));
  std::cout << "family,N,MinAngle,MaxAngle,min_angle_cell,max_angle_cell\n";
  for (Family f : fs) {
    for (int N : Ns) {
      const Mesh m = diagonal ? generate(f, N, parse_diagonal_rule(*diagonal)) : generate(f, N);
      const auto q = quality(m, false);
      std::cout << to_string(f) << ',' << N << ',' << table_style(q.min_angle_metric) << ','
                << table_style(q.max_angle_metric) << ',' << q.min_angle_cell << ',' << q.max_angle_cell << '\n';
    }
  }
  return 0;
}

int cmd_converge(const std::string& name, std::optional<double> eps, std::optional<double> delta,
                 std::vector<int> levels, const std::optional<std::string>& out_path) {
  StudyCase c;
  try {
    c = builtin_case(name, eps, delta);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (levels.empty()) levels = c.default_levels;
  try {
    validate_levels(levels);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto table = run_study(c, levels);
  if (out_path) {
    std::ofstream out(*out_path);
    if (!out) throw Error("cannot open '" + *out_path + "' for writing");
    write_csv(table, out);
  } else {
    write_csv(table, std::cout);
  }
  return 0;
}

int cmd_probe(const std::string& family, const std::vector<int>& levels) {
  std::function<Simplex(double)> gen;
  try {
    gen = named_family(family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto rep = equivalence_probe(gen, levels);
  std::cout << "k,s,angle,H_T/h_T\n";
  for (const auto& r : rep.rows)
    std::cout << r.k << ',' << sig5(r.s) << ',' << sig5(r.angle) << ',' << sig5(r.ratio) << '\n';
  std::cout << "angle_diverges," << (rep.angle_diverges ? "yes" : "no") << '\n'
            << "ratio_diverges," << (rep.ratio_diverges ? "yes" : "no") << '\n'
            << "verdict," << rep.verdict << '\n';
  return 0;
}

int cmd_check(const std::string& suite, unsigned seed, int samples) {
  std::vector<CheckResult> results;
  try {
    results = run_suite(suite, seed, samples);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << "suite: " << suite << "\nseed: " << seed << '\n';
  int failed = 0;
  for (const auto& r : results) {
    std::cout << to_line(r) << '\n';
    if (!r.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all invariants hold" : std::to_string(failed) + " invariant(s) failed") << '\n';
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::cout.imbue(std::locale::classic());
  CLI::App app{"Anisotropic simplex quality and interpolation toolkit", "aniso"};
  app.require_subcommand(1);

  double gamma0 = kDefaultGamma0;

  auto* quality_cmd = app.add_subcommand("quality", "Per-element quality CSV with MinAngle/MaxAngle footer");
  std::optional<std::string> mesh_path, family, diagonal, out_path;
  std::optional<int> n;
  quality_cmd->add_option("--mesh", mesh_path, "Mesh file (dim nv nc header)");
  quality_cmd->add_option("--family", family, "Mesh family I..VI");
  quality_cmd->add_option("--n", n, "Cells per direction");
  quality_cmd->add_option("--diagonal", diagonal, "ll-ur | lr-ul | staggered");
  quality_cmd->add_option("--out", out_path, "Write CSV here instead of stdout");
  quality_cmd->add_option("--gamma0", gamma0, "Good/bad threshold on H_T/h_T");

  auto* classify_cmd = app.add_subcommand("classify", "Quality parameters and taxonomy of one simplex");
  std::string vertices;
  classify_cmd->add_option("--vertices", vertices, "Coordinates, e.g. \"0,0 1,0 0,0.01\"")->required();
  classify_cmd->add_option("--gamma0", gamma0, "Good/bad threshold on H_T/h_T");

  auto* table_cmd = app.add_subcommand("mesh-table", "MinAngle/MaxAngle metrics for mesh families");
  std::vector<std::string> families{"I", "II", "III", "IV", "V", "VI"};
  std::vector<int> table_ns{32, 64, 128};
  std::optional<std::string> table_diagonal;
  table_cmd->add_option("--families", families, "Comma separated families")->delimiter(',');
  table_cmd->add_option("--n", table_ns, "Comma separated N values")->delimiter(',');
  table_cmd->add_option("--diagonal", table_diagonal, "Override the diagonal rule");

  auto* converge_cmd = app.add_subcommand("converge", "Convergence table for a builtin case");
  std::string case_name;
  std::optional<double> eps, delta;
  std::vector<int> levels;
  std::optional<std::string> converge_out;
  converge_cmd->add_option("--case", case_name, "Case name")->required();
  converge_cmd->add_option("--eps", eps, "Family exponent epsilon");
  converge_cmd->add_option("--delta", delta, "Family exponent delta");
  converge_cmd->add_option("--levels", levels, "Doubling powers of two, e.g. 128,256,512")->delimiter(',');
  converge_cmd->add_option("--out", converge_out, "Write CSV here instead of stdout");

  auto* probe_cmd = app.add_subcommand("probe", "Sweep a family and compare angle and H_T/h_T growth");
  std::string probe_family;
  std::vector<int> probe_levels{2, 4, 6, 8, 10};
  probe_cmd->add_option("--family", probe_family, "right-angled | dagger-good | dagger-bad | blade | sliver | dagger-tet")
      ->required();
  probe_cmd->add_option("--levels", probe_levels, "Exponents k with s = 2^-k")->delimiter(',');

  auto* check_cmd = app.add_subcommand("check", "Randomized invariant suites");
  std::string suite = "all";
  unsigned seed = 42;
  int samples = 1000;
  check_cmd->add_option("--suite", suite, "geometry | operators | all");
  check_cmd->add_option("--seed", seed, "Random seed");
  check_cmd->add_option("--samples", samples, "Simplices per dimension")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*quality_cmd) return cmd_quality(mesh_path, family, n, diagonal, out_path, gamma0);
    if (*classify_cmd) return cmd_classify(vertices, gamma0);
    if (*table_cmd) return cmd_mesh_table(families, table_ns, table_diagonal);
    if (*converge_cmd) return cmd_converge(case_name, eps, delta, levels, converge_out);
    if (*probe_cmd) return cmd_probe(probe_family, probe_levels);
    if (*check_cmd) return cmd_check(suite, seed, samples);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    // unparseable family or diagonal names
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

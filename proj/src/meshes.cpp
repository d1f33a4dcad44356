#include "aniso/meshes.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "aniso/errors.hpp"
#include "aniso/format.hpp"

namespace aniso {

namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  return s;
}

bool is_shishkin(Family f) { return f == Family::II || f == Family::V; }

std::vector<double> uniform(int N) {
  std::vector<double> x(static_cast<std::size_t>(N + 1));
  for (int i = 0; i <= N; ++i) x[static_cast<std::size_t>(i)] = static_cast<double>(i) / N;
  return x;
}

std::vector<double> shishkin(int N) {
  const double tau = shishkin_tau(N);
  std::vector<double> x(static_cast<std::size_t>(N + 1));
  for (int i = 0; i <= N; ++i) {
    x[static_cast<std::size_t>(i)] =
        i <= N / 2 ? tau * 2.0 * i / N : tau + (1.0 - tau) * 2.0 * (i - N / 2) / N;
  }
  return x;
}

std::vector<double> cosine(int N) {
  std::vector<double> x(static_cast<std::size_t>(N + 1));
  for (int i = 0; i <= N; ++i)
    x[static_cast<std::size_t>(i)] = 0.5 * (1.0 - std::cos(i * std::numbers::pi / N));
  x.front() = 0.0;
  x.back() = 1.0;
  return x;
}

std::vector<double> graded(int N) {
  std::vector<double> x(static_cast<std::size_t>(N + 1));
  for (int i = 0; i <= N; ++i) {
    const double u = static_cast<double>(i) / N;
    x[static_cast<std::size_t>(i)] = u * u;
  }
  return x;
}

Mesh tensor_mesh(const std::vector<double>& xs, const std::vector<double>& ys, DiagonalRule rule) {
  Mesh m;
  const int nx = static_cast<int>(xs.size()), ny = static_cast<int>(ys.size());
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      m.vertices.push_back(Eigen::Vector2d(xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(j)]));
  auto id = [nx](int i, int j) { return j * nx + i; };
  for (int j = 0; j + 1 < ny; ++j)
    for (int i = 0; i + 1 < nx; ++i) {
      const int a = id(i, j), b = id(i + 1, j), c = id(i, j + 1), d = id(i + 1, j + 1);
      if (rule == DiagonalRule::LowerLeftUpperRight) {
        m.cells.push_back({a, b, d});
        m.cells.push_back({a, d, c});
      } else {
        m.cells.push_back({a, b, c});
        m.cells.push_back({b, d, c});
      }
    }
  return m;
}

// Rows alternate between the regular x-grid and the grid shifted by half a
// cell (with the two side nodes kept). Adjacent rows are zipped together.
Mesh staggered_mesh(const std::vector<double>& xs, const std::vector<double>& ys) {
  Mesh m;
  std::vector<std::vector<int>> rows;
  for (std::size_t j = 0; j < ys.size(); ++j) {
    std::vector<double> row;
    if (j % 2 == 0) {
      row = xs;
    } else {
      row.push_back(xs.front());
      for (std::size_t i = 0; i + 1 < xs.size(); ++i) row.push_back(0.5 * (xs[i] + xs[i + 1]));
      row.push_back(xs.back());
    }
    std::vector<int> ids;
    for (double x : row) {
      ids.push_back(static_cast<int>(m.vertices.size()));
      m.vertices.push_back(Eigen::Vector2d(x, ys[j]));
    }
    rows.push_back(ids);
  }
  auto xof = [&](int v) { return m.vertices[static_cast<std::size_t>(v)](0); };
  for (std::size_t j = 0; j + 1 < rows.size(); ++j) {
    const auto& lo = rows[j];
    const auto& hi = rows[j + 1];
    const bool lo_regular = j % 2 == 0;
    std::size_t a = 0, b = 0;
    while (a + 1 < lo.size() || b + 1 < hi.size()) {
      bool advance_lo;
      if (a + 1 == lo.size()) {
        advance_lo = false;
      } else if (b + 1 == hi.size()) {
        advance_lo = true;
      } else {
        const double xa = xof(lo[a + 1]), xb = xof(hi[b + 1]);
        // On ties advance the regular row, which keeps the side cells right-angled.
        advance_lo = xa < xb || (xa == xb && lo_regular);
      }
      // Counter-clockwise: lower edge left to right, upper edge right to left.
      if (advance_lo) {
        m.cells.push_back({lo[a], lo[a + 1], hi[b]});
        ++a;
      } else {
        m.cells.push_back({lo[a], hi[b + 1], hi[b]});
        ++b;
      }
    }
  }
  return m;
}

}  // namespace

std::string to_string(Family f) {
  static const char* names[] = {"I", "II", "III", "IV", "V", "VI"};
  return names[static_cast<int>(f)];
}

Family parse_family(const std::string& s) {
  const std::string u = upper(s);
  static const std::map<std::string, Family> names{
      {"I", Family::I},   {"II", Family::II}, {"III", Family::III}, {"IV", Family::IV}, {"V", Family::V},
      {"VI", Family::VI}, {"1", Family::I},   {"2", Family::II},    {"3", Family::III}, {"4", Family::IV},
      {"5", Family::V},   {"6", Family::VI}};
  const auto it = names.find(u);
  if (it == names.end()) throw std::invalid_argument("unknown mesh family '" + s + "' (expected I..VI)");
  return it->second;
}

std::string to_string(DiagonalRule r) {
  switch (r) {
    case DiagonalRule::LowerLeftUpperRight: return "ll-ur";
    case DiagonalRule::LowerRightUpperLeft: return "lr-ul";
    case DiagonalRule::Staggered: return "staggered";
  }
  return "?";
}

DiagonalRule parse_diagonal_rule(const std::string& s) {
  for (auto r : {DiagonalRule::LowerLeftUpperRight, DiagonalRule::LowerRightUpperLeft, DiagonalRule::Staggered})
    if (to_string(r) == s) return r;
  throw std::invalid_argument("unknown diagonal rule '" + s + "' (expected ll-ur, lr-ul, staggered)");
}

DiagonalRule default_diagonal(Family f) {
  return (f == Family::V || f == Family::VI) ? DiagonalRule::Staggered : DiagonalRule::LowerLeftUpperRight;
}

Simplex Mesh::cell(std::size_t c) const {
  std::vector<Vec> v;
  for (int i : cells[c]) v.push_back(vertices[static_cast<std::size_t>(i)]);
  return Simplex(std::move(v));
}

double shishkin_tau(int N) { return 2.0 * kShishkinDelta * std::abs(std::log(static_cast<double>(N))); }

std::vector<double> grid_coordinates(Family f, int N, int axis) {
  switch (f) {
    case Family::I: return uniform(N);
    case Family::III: return cosine(N);
    case Family::II:
    case Family::V: return axis == 0 ? uniform(N) : shishkin(N);
    case Family::IV:
    case Family::VI: return axis == 0 ? uniform(N) : graded(N);
  }
  return uniform(N);
}

Mesh generate(Family f, int N) { return generate(f, N, default_diagonal(f)); }

Mesh generate(Family f, int N, DiagonalRule rule) {
  if (N < 2) throw InvalidN("N must be at least 2, got " + std::to_string(N));
  if (is_shishkin(f) && N % 2 != 0) throw InvalidN("Shishkin families need even N, got " + std::to_string(N));
  const auto xs = grid_coordinates(f, N, 0);
  const auto ys = grid_coordinates(f, N, 1);
  if (rule == DiagonalRule::Staggered) return staggered_mesh(xs, ys);
  return tensor_mesh(xs, ys, rule);
}

double total_measure(const Mesh& m) {
  double s = 0.0;
  for (std::size_t c = 0; c < m.cells.size(); ++c) {
    std::vector<Vec> v;
    for (int i : m.cells[c]) v.push_back(m.vertices[static_cast<std::size_t>(i)]);
    s += simplex_measure(v);
  }
  return s;
}

MeshQuality quality(const Mesh& m, bool with_reports, double gamma0) {
  const auto conf = conformity_check(m);
  if (!conf.conformal())
    throw NonConformal("mesh is not conformal: " + conf.violations.front().describe() + " (" +
                       std::to_string(conf.violations.size()) + " violations)");

  const std::size_t n = m.cells.size();
  std::vector<double> min_metric(n), max_metric(n);
  MeshQuality q;
  if (with_reports) q.reports.resize(n);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      const Simplex t = m.cell(c);
      const auto ed = edge_data(t);
      const double vol = measure(t);
      min_metric[c] = ed.lengths[2] * ed.lengths[2] / vol;
      max_metric[c] = ed.lengths[0] * ed.lengths[1] / vol;
      if (with_reports) q.reports[c] = condition_report(t, gamma0);
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  if (threads == 1 || n < 1024) {
    work(0, n);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (std::size_t b = 0; b < n; b += chunk) pool.emplace_back(work, b, std::min(n, b + chunk));
    for (auto& th : pool) th.join();
  }
  // Serial max-reduction keeps the reported culprit deterministic.
  for (std::size_t c = 0; c < n; ++c) {
    if (min_metric[c] > q.min_angle_metric) {
      q.min_angle_metric = min_metric[c];
      q.min_angle_cell = c;
    }
    if (max_metric[c] > q.max_angle_metric) {
      q.max_angle_metric = max_metric[c];
      q.max_angle_cell = c;
    }
  }
  return q;
}

std::string Violation::describe() const {
  std::ostringstream os;
  auto list = [&](const auto& v) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  };
  switch (kind) {
    case Kind::OverShared: os << "facet ["; list(facet); os << "] shared by " << cells.size() << " cells"; break;
    case Kind::DuplicateCell: os << "duplicate cells ["; list(cells); os << "]"; break;
    case Kind::HangingNode:
      os << "hanging node " << vertex << " on boundary facet [";
      list(facet);
      os << "] of cell " << cells.front();
      break;
  }
  return os.str();
}

ConformityReport conformity_check(const Mesh& m) {
  ConformityReport rep;
  std::map<std::vector<int>, std::vector<std::size_t>> facets;
  std::map<std::vector<int>, std::vector<std::size_t>> seen_cells;
  for (std::size_t c = 0; c < m.cells.size(); ++c) {
    auto cell = m.cells[c];
    std::sort(cell.begin(), cell.end());
    seen_cells[cell].push_back(c);
    for (std::size_t skip = 0; skip < cell.size(); ++skip) {
      std::vector<int> f;
      for (std::size_t k = 0; k < cell.size(); ++k)
        if (k != skip) f.push_back(cell[k]);
      facets[f].push_back(c);
    }
  }
  for (const auto& [cell, ids] : seen_cells)
    if (ids.size() > 1) rep.violations.push_back({Violation::Kind::DuplicateCell, cell, ids});
  for (const auto& [f, ids] : facets)
    if (ids.size() > 2) rep.violations.push_back({Violation::Kind::OverShared, f, ids});

  // A vertex strictly inside a facet that has no neighbour is a hanging node.
  const double eps = 1e-12;
  for (const auto& [f, ids] : facets) {
    if (ids.size() != 1) continue;
    std::vector<Vec> pts;
    for (int v : f) pts.push_back(m.vertices[static_cast<std::size_t>(v)]);
    Vec lo = pts[0], hi = pts[0];
    for (const auto& p : pts) {
      lo = lo.cwiseMin(p);
      hi = hi.cwiseMax(p);
    }
    const double scale = (hi - lo).norm();
    const Vec pad = Vec::Constant(lo.size(), eps * scale);
    for (std::size_t v = 0; v < m.vertices.size(); ++v) {
      if (std::find(f.begin(), f.end(), static_cast<int>(v)) != f.end()) continue;
      const Vec& x = m.vertices[v];
      if ((x.array() < (lo - pad).array()).any() || (x.array() > (hi + pad).array()).any()) continue;
      bool inside = false;
      if (m.dim == 2) {
        const Vec e = pts[1] - pts[0];
        const Vec r = x - pts[0];
        const double cross = e(0) * r(1) - e(1) * r(0);
        const double u = r.dot(e) / e.squaredNorm();
        inside = std::abs(cross) <= eps * e.squaredNorm() && u > eps && u < 1.0 - eps;
      } else {
        const Vec e1 = pts[1] - pts[0], e2 = pts[2] - pts[0];
        const Eigen::Vector3d n = Eigen::Vector3d(e1).cross(Eigen::Vector3d(e2));
        const Vec r = x - pts[0];
        if (std::abs(n.dot(r)) <= eps * n.norm() * scale) {
          Mat g(3, 2);
          g << e1, e2;
          const Eigen::Vector2d uv = g.colPivHouseholderQr().solve(r);
          inside = uv(0) >= -eps && uv(1) >= -eps && uv.sum() <= 1.0 + eps &&
                   !(uv(0) < eps && uv(1) < eps) && !(uv(0) > 1 - eps) && !(uv(1) > 1 - eps);
        }
      }
      if (inside) rep.violations.push_back({Violation::Kind::HangingNode, f, ids, static_cast<int>(v)});
    }
  }
  return rep;
}

void write_mesh(const Mesh& m, std::ostream& out) {
  out << m.dim << ' ' << m.vertices.size() << ' ' << m.cells.size() << '\n';
  for (const auto& v : m.vertices) {
    for (int k = 0; k < v.size(); ++k) out << (k ? " " : "") << shortest(v(k));
    out << '\n';
  }
  for (const auto& c : m.cells) {
    for (std::size_t k = 0; k < c.size(); ++k) out << (k ? " " : "") << c[k];
    out << '\n';
  }
}

void write_mesh(const Mesh& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  write_mesh(m, out);
  if (!out) throw Error("failed writing '" + path + "'");
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

template <class T>
T parse_number(const std::string& tok, std::size_t line, const std::string& field) {
  T v{};
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    throw ParseError(line, field + ": cannot parse '" + tok + "'");
  return v;
}

}  // namespace

Mesh read_mesh(std::istream& in) {
  std::size_t line_no = 0;
  std::string line;
  auto next = [&]() -> std::vector<std::string> {
    while (std::getline(in, line)) {
      ++line_no;
      auto t = tokens(line);
      if (!t.empty()) return t;
    }
    throw ParseError(line_no + 1, "unexpected end of file");
  };

  auto head = next();
  if (head.size() != 3) throw ParseError(line_no, "header must be 'dim nv nc'");
  Mesh m;
  m.dim = parse_number<int>(head[0], line_no, "dim");
  const auto nv = parse_number<long>(head[1], line_no, "nv");
  const auto nc = parse_number<long>(head[2], line_no, "nc");
  if (m.dim != 2 && m.dim != 3) throw ParseError(line_no, "dim must be 2 or 3");
  if (nv < 0 || nc < 0) throw ParseError(line_no, "counts must be non-negative");

  for (long i = 0; i < nv; ++i) {
    auto t = next();
    if (static_cast<int>(t.size()) != m.dim)
      throw ParseError(line_no, "vertex " + std::to_string(i) + ": expected " + std::to_string(m.dim) + " coordinates");
    Vec v(m.dim);
    for (int k = 0; k < m.dim; ++k)
      v(k) = parse_number<double>(t[static_cast<std::size_t>(k)], line_no, "vertex " + std::to_string(i) + " coordinate " + std::to_string(k));
    m.vertices.push_back(v);
  }
  for (long c = 0; c < nc; ++c) {
    auto t = next();
    if (static_cast<int>(t.size()) != m.dim + 1)
      throw ParseError(line_no, "cell " + std::to_string(c) + ": expected " + std::to_string(m.dim + 1) + " vertex ids");
    std::vector<int> cell;
    for (std::size_t k = 0; k < t.size(); ++k) {
      const int id = parse_number<int>(t[k], line_no, "cell " + std::to_string(c) + " index " + std::to_string(k));
      if (id < 0 || id >= nv)
        throw ParseError(line_no, "cell " + std::to_string(c) + " index " + std::to_string(k) + ": vertex id " +
                                      std::to_string(id) + " out of range");
      cell.push_back(id);
    }
    m.cells.push_back(cell);
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!tokens(line).empty()) throw ParseError(line_no, "trailing content after last cell");
  }
  return m;
}

Mesh read_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open mesh file '" + path + "'");
  return read_mesh(in);
}

void write_quality_csv(const MeshQuality& q, std::ostream& out) {
  out << "cell_id,h_T,H_T,H_T/h_T,max_angle,classification\n";
  for (std::size_t c = 0; c < q.reports.size(); ++c) {
    const auto& r = q.reports[c];
    out << c << ',' << sig5(r.h_T) << ',' << sig5(r.H_T) << ',' << sig5(r.ratio_new) << ','
        << sig5(r.max_angle) << ',' << to_string(r.classification) << '\n';
  }
}

}  // namespace aniso

#pragma once

// Mesh families on the unit square, conformity checks, quality tables and mesh I/O.

#include <iosfwd>
#include <string>
#include <vector>

#include "aniso/geometry.hpp"
#include "aniso/quality.hpp"

namespace aniso {

enum class Family { I, II, III, IV, V, VI };

std::string to_string(Family f);
/// "I".."VI" (case-insensitive) or "1".."6"; throws std::invalid_argument.
Family parse_family(const std::string& s);

/// How grid cells are cut into triangles.
/// LowerLeftUpperRight / LowerRightUpperLeft: each quad split along that diagonal.
/// Staggered: every other grid row is shifted by half a cell, producing
/// isosceles blade pairs between rows and half-cells at the sides.
enum class DiagonalRule { LowerLeftUpperRight, LowerRightUpperLeft, Staggered };

std::string to_string(DiagonalRule r);
DiagonalRule parse_diagonal_rule(const std::string& s);
DiagonalRule default_diagonal(Family f);

struct Mesh {
  int dim = 2;
  std::vector<Vec> vertices;
  std::vector<std::vector<int>> cells;

  Simplex cell(std::size_t c) const;
};

inline constexpr double kShishkinDelta = 1.0 / 128.0;
double shishkin_tau(int N);

/// Breakpoints 0 = x_0 < ... < x_N = 1 of the family in direction axis (0 or 1).
std::vector<double> grid_coordinates(Family f, int N, int axis);

/// Throws InvalidN for N < 2 or odd N with a Shishkin family.
Mesh generate(Family f, int N);
Mesh generate(Family f, int N, DiagonalRule rule);

struct MeshQuality {
  double min_angle_metric = 0;  // max_T |L_3|^2 / |T|
  double max_angle_metric = 0;  // max_T |L_1||L_2| / |T|
  std::size_t min_angle_cell = 0;
  std::size_t max_angle_cell = 0;
  std::vector<QualityReport> reports;  // filled when requested
};

/// Throws NonConformal when conformity_check finds violations.
MeshQuality quality(const Mesh& m, bool with_reports = true, double gamma0 = kDefaultGamma0);

struct Violation {
  enum class Kind { OverShared, DuplicateCell, HangingNode };
  Kind kind;
  std::vector<int> facet;  // sorted vertex ids
  std::vector<std::size_t> cells;
  int vertex = -1;  // hanging node id

  std::string describe() const;
};

struct ConformityReport {
  std::vector<Violation> violations;
  bool conformal() const { return violations.empty(); }
};

ConformityReport conformity_check(const Mesh& m);

/// Total measure of all cells.
double total_measure(const Mesh& m);

/// Header "dim nv nc", nv coordinate lines, nc lines of 0-based vertex ids.
void write_mesh(const Mesh& m, std::ostream& out);
void write_mesh(const Mesh& m, const std::string& path);
Mesh read_mesh(std::istream& in);
Mesh read_mesh(const std::string& path);

/// cell_id,h_T,H_T,H_T/h_T,max_angle,classification
void write_quality_csv(const MeshQuality& q, std::ostream& out);

}  // namespace aniso

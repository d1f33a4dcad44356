#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aniso/geometry.hpp"

namespace aniso {

inline constexpr double kDefaultGamma0 = 10.0;

enum class Taxonomy {
  Isotropic,
  RightAngled,
  DaggerGood,
  DaggerBad,
  Blade,
  Spire,
  Spear,
  Spindle,
  Spike,
  Splinter,
  Sliver,
  Unclassified
};

std::string to_string(Taxonomy t);

/// (prod h_i / |T|) * h_T with h_i from the standardized labeling.
double H_parameter(const Simplex& t);
/// d = 2: (h_T^2/|T|) min|L_i|; d = 3: (h_T^2/|T|) |L_1||L_2|.
double H_star(const Simplex& t);

struct QualityReport {
  double h_T = 0;
  double H_T = 0;
  double H_star = 0;
  double ratio_new = 0;      // H_T / h_T
  double ratio_classic = 0;  // h_T^d / |T|
  double hmax_over_hmin = 0;
  double R_over_h = 0;
  double max_angle = 0;
  std::optional<double> max_dihedral;
  Taxonomy classification = Taxonomy::Unclassified;
};

QualityReport condition_report(const Simplex& t, double gamma0 = kDefaultGamma0);
Taxonomy classify(const Simplex& t, double gamma0 = kDefaultGamma0);
bool is_good(const Simplex& t, double gamma0 = kDefaultGamma0);

/// Angle tracked by the probe: the largest interior angle (d = 2) or the larger
/// of the largest dihedral and face angles (d = 3).
double probe_angle(const Simplex& t);

struct ProbeRow {
  int k = 0;  // s = 2^-k
  double s = 0;
  double angle = 0;
  double ratio = 0;
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
  bool angle_diverges = false;  // gap to pi at least halves over the sweep
  bool ratio_diverges = false;  // last ratio > 4 x first ratio
  std::string verdict;          // co-bounded | co-diverging | inconsistent
};

ProbeReport equivalence_probe(const std::function<Simplex(double)>& family,
                              const std::vector<int>& levels);

}  // namespace aniso

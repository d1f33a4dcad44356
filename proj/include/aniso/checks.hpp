#pragma once

// Randomized invariant suites shared by the CLI and the acceptance runner.

#include <random>
#include <string>
#include <vector>

#include "aniso/geometry.hpp"

namespace aniso {

struct CheckResult {
  std::string name;
  bool pass = false;
  int samples = 0;
  int violations = 0;
  double worst = 0;  // worst measured value of the checked quantity
  std::string detail;
};

/// "<name>: PASS|FAIL  [detail]"
std::string to_line(const CheckResult& r);

/// Largest h_T^d / |T| accepted by random_simplex.
inline constexpr double kMaxRandomAspect = 1e4;

/// Random simplex: vertices in the unit cube, an axis stretch of up to two
/// decades and a random rotation, rejected while h_T^d / |T| > kMaxRandomAspect.
Simplex random_simplex(std::mt19937& rng, int d);

std::vector<CheckResult> geometry_suite(unsigned seed, int samples = 1000);
std::vector<CheckResult> operator_suite(unsigned seed, int samples = 1000);
/// suite in {geometry, operators, all}; throws std::invalid_argument otherwise.
std::vector<CheckResult> run_suite(const std::string& suite, unsigned seed, int samples = 1000);

}  // namespace aniso

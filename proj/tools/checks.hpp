#pragma once

// Randomized property and oracle suites shared by the CLI and the acceptance
// binary. Every suite is deterministic for a fixed seed.

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "gsf/special.hpp"

namespace gsf::check {

struct SuiteReport {
  std::string suite;
  int cases = 0;
  int passed = 0;
  double max_error = 0.0;
  bool ok = false;
  std::string note;
};

struct CheckOptions {
  std::uint64_t seed = 20240611;
};

using SuiteFn = SuiteReport (*)(const CheckOptions&);

struct SuiteEntry {
  const char* name;
  const char* title;
  SuiteFn run;
};

/// In acceptance order.
const std::vector<SuiteEntry>& suites();

/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const CheckOptions& opts = {});

SuiteReport closed_form(const CheckOptions& opts);
SuiteReport normalization(const CheckOptions& opts);
SuiteReport crosspath(const CheckOptions& opts);
SuiteReport weyl(const CheckOptions& opts);
SuiteReport eigen(const CheckOptions& opts);
SuiteReport walls(const CheckOptions& opts);
SuiteReport limit(const CheckOptions& opts);
SuiteReport rado(const CheckOptions& opts);
SuiteReport support(const CheckOptions& opts);
SuiteReport aggregation(const CheckOptions& opts);
SuiteReport identities(const CheckOptions& opts);
SuiteReport characteristic(const CheckOptions& opts);

/// Integral of the n = 2 kernel over the segment C(X).
double kernel_mass_n2(const Eigen::Vector2d& x, double m, Setting setting, double tol = 1e-10);

/// Integral of the n = 3 kernel over the hexagon C(X) in (h1, h2), split along
/// the lines where the fiber changes shape.
double kernel_mass_n3(const Eigen::Vector3d& x, double m, Setting setting, double tol, int level);

}  // namespace gsf::check

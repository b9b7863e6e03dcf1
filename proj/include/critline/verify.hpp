#pragma once

#include <cstdint>
#include <string>

namespace critline {

struct SuiteResult {
  std::string suite;
  long samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Residual suites behind `critline verify`.  Random samples come from a
// seeded generator with an explicit uint64 -> [0,1) mapping, so runs are
// reproducible across platforms.

/// xi(z) = xi(1-z) over random z, re in (-2, 3), |im| <= 50; tol 1e-10.
SuiteResult verify_functional_eq(long samples, std::uint64_t seed);

/// gamma reflection residual over random admissible z (at least 0.1 from
/// every pole of gamma(z) and gamma(1-z)); tol 1e-10.
SuiteResult verify_reflection(long samples, std::uint64_t seed);

/// max over t in [0, t_max] step 0.5 of |Im xi(1/2+it)| / (1+|Re xi|); tol 1e-10.
SuiteResult verify_line_real(double t_max);

/// Symmetry-pair residuals on a 20x20 grid d in [0, 0.45], t in [0, 50]; tol 1e-9.
SuiteResult verify_symmetry();

}  // namespace critline

#pragma once

#include "critline/complex.hpp"

namespace critline {

// Value plus an honest absolute error claim and the series/approximation
// effort spent producing it.  abs_error_estimate is an upper bound on
// |value - truth|; the test suite checks it against high-precision
// references.
struct EvalResult {
  Complex value;
  double abs_error_estimate = 0.0;
  int terms_used = 0;
};

}  // namespace critline

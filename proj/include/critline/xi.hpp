#pragma once

#include <utility>

#include "critline/complex.hpp"
#include "critline/eval_result.hpp"

namespace critline {

// Point addressed by its signed distance d from the critical line and its
// ordinate t, i.e. z = (1/2 + d) + i t.
struct CriticalPoint {
  double d = 0.0;
  double t = 0.0;
};

/// Completed xi with the z(1-z) numerator convention:
/// xi(z) = z (1-z) gamma(z/2) zeta(z) / (2 pi^{z/2}).
/// (Note this is the negative of the textbook (1/2) s (s-1) ... form.)
/// Finite at z = 0 and z = 1; supported on re z in (-10, 11).
EvalResult xi_eval(Complex z);

/// xi(1/2 + it), which is real; |t| <= 60.  Raises InternalError if the
/// discarded imaginary part exceeds 1e-10 * (1 + |re|) -- that would be an
/// implementation bug, not mathematics.
double xi_on_line(double t);

/// |xi(z) - xi(1-z)| / (|xi(z)| + |xi(1-z)| + 1e-300), in [0, 1].
double functional_eq_residual(Complex z);

/// (|Re xi(.5-d+it) - Re xi(.5+d+it)|, |Im xi(.5-d+it) + Im xi(.5+d+it)|)
/// for |d| < 0.5, |t| <= 60.
std::pair<double, double> symmetry_residuals(CriticalPoint p);

}  // namespace critline

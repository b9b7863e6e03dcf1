#pragma once

#include "critline/complex.hpp"
#include "critline/eval_result.hpp"

namespace critline {

/// Complex gamma.  Lanczos approximation for re z >= 0.5, continued to the
/// left half-plane through the reflection identity
/// gamma(z) gamma(1-z) = pi / sin(pi z).
/// Raises PoleError within pole_eps = 1e-9 of 0, -1, -2, ...
EvalResult cgamma(Complex z);

/// Relative residual |gamma(z)gamma(1-z) - pi/sin(pi z)| / |pi/sin(pi z)|.
/// Requires z and 1-z at least 0.1 away from every gamma pole.
double reflection_residual(Complex z);

/// sin(pi x) with exact zeros at integers (argument reduced before scaling).
double sin_pi(double x);

/// sin(pi z) for complex z, reduced on the real part.
Complex csin_pi(Complex z);

/// 1 / gamma(z); entire, exactly zero at the non-positive integers.
Complex cgamma_reciprocal(Complex z);

}  // namespace critline

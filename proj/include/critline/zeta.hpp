#pragma once

#include "critline/complex.hpp"
#include "critline/eval_result.hpp"

namespace critline {

/// Dirichlet-series route, re z >= 1.1.  Partial sum completed by an
/// Euler-Maclaurin tail whose rigorous remainder bound is <= tail_tol;
/// terms_used is the number of summed terms N.
EvalResult zeta_direct(Complex z, double tail_tol);

/// Globally convergent eta form for re z > 0:
/// zeta(z) = (1 - 2^{1-z})^{-1} sum (-1)^{n-1} n^{-z},
/// with the alternating sum accelerated (Cohen-Rodriguez Villegas-Zagier).
/// PoleError at z = 1; the removable prefactor zeros 1 + 2 pi i k / ln 2
/// (k != 0) are crossed by a local 4-point circle average.
EvalResult zeta_eta(Complex z);

/// Single entry point on re z in (-10, 10] \ {1}: eta form for re z > 0,
/// functional-equation continuation otherwise.  Exactly zero at the
/// trivial zeros -2, -4, ...
EvalResult zeta_strip(Complex z);

/// True iff z is exactly a negative even integer.
bool is_trivial_zero(Complex z);

}  // namespace critline

#pragma once

#include "critline/complex.hpp"

namespace critline {

/// e^{a+ib} = e^a (cos b + i sin b)
Complex cexp(Complex z);

/// cos(x+iy) = cos x cosh y - i sin x sinh y
Complex ccos(Complex z);

/// sin(x+iy) = sin x cosh y + i cos x sinh y
Complex csin(Complex z);

Complex ccosh(Complex z);
Complex csinh(Complex z);

/// Principal branch, im in (-pi, pi].  Errors on z = 0.
Complex clog(Complex z);

/// n^z = e^{z ln n} = n^x [cos(y ln n) + i sin(y ln n)] for integer n >= 1.
Complex cpow_real_base(int n, Complex z);

}  // namespace critline

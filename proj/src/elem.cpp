#include "critline/elem.hpp"

#include <cmath>
#include <string>

#include "critline/errors.hpp"

namespace critline {

namespace {

// exp/cosh of anything past this is not representable in double
constexpr double kExpOverflow = 700.0;

void require_finite(Complex z, const char* fn) {
  if (!is_finite(z)) throw DomainError(std::string(fn) + ": non-finite argument");
}

}  // namespace

Complex cexp(Complex z) {
  require_finite(z, "cexp");
  if (z.re > kExpOverflow) throw OverflowError("cexp: exp(re z) overflows");
  const double ea = std::exp(z.re);
  return {ea * std::cos(z.im), ea * std::sin(z.im)};
}

Complex ccos(Complex z) {
  require_finite(z, "ccos");
  if (std::fabs(z.im) > kExpOverflow) throw OverflowError("ccos: cosh(im z) overflows");
  return {std::cos(z.re) * std::cosh(z.im), -std::sin(z.re) * std::sinh(z.im)};
}

Complex csin(Complex z) {
  require_finite(z, "csin");
  if (std::fabs(z.im) > kExpOverflow) throw OverflowError("csin: cosh(im z) overflows");
  return {std::sin(z.re) * std::cosh(z.im), std::cos(z.re) * std::sinh(z.im)};
}

Complex ccosh(Complex z) {
  require_finite(z, "ccosh");
  if (std::fabs(z.re) > kExpOverflow) throw OverflowError("ccosh: cosh(re z) overflows");
  return {std::cosh(z.re) * std::cos(z.im), std::sinh(z.re) * std::sin(z.im)};
}

Complex csinh(Complex z) {
  require_finite(z, "csinh");
  if (std::fabs(z.re) > kExpOverflow) throw OverflowError("csinh: cosh(re z) overflows");
  return {std::sinh(z.re) * std::cos(z.im), std::cosh(z.re) * std::sin(z.im)};
}

Complex clog(Complex z) {
  require_finite(z, "clog");
  if (z.re == 0.0 && z.im == 0.0) throw DomainError("clog: argument is zero");
  double arg = std::atan2(z.im, z.re);
  if (arg == -kPi) arg = kPi;  // keep the branch half-open: im in (-pi, pi]
  return {std::log(abs(z)), arg};
}

Complex cpow_real_base(int n, Complex z) {
  require_finite(z, "cpow_real_base");
  if (n < 1) throw DomainError("cpow_real_base: base must be a positive integer");
  if (n == 1) return {1.0, 0.0};
  const double ln = std::log(static_cast<double>(n));
  return cexp({z.re * ln, z.im * ln});
}

}  // namespace critline

#include "critline/xi.hpp"

#include <cmath>

#include "critline/elem.hpp"
#include "critline/errors.hpp"
#include "critline/gamma.hpp"
#include "critline/zeta.hpp"

namespace critline {

namespace {

// pi^{p/2 + (im p) i/2} as exp((p/2) ln pi)
Complex half_power_of_pi(Complex p) {
  return cexp({0.5 * p.re * kLnPi, 0.5 * p.im * kLnPi});
}

double combined_rel_error(const EvalResult& zeta_part) {
  return zeta_part.abs_error_estimate / (abs(zeta_part.value) + 1e-300) + 5e-13;
}

// xi(z) = (1-z) gamma(1+z/2) zeta(z) pi^{-z/2}; the identity
// z gamma(z/2) = 2 gamma(1+z/2) keeps z = 0 finite.
EvalResult xi_from_zeta(Complex z, const EvalResult& zv) {
  const EvalResult gv = cgamma({1.0 + 0.5 * z.re, 0.5 * z.im});
  const Complex v = Complex{1.0 - z.re, -z.im} * gv.value * zv.value * half_power_of_pi(-z);
  return {v, combined_rel_error(zv) * abs(v) + 1e-300, zv.terms_used + gv.terms_used};
}

// Within 1e-4 of a trivial zero -2n, route through the reflected variable
// so the node of 1/gamma is explicit instead of a 0 * inf product:
// xi(z) = (z/2) (1-z) gamma((1-z)/2) zeta(1-z) pi^{(z-1)/2}
EvalResult xi_trivial_zero_window(Complex z) {
  const Complex w{1.0 - z.re, -z.im};
  const EvalResult zw = zeta_eta(w);
  const EvalResult gw = cgamma(0.5 * w);
  const Complex v = (0.5 * z) * w * gw.value * zw.value * half_power_of_pi(z - Complex{1.0, 0.0});
  return {v, combined_rel_error(zw) * abs(v) + 1e-300, zw.terms_used + gw.terms_used};
}

// Within 1e-4 of z = 1 the (1-z) zeta(z) factor is 0 * pole; it extends
// analytically (value -1 at the pole), so take the mean over three points
// at radius 1e-3, which cancels the first two Taylor terms.
EvalResult xi_pole_window(Complex z) {
  constexpr double r = 1e-3;
  Complex fused{0.0, 0.0};
  int terms = 0;
  for (int j = 0; j < 3; ++j) {
    const double a = 2.0 * kPi * j / 3.0;
    const Complex w{z.re + r * std::cos(a), z.im + r * std::sin(a)};
    const EvalResult zw = zeta_eta(w);
    fused = fused + Complex{1.0 - w.re, -w.im} * zw.value;
    terms += zw.terms_used;
  }
  fused = fused / 3.0;
  const EvalResult gv = cgamma({1.0 + 0.5 * z.re, 0.5 * z.im});
  const Complex v = gv.value * fused * half_power_of_pi(-z);
  return {v, 1e-10 * (1.0 + abs(v)), terms + gv.terms_used};
}

}  // namespace

EvalResult xi_eval(Complex z) {
  if (!is_finite(z)) throw DomainError("xi_eval: non-finite argument");
  if (z.re <= -10.0 || z.re >= 11.0) throw DomainError("xi_eval: re z outside (-10, 11)");
  if (z.re < -1.5) {
    const double even = 2.0 * std::nearbyint(0.5 * z.re);
    if (even <= -2.0 && dist(z, {even, 0.0}) <= 1e-4) return xi_trivial_zero_window(z);
  }
  if (z.re <= 0.0) return xi_from_zeta(z, zeta_strip(z));
  if (dist(z, {1.0, 0.0}) <= 1e-4) return xi_pole_window(z);
  return xi_from_zeta(z, zeta_eta(z));
}

double xi_on_line(double t) {
  if (!(std::fabs(t) <= 60.0)) throw DomainError("xi_on_line: requires |t| <= 60");
  const Complex v = xi_eval({0.5, t}).value;
  if (std::fabs(v.im) > 1e-10 * (1.0 + std::fabs(v.re))) {
    throw InternalError("xi_on_line: imaginary residue exceeds the consistency bound");
  }
  return v.re;
}

double functional_eq_residual(Complex z) {
  const Complex a = xi_eval(z).value;
  const Complex b = xi_eval({1.0 - z.re, -z.im}).value;
  return abs(a - b) / (abs(a) + abs(b) + 1e-300);
}

std::pair<double, double> symmetry_residuals(CriticalPoint p) {
  if (!(std::fabs(p.d) < 0.5)) throw DomainError("symmetry_residuals: requires |d| < 0.5");
  if (!(std::fabs(p.t) <= 60.0)) throw DomainError("symmetry_residuals: requires |t| <= 60");
  const Complex left = xi_eval({0.5 - p.d, p.t}).value;
  const Complex right = xi_eval({0.5 + p.d, p.t}).value;
  return {std::fabs(left.re - right.re), std::fabs(left.im + right.im)};
}

}  // namespace critline

#include "critline/gamma.hpp"

#include <cmath>

#include "critline/elem.hpp"
#include "critline/errors.hpp"

namespace critline {

namespace {

constexpr double kPoleEps = 1e-9;

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey's set).  Validated
// against a 60-digit reference to ~3e-14 relative over |z| <= 50.
constexpr double kLanczosG = 4.7421875;
constexpr int kLanczosTerms = 15;
constexpr double kLanczosC[kLanczosTerms] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

double dist_to_nonpositive_integer(Complex z, double* nearest) {
  const double n = std::max(0.0, std::nearbyint(-z.re));
  if (nearest) *nearest = -n;
  return abs(Complex{z.re + n, z.im});
}

Complex lanczos_series(Complex z) {
  Complex a{kLanczosC[0], 0.0};
  for (int k = 1; k < kLanczosTerms; ++k) {
    a = a + Complex{kLanczosC[k], 0.0} / Complex{z.re - 1.0 + k, z.im};
  }
  return a;
}

// gamma(z) = sqrt(2 pi) w^{z-1/2} e^{-w} A(z),  w = z + g - 1/2,  re z >= 0.5
Complex lanczos_gamma(Complex z) {
  const Complex w{z.re + kLanczosG - 0.5, z.im};
  const Complex p = cexp((z - Complex{0.5, 0.0}) * clog(w) - w);
  return kSqrtTwoPi * p * lanczos_series(z);
}

}  // namespace

double sin_pi(double x) {
  const double k = std::nearbyint(x);
  const double s = std::sin(kPi * (x - k));
  const bool odd = std::fmod(std::fabs(k), 2.0) == 1.0;
  return odd ? -s : s;
}

Complex csin_pi(Complex z) {
  if (std::fabs(z.im) * kPi > 700.0) throw OverflowError("csin_pi: cosh(pi im z) overflows");
  const double k = std::nearbyint(z.re);
  const double r = z.re - k;
  const Complex v{std::sin(kPi * r) * std::cosh(kPi * z.im),
                  std::cos(kPi * r) * std::sinh(kPi * z.im)};
  const bool odd = std::fmod(std::fabs(k), 2.0) == 1.0;
  return odd ? -v : v;
}

EvalResult cgamma(Complex z) {
  if (!is_finite(z)) throw DomainError("cgamma: non-finite argument");
  if (z.re < 0.5) {
    double pole;
    if (dist_to_nonpositive_integer(z, &pole) < kPoleEps) {
      throw PoleError("cgamma: argument at a pole of gamma", {pole, 0.0});
    }
    const Complex v = Complex{kPi, 0.0} / (csin_pi(z) * lanczos_gamma({1.0 - z.re, -z.im}));
    return {v, 1e-13 * abs(v) + 1e-300, kLanczosTerms};
  }
  const Complex v = lanczos_gamma(z);
  return {v, 1e-13 * abs(v) + 1e-300, kLanczosTerms};
}

Complex cgamma_reciprocal(Complex z) {
  if (z.re >= 0.5) return Complex{1.0, 0.0} / lanczos_gamma(z);
  // reflection form; csin_pi vanishes exactly at the non-positive integers
  return csin_pi(z) * lanczos_gamma({1.0 - z.re, -z.im}) / kPi;
}

double reflection_residual(Complex z) {
  if (!is_finite(z)) throw DomainError("reflection_residual: non-finite argument");
  const Complex one_minus{1.0 - z.re, -z.im};
  double pole;
  if (dist_to_nonpositive_integer(z, &pole) < 0.1) {
    throw PoleError("reflection_residual: z within 0.1 of a gamma pole", {pole, 0.0});
  }
  if (dist_to_nonpositive_integer(one_minus, &pole) < 0.1) {
    throw PoleError("reflection_residual: 1-z within 0.1 of a gamma pole",
                    {1.0 - pole, 0.0});
  }
  const Complex s = csin_pi(z);
  if (abs(s) < 1e-12) throw DegenerateError("reflection_residual: sin(pi z) underflows");
  const Complex lhs = cgamma(z).value * cgamma(one_minus).value;
  const Complex rhs = Complex{kPi, 0.0} / s;
  return abs(lhs - rhs) / abs(rhs);
}

}  // namespace critline

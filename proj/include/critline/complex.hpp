#pragma once

#include <cmath>

namespace critline {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kLn2 = 0.69314718055994530942;
inline constexpr double kLnPi = 1.14472988584940017414;
inline constexpr double kSqrtTwoPi = 2.50662827463100050242;

// Complex scalar kept as an explicit (re, im) pair.  The special functions
// here are built from their real-component decompositions, so the type is a
// plain aggregate rather than std::complex.
struct Complex {
  double re = 0.0;
  double im = 0.0;
};

constexpr Complex operator+(Complex a, Complex b) { return {a.re + b.re, a.im + b.im}; }
constexpr Complex operator-(Complex a, Complex b) { return {a.re - b.re, a.im - b.im}; }
constexpr Complex operator-(Complex a) { return {-a.re, -a.im}; }

constexpr Complex operator*(Complex a, Complex b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
constexpr Complex operator*(double s, Complex a) { return {s * a.re, s * a.im}; }
constexpr Complex operator*(Complex a, double s) { return {a.re * s, a.im * s}; }
constexpr Complex operator/(Complex a, double s) { return {a.re / s, a.im / s}; }

// Smith's scaled division; avoids spurious overflow in the denominator.
inline Complex operator/(Complex a, Complex b) {
  if (std::fabs(b.re) >= std::fabs(b.im)) {
    const double r = b.im / b.re;
    const double den = b.re + b.im * r;
    return {(a.re + a.im * r) / den, (a.im - a.re * r) / den};
  }
  const double r = b.re / b.im;
  const double den = b.re * r + b.im;
  return {(a.re * r + a.im) / den, (a.im * r - a.re) / den};
}

constexpr bool operator==(Complex a, Complex b) { return a.re == b.re && a.im == b.im; }
constexpr bool operator!=(Complex a, Complex b) { return !(a == b); }

constexpr Complex conj(Complex z) { return {z.re, -z.im}; }

inline double abs(Complex z) { return std::hypot(z.re, z.im); }

inline bool is_finite(Complex z) { return std::isfinite(z.re) && std::isfinite(z.im); }

inline double dist(Complex a, Complex b) { return abs(a - b); }

}  // namespace critline

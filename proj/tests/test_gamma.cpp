#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "critline/gamma.hpp"
#include "critline/errors.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace critline;
using testsupport::Rng;

TEST_CASE("cgamma matches the high-precision references") {
  for (const auto& f : fixtures::kGamma) {
    const EvalResult r = cgamma({f.zre, f.zim});
    const Complex want{f.vre, f.vim};
    CHECK(testsupport::rel_err(r.value, want) < 1e-12);
    CHECK(abs(r.value - want) <= r.abs_error_estimate + 1e-16 * abs(want));
    CHECK(r.terms_used > 0);
  }
}

TEST_CASE("cgamma named values") {
  CHECK(testsupport::rel_err(cgamma({1, 0}).value, {1, 0}) < 1e-13);
  CHECK(testsupport::rel_err(cgamma({5, 0}).value, {24, 0}) < 1e-13);
  CHECK(testsupport::rel_err(cgamma({0.5, 0}).value, {std::sqrt(kPi), 0}) < 1e-13);
}

TEST_CASE("pole detection at the non-positive integers") {
  CHECK_THROWS_AS(cgamma({0, 0}), PoleError);
  CHECK_THROWS_AS(cgamma({-1, 0}), PoleError);
  CHECK_THROWS_AS(cgamma({-7, 0}), PoleError);
  try {
    cgamma({-2.0 + 1e-10, 0});
    FAIL("expected PoleError");
  } catch (const PoleError& e) {
    CHECK(e.at() == Complex{-2, 0});
  }
  // 1e-3 away is near a pole but not at one: huge value, no error
  CHECK(abs(cgamma({-2.0 + 1e-3, 0}).value) > 100.0);
}

TEST_CASE("recurrence gamma(z+1) = z gamma(z)") {
  Rng rng(21);
  for (int k = 0; k < 500; ++k) {
    const Complex z = rng.complex_in(0.1, 10.0, -30.0, 30.0);
    const Complex lhs = cgamma({z.re + 1, z.im}).value;
    const Complex rhs = z * cgamma(z).value;
    CHECK(testsupport::rel_err(lhs, rhs) < 1e-11);
  }
}

TEST_CASE("no zeros on the scanned rectangle") {
  double min_abs = 1e300;
  for (int i = 0; i < 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      const Complex z{-4.5 + 9.5 * i / 99.0, -5.0 + 10.0 * j / 99.0};
      const double n = std::max(0.0, std::nearbyint(-z.re));
      if (std::hypot(z.re + n, z.im) < 0.25) continue;  // pole disk
      min_abs = std::min(min_abs, abs(cgamma(z).value));
    }
  }
  CHECK(min_abs > 1e-4);
}

TEST_CASE("conjugate symmetry to 2 ulp") {
  Rng rng(22);
  for (int k = 0; k < 500; ++k) {
    Complex z = rng.complex_in(-4.5, 8.0, -20.0, 20.0);
    const double n = std::max(0.0, std::nearbyint(-z.re));
    if (std::hypot(z.re + n, z.im) < 1e-3) continue;
    const Complex a = cgamma(conj(z)).value;
    const Complex b = conj(cgamma(z).value);
    CHECK(abs(a - b) <= 2e-16 * abs(b));
  }
}

TEST_CASE("reflection residual") {
  CHECK(reflection_residual({0.5, 0}) < 1e-12);
  CHECK(reflection_residual({0.3, 0.7}) < 1e-11);
  CHECK_THROWS_AS(reflection_residual({-0.999, 0}), PoleError);
  CHECK_THROWS_AS(reflection_residual({1.05, 0}), PoleError);  // 1-z near the pole at 0

  Rng rng(23);
  long taken = 0;
  double worst = 0.0;
  while (taken < 1000) {
    const Complex z = rng.complex_in(-5, 6, -20, 20);
    const double rounded = std::nearbyint(z.re);
    if ((rounded <= 0.0 || rounded >= 1.0) &&
        std::hypot(z.re - rounded, z.im) < 0.1) {
      continue;
    }
    worst = std::max(worst, reflection_residual(z));
    ++taken;
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("sin_pi vanishes exactly at integers") {
  CHECK(sin_pi(3.0) == 0.0);
  CHECK(sin_pi(-12.0) == 0.0);
  CHECK(std::fabs(sin_pi(0.5) - 1.0) < 1e-15);
  const Complex s = csin_pi({-4.0, 0.0});
  CHECK(s == Complex{0, 0});
  CHECK(cgamma_reciprocal({-3, 0}) == Complex{0, 0});
}

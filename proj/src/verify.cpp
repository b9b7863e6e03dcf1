#include "critline/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "critline/complex.hpp"
#include "critline/errors.hpp"
#include "critline/gamma.hpp"
#include "critline/xi.hpp"

namespace critline {

namespace {

class UniformRng {
 public:
  explicit UniformRng(std::uint64_t seed) : gen_(seed) {}
  // explicit 53-bit mapping; std::uniform_real_distribution is
  // implementation-defined and would break cross-platform reproducibility
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace

SuiteResult verify_functional_eq(long samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("verify: samples must be >= 1");
  UniformRng rng(seed);
  double worst = 0.0;
  for (long k = 0; k < samples; ++k) {
    const Complex z{rng.uniform(-2.0, 3.0), rng.uniform(-50.0, 50.0)};
    worst = std::max(worst, functional_eq_residual(z));
  }
  return {"functional-eq", samples, worst, 1e-10, worst < 1e-10};
}

SuiteResult verify_reflection(long samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("verify: samples must be >= 1");
  UniformRng rng(seed);
  double worst = 0.0;
  long taken = 0;
  while (taken < samples) {
    const Complex z{rng.uniform(-5.0, 6.0), rng.uniform(-20.0, 20.0)};
    const double near_int = std::fabs(z.re - std::nearbyint(z.re));
    const double rounded = std::nearbyint(z.re);
    // z (or 1-z) within 0.1 of a gamma pole is inadmissible for the identity
    if ((rounded <= 0.0 || rounded >= 1.0) && std::hypot(near_int, z.im) < 0.1) continue;
    worst = std::max(worst, reflection_residual(z));
    ++taken;
  }
  return {"reflection", samples, worst, 1e-10, worst < 1e-10};
}

SuiteResult verify_line_real(double t_max) {
  if (!(t_max > 0.0 && t_max <= 60.0)) throw DomainError("verify: t_max must be in (0, 60]");
  double worst = 0.0;
  long count = 0;
  for (double t = 0.0; t <= t_max + 1e-9; t += 0.5) {
    const Complex v = xi_eval({0.5, t}).value;
    worst = std::max(worst, std::fabs(v.im) / (1.0 + std::fabs(v.re)));
    ++count;
  }
  return {"line-real", count, worst, 1e-10, worst < 1e-10};
}

SuiteResult verify_symmetry() {
  constexpr int kGrid = 20;
  double worst = 0.0;
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      const double d = 0.45 * i / (kGrid - 1);
      const double t = 50.0 * j / (kGrid - 1);
      const auto [r_re, r_im] = symmetry_residuals({d, t});
      worst = std::max({worst, r_re, r_im});
    }
  }
  return {"symmetry", kGrid * kGrid, worst, 1e-9, worst < 1e-9};
}

}  // namespace critline

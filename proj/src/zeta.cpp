#include "critline/zeta.hpp"

#include <cmath>

#include "critline/elem.hpp"
#include "critline/errors.hpp"
#include "critline/gamma.hpp"

namespace critline {

namespace {

constexpr double kPoleEps = 1e-9;
constexpr double kDigits = 15.0;
// error of the accelerated alternating sum ~ (3+sqrt 8)^{-n} e^{pi|t|/2} (1+2|t|)
constexpr double kAccelRate = 1.76274717403908605;  // ln(3 + sqrt 8)
constexpr int kMaxAccelTerms = 400;                  // (3+sqrt 8)^n overflows past this

// zeta(h) = c0 + c1 h + c2 h^2 + O(h^3) around 0 (values from a 60-digit
// reference; see tests/oracle/gen_fixtures.py)
constexpr double kZetaAt0C0 = -0.5;
constexpr double kZetaAt0C1 = -0.91893853320467274;
constexpr double kZetaAt0C2 = -1.0031782279542924;

int eta_terms(double t) {
  // the |t| padding keeps the truncation bound below ~1e-16 relative
  return 2 + static_cast<int>(std::ceil(kDigits * 1.31 + 0.9 * std::fabs(t)));
}

double eta_truncation_bound(double t, int n) {
  const double ln = -n * kAccelRate + kPi * std::fabs(t) / 2 + std::log1p(2 * std::fabs(t));
  return 3.0 * std::exp(ln);
}

// e^u - 1 without cancellation for small |u|
Complex cexpm1(Complex u) {
  if (abs(u) > 0.5) return cexp(u) - Complex{1.0, 0.0};
  Complex term = u;
  Complex s = u;
  for (int k = 2; k <= 26; ++k) {
    term = term * u / static_cast<double>(k);
    s = s + term;
    if (abs(term) <= 1e-18 * abs(s)) break;
  }
  return s;
}

// 1 - 2^{1-z}
Complex eta_prefactor(Complex z) {
  return -cexpm1({(1.0 - z.re) * kLn2, -z.im * kLn2});
}

Complex eta_accelerated(Complex z, int n) {
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0;
  double c = -d;
  Complex s{0.0, 0.0};
  const Complex mz = -z;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s = s + c * cpow_real_base(k + 1, mz);
    b = (k + n) * static_cast<double>(k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

struct EtaPoint {
  Complex value;
  double trunc_bound;
  int terms;
};

EtaPoint eta_quotient(Complex z) {
  const int n = eta_terms(z.im);
  const Complex p = eta_prefactor(z);
  const Complex v = eta_accelerated(z, n) / p;
  return {v, eta_truncation_bound(z.im, n) / abs(p), n};
}

// Within 1e-3 of a removable prefactor zero z_k the quotient is 0/0; average
// the regular quotient over 4 points on a circle around z, phased so every
// point stays >= r/sqrt(2) away from z_k.
EvalResult eta_near_prefactor_zero(Complex z, Complex zk) {
  constexpr double r = 1e-3;
  const Complex d = zk - z;
  const double phi = std::atan2(d.im, d.re) + kPi / 4.0;
  Complex sum{0.0, 0.0};
  int terms = 0;
  for (int j = 0; j < 4; ++j) {
    const double a = phi + j * kPi / 2.0;
    const EtaPoint q = eta_quotient({z.re + r * std::cos(a), z.im + r * std::sin(a)});
    sum = sum + q.value;
    terms += q.terms;
  }
  const Complex v = sum / 4.0;
  return {v, 1e-11 * (1.0 + abs(v)), terms};
}

double remainder_coeff(Complex z) {
  // |s(s+1)...(s+4)| * max|B5~| / 5!  with  max|B5~| = 2 * 5! * zeta(5) / (2 pi)^5
  double p = 1.0;
  for (int j = 0; j < 5; ++j) p *= abs({z.re + j, z.im});
  return p * 2.11737857175392e-4;
}

struct KahanSum {
  Complex s{0.0, 0.0};
  Complex c{0.0, 0.0};
  void add(Complex x) {
    const Complex y = x - c;
    const Complex t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

}  // namespace

bool is_trivial_zero(Complex z) {
  if (z.im != 0.0 || z.re > -2.0) return false;
  const double h = z.re / 2.0;
  return h == std::nearbyint(h);
}

EvalResult zeta_direct(Complex z, double tail_tol) {
  if (!is_finite(z)) throw DomainError("zeta_direct: non-finite argument");
  if (!(tail_tol > 0.0)) throw DomainError("zeta_direct: tail_tol must be positive");
  if (tail_tol < 5e-14) throw DomainError("zeta_direct: tail_tol below achievable precision");
  if (z.re < 1.1) {
    throw DomainError("zeta_direct: series diverges or converges too slowly for re z < 1.1");
  }
  // N from the periodic-Bernoulli remainder bound at half the budget, the
  // other half absorbs summation roundoff
  const double target = tail_tol / 2.0;
  const double c = remainder_coeff(z);
  const double power = std::pow(c / (target * (z.re + 4.0)), 1.0 / (z.re + 4.0));
  if (!(power < 5e7)) throw DomainError("zeta_direct: tail_tol unattainable at this re z");
  const int n_sum = std::max(8, static_cast<int>(std::ceil(power)));

  KahanSum sum;
  for (int n = 1; n <= n_sum; ++n) sum.add(cpow_real_base(n, -z));

  const double ln_n = std::log(static_cast<double>(n_sum));
  const Complex npz = cexp({-z.re * ln_n, -z.im * ln_n});  // N^{-z}
  sum.add(npz * static_cast<double>(n_sum) / (z - Complex{1.0, 0.0}));  // N^{1-z}/(z-1)
  sum.add(-0.5 * npz);
  sum.add(z * npz / (12.0 * n_sum));
  sum.add(-(z * (z + Complex{1.0, 0.0}) * (z + Complex{2.0, 0.0})) * npz /
          (720.0 * n_sum * static_cast<double>(n_sum) * n_sum));

  const double bound = c * std::pow(n_sum, -(z.re + 4.0)) / (z.re + 4.0);
  const double est = std::min(tail_tol, bound + 8e-16 * (1.0 + abs(sum.s)));
  return {sum.s, est, n_sum};
}

EvalResult zeta_eta(Complex z) {
  if (!is_finite(z)) throw DomainError("zeta_eta: non-finite argument");
  if (z.re <= 0.0) throw DomainError("zeta_eta: requires re z > 0");
  if (dist(z, {1.0, 0.0}) < kPoleEps) throw PoleError("zeta_eta: pole at z = 1", {1.0, 0.0});
  if (eta_terms(z.im) > kMaxAccelTerms) {
    throw DomainError("zeta_eta: |im z| too large for the acceleration scheme");
  }
  if (z.im != 0.0) {
    const double k = std::nearbyint(z.im * kLn2 / (2.0 * kPi));
    if (k != 0.0) {
      const Complex zk{1.0, 2.0 * kPi * k / kLn2};
      if (dist(z, zk) < 1e-3) return eta_near_prefactor_zero(z, zk);
    }
  }
  const EtaPoint q = eta_quotient(z);
  const double est = q.trunc_bound + 2e-16 * q.terms * (1.0 + abs(q.value));
  return {q.value, est, q.terms};
}

EvalResult zeta_strip(Complex z) {
  if (!is_finite(z)) throw DomainError("zeta_strip: non-finite argument");
  if (z.re <= -10.0 || z.re > 10.0) throw DomainError("zeta_strip: re z outside (-10, 10]");
  if (dist(z, {1.0, 0.0}) < kPoleEps) throw PoleError("zeta_strip: pole at z = 1", {1.0, 0.0});
  if (z.re > 0.0) return zeta_eta(z);
  if (abs(z) < kPoleEps) {
    // zeta(1-z) is unavailable this close to its pole; short Taylor series
    const Complex v = Complex{kZetaAt0C0, 0.0} + kZetaAt0C1 * z + kZetaAt0C2 * (z * z);
    return {v, 1e-15, 1};
  }
  // zeta(z) = pi^{z-1/2} gamma((1-z)/2) zeta(1-z) / gamma(z/2), the
  // reflection the completed-function identity implies
  const Complex w{1.0 - z.re, -z.im};
  const EvalResult zw = zeta_eta(w);
  const EvalResult gw = cgamma(0.5 * w);
  const Complex rg = cgamma_reciprocal(0.5 * z);
  const Complex pip = cexp((z - Complex{0.5, 0.0}) * kLnPi);
  const Complex v = pip * gw.value * zw.value * rg;
  const double rel = zw.abs_error_estimate / (abs(zw.value) + 1e-300) + 5e-13;
  return {v, rel * abs(v) + 1e-300, zw.terms_used + gw.terms_used};
}

}  // namespace critline

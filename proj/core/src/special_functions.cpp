#include "wishart/special_functions.hpp"
#include "wishart/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace wishart {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

[[noreturn]] void throw_pole(const char* fn, double x) {
  throw pole_error(std::string(fn) + ": pole at non-positive integer argument " +
                   std::to_string(x));
}

// |sin(pi*x)| with the argument reduced first, so accuracy does not degrade
// with |x|.
double abs_sin_pi(double x) {
  double r = x - std::round(x);
  return std::abs(std::sin(kPi * r));
}

// Lanczos series, valid for x > 0.
double lanczos_ln_gamma(double x) {
  static const double cof[14] = {
      57.1562356658629235,     -59.5979603554754912,
      14.1360979747417471,     -0.491913816097620199,
      0.339946499848118887e-4, 0.465236289270485756e-4,
      -0.983744753048795646e-4, 0.158088703224912494e-3,
      -0.210264441724104883e-3, 0.217439618115212643e-3,
      -0.164318106536763890e-3, 0.844182239838527433e-4,
      -0.261908384015814087e-4, 0.368991826595316234e-5};
  double y = x;
  double tmp = x + 5.24218750000000000;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (int j = 0; j < 14; ++j) ser += cof[j] / ++y;
  return tmp + std::log(2.5066282746310005 * ser / x);
}

} // namespace

double ln_abs_gamma(double x) {
  if (is_nonpositive_integer(x)) throw_pole("ln_abs_gamma", x);
  if (x > 0.0) return lanczos_ln_gamma(x);
  // Reflection: |Gamma(x)| = pi / (|sin(pi x)| * |Gamma(1-x)|) for x < 0.
  return std::log(kPi) - std::log(abs_sin_pi(x)) - lanczos_ln_gamma(1.0 - x);
}

double digamma(double x) {
  if (is_nonpositive_integer(x)) throw_pole("digamma", x);
  // Shift into the asymptotic region, meromorphic continuation included.
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // ln x - 1/(2x) - sum B_{2k} / (2k x^{2k})
  double series = inv2 * (1.0 / 12.0 +
                  inv2 * (-1.0 / 120.0 +
                  inv2 * (1.0 / 252.0 +
                  inv2 * (-1.0 / 240.0 +
                  inv2 * (1.0 / 132.0 +
                  inv2 * (-691.0 / 32760.0))))));
  return acc + std::log(x) - 0.5 * inv - series;
}

double trigamma(double x) {
  if (is_nonpositive_integer(x)) throw_pole("trigamma", x);
  double acc = 0.0;
  while (x < 10.0) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // 1/x + 1/(2x^2) + sum B_{2k) / x^{2k+1}
  double series = inv * inv2 * (1.0 / 6.0 +
                  inv2 * (-1.0 / 30.0 +
                  inv2 * (1.0 / 42.0 +
                  inv2 * (-1.0 / 30.0 +
                  inv2 * (5.0 / 66.0 +
                  inv2 * (-691.0 / 2730.0))))));
  return acc + inv + 0.5 * inv2 + series;
}

double multivariate_polygamma(PolygammaOrder v, int m, double looks) {
  if (m < 1) throw domain_error("multivariate_polygamma: m must be positive");
  double sum = 0.0;
  for (int i = 0; i < m; ++i) {
    const double arg = looks - i;
    sum += (v == PolygammaOrder::digamma) ? digamma(arg) : trigamma(arg);
  }
  return sum;
}

double ln_multivariate_gamma(int m, double looks) {
  if (m < 1) throw domain_error("ln_multivariate_gamma: m must be positive");
  double sum = 0.5 * m * (m - 1) * std::log(kPi);
  for (int k = 0; k < m; ++k) sum += ln_abs_gamma(looks - k);
  return sum;
}

namespace {

constexpr int kItMax = 1000;
const double kEps = std::numeric_limits<double>::epsilon();
const double kFpMin = std::numeric_limits<double>::min() / kEps;

// Series representation of P(a, x); converges fastest for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double del = 1.0 / a;
  double sum = del;
  for (int n = 1; n <= kItMax; ++n) {
    ++ap;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * kEps)
      return sum * std::exp(-x + a * std::log(x) - lanczos_ln_gamma(a));
  }
  throw numerical_error("regularized_gamma_p: series did not converge");
}

// Continued fraction for Q(a, x) by modified Lentz; best for x >= a + 1.
double gamma_q_cf(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kFpMin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kItMax; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = b + an / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) <= kEps)
      return std::exp(-x + a * std::log(x) - lanczos_ln_gamma(a)) * h;
  }
  throw numerical_error("regularized_gamma_q: continued fraction did not converge");
}

} // namespace

double regularized_gamma_p(double a, double x) {
  if (a <= 0.0) throw domain_error("regularized_gamma_p: a must be positive");
  if (x < 0.0) throw domain_error("regularized_gamma_p: x must be non-negative");
  if (x == 0.0) return 0.0;
  return (x < a + 1.0) ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double regularized_gamma_q(double a, double x) {
  if (a <= 0.0) throw domain_error("regularized_gamma_q: a must be positive");
  if (x < 0.0) throw domain_error("regularized_gamma_q: x must be non-negative");
  if (x == 0.0) return 1.0;
  return (x < a + 1.0) ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double chi2_survival(double s, int df) {
  if (s < 0.0) throw domain_error("chi2_survival: statistic must be non-negative");
  if (df < 1) throw domain_error("chi2_survival: df must be positive");
  return regularized_gamma_q(0.5 * df, 0.5 * s);
}

double std_normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double std_normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw domain_error("std_normal_quantile: p must lie strictly in (0, 1)");

  // Acklam's rational approximation, then one Halley step.
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;

  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  const double e = std_normal_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * kPi) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

} // namespace wishart

// Independent oracle implementations used only by tests. Each one takes a
// deliberately different route from the library code it checks: direct
// series with Euler-Maclaurin tails for the polygammas, a pure series for
// the incomplete gamma, std::lgamma plus reflection for the log-gamma,
// Taylor-series erf for the Gaussian CDF, cofactor expansion for 3x3
// determinants, and an explicit Kronecker product for the Fisher algebra.
#ifndef WISHART_TEST_ORACLES_HPP
#define WISHART_TEST_ORACLES_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace oracle {

inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kPi = 3.14159265358979323846;

// ln|Gamma(x)| through std::lgamma; reflection only rearranges it for x < 0.
inline double lgamma_reflection(double x) {
  if (x > 0.0) return std::lgamma(x);
  const double r = x - std::round(x);
  const double abs_sin = std::abs(std::sin(kPi * r));
  return std::log(kPi) - std::log(abs_sin) - std::lgamma(1.0 - x);
}

// psi(x) = -gamma + sum_{k>=0} [1/(k+1) - 1/(x+k)], summed directly with an
// Euler-Maclaurin tail. Valid for every non-pole x by meromorphic
// continuation of the series.
inline double digamma_series(double x) {
  const long K = 1L << 20;
  long double sum = 0.0L;
  for (long k = K - 1; k >= 0; --k)
    sum += 1.0L / (k + 1.0L) - 1.0L / (x + k);
  const long double t = x + K;
  const long double tail_int = std::log(t / (K + 1.0L));
  const long double fK = 1.0L / (K + 1.0L) - 1.0L / t;
  const long double fpK = -1.0L / ((K + 1.0L) * (K + 1.0L)) + 1.0L / (t * t);
  return static_cast<double>(-kEulerGamma + sum + tail_int + 0.5L * fK - fpK / 12.0L);
}

// psi'(x) = sum_{k>=0} 1/(x+k)^2, direct summation with an EM tail.
inline double trigamma_series(double x) {
  const long K = 1L << 20;
  long double sum = 0.0L;
  for (long k = K - 1; k >= 0; --k) sum += 1.0L / ((x + k) * (x + k));
  const long double t = x + K;
  sum += 1.0L / t + 1.0L / (2.0L * t * t) + 1.0L / (6.0L * t * t * t);
  return static_cast<double>(sum);
}

// Regularized lower incomplete gamma by its power series only.
inline double gamma_p_series_only(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_p_series_only");
  if (x == 0.0) return 0.0;
  long double term = 1.0L / a;
  long double sum = term;
  for (int n = 1; n < 10000; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(static_cast<double>(term)) <
        1e-18 * std::abs(static_cast<double>(sum)))
      break;
  }
  return static_cast<double>(sum) * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// erf by Taylor series; adequate to ~1e-14 for |x| <= 3.
inline double erf_series(double x) {
  long double term = x;
  long double sum = x;
  for (int n = 1; n < 120; ++n) {
    term *= -x * x / n;
    sum += term / (2 * n + 1);
  }
  return static_cast<double>(sum * 2.0L / std::sqrt(kPi));
}

inline double normal_cdf_series(double x) {
  return 0.5 * (1.0 + erf_series(x / std::sqrt(2.0)));
}

// Inverse normal CDF by bisection on the series CDF.
inline double normal_quantile_bisect(double p) {
  double lo = -10.0, hi = 10.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (normal_cdf_series(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

inline std::complex<double> det3_cofactor(const Eigen::Matrix3cd& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Column-major vectorization.
inline Eigen::VectorXcd vec(const Eigen::MatrixXcd& m) {
  Eigen::VectorXcd v(m.size());
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) v(k++) = m(i, j);
  return v;
}

struct MeanVar {
  double mean;
  double variance; // of the data, not of the mean
  double std_error; // of the mean
};

template <typename Container>
MeanVar mean_var(const Container& xs) {
  const double n = static_cast<double>(xs.size());
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= n;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double var = ss / (n - 1.0);
  return {mean, var, std::sqrt(var / n)};
}

} // namespace oracle

#endif

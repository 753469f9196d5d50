#ifndef WISHART_SPECIAL_FUNCTIONS_HPP
#define WISHART_SPECIAL_FUNCTIONS_HPP

namespace wishart {

/// ln|Gamma(x)| for any x that is not a non-positive integer.
/// The absolute-value convention extends the log-gamma meromorphically to
/// negative arguments, where Gamma itself alternates sign.
double ln_abs_gamma(double x);

/// psi(x), extended to negative non-integers via the recurrence
/// psi(x) = psi(x+1) - 1/x.
double digamma(double x);

/// psi'(x), extended via psi'(x) = psi'(x+1) + 1/x^2.
double trigamma(double x);

/// Polygamma order selector; only v = 0 (digamma) and v = 1 (trigamma) exist.
enum class PolygammaOrder : int { digamma = 0, trigamma = 1 };

/// psi_m^(v)(L) = sum_{i=0}^{m-1} psi^(v)(L - i).
double multivariate_polygamma(PolygammaOrder v, int m, double looks);

/// ln Gamma_m(L) = m(m-1)/2 ln(pi) + sum_{k=0}^{m-1} ln|Gamma(L - k)|.
double ln_multivariate_gamma(int m, double looks);

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double regularized_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double regularized_gamma_q(double a, double x);

/// Pr(chi^2_df > s); upper-tail probability of a chi-square variable.
double chi2_survival(double s, int df);

/// Inverse standard normal CDF; p in (0, 1).
double std_normal_quantile(double p);

/// Standard normal CDF, used by the quantile refinement and by tests.
double std_normal_cdf(double x);

} // namespace wishart

#endif

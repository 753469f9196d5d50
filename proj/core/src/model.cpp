#include "wishart/model.hpp"
#include "wishart/errors.hpp"
#include "wishart/special_functions.hpp"

#include <Eigen/Cholesky>

#include <cmath>

namespace wishart {

namespace {

Eigen::LLT<Eigen::MatrixXcd> cholesky_or_throw(const HermitianMatrix& a) {
  Eigen::LLT<Eigen::MatrixXcd> llt(a.matrix());
  if (llt.info() != Eigen::Success)
    throw not_positive_definite_error("matrix is not positive definite");
  for (int i = 0; i < a.dim(); ++i)
    if (!(llt.matrixLLT()(i, i).real() > 1e-300))
      throw not_positive_definite_error("Cholesky pivot underflow; matrix numerically singular");
  return llt;
}

} // namespace

double log_det(const HermitianMatrix& a) {
  const auto llt = cholesky_or_throw(a);
  double ld = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    ld += std::log(llt.matrixLLT()(i, i).real());
  return 2.0 * ld;
}

double log_density(const HermitianMatrix& z, const WishartParams& p) {
  const int m = p.dim();
  if (z.dim() != m)
    throw dimension_mismatch_error("log_density: z and Sigma dimensions differ");
  const double L = p.looks;
  const auto llt = cholesky_or_throw(p.sigma);
  double ld_sigma = 0.0;
  for (int i = 0; i < m; ++i) ld_sigma += std::log(llt.matrixLLT()(i, i).real());
  ld_sigma *= 2.0;
  // tr(Sigma^{-1} z) through the factorization, not an explicit inverse.
  const double trace_term = llt.solve(z.matrix()).trace().real();
  return m * L * std::log(L) + (L - m) * log_det(z) - L * ld_sigma -
         ln_multivariate_gamma(m, L) - L * trace_term;
}

double expected_log_det(const WishartParams& p) {
  const int m = p.dim();
  return log_det(p.sigma) + multivariate_polygamma(PolygammaOrder::digamma, m, p.looks) -
         m * std::log(p.looks);
}

HermitianMatrix normalize_covariance(const HermitianMatrix& a) {
  const double tr = a.trace();
  if (!(tr > 0.0))
    throw not_positive_definite_error("normalize_covariance: trace must be positive");
  return a.scaled(1.0 / tr);
}

} // namespace wishart

#ifndef WISHART_MODEL_HPP
#define WISHART_MODEL_HPP

#include "wishart/hermitian.hpp"

namespace wishart {

/// ln|a| via Cholesky; doubles as the positive-definiteness test.
double log_det(const HermitianMatrix& a);

/// Log of the scaled complex Wishart density at z:
///   mL ln L + (L-m) ln|z| - L ln|Sigma| - ln Gamma_m(L) - L tr(Sigma^{-1} z).
double log_density(const HermitianMatrix& z, const WishartParams& p);

/// E{ln|Z|} = ln|Sigma| + psi_m^(0)(L) - m ln L.
double expected_log_det(const WishartParams& p);

/// Sigma' = Sigma / tr(Sigma); unit-trace rescaling.
HermitianMatrix normalize_covariance(const HermitianMatrix& a);

} // namespace wishart

#endif

#ifndef WISHART_INFERENCE_HPP
#define WISHART_INFERENCE_HPP

#include "wishart/entropy.hpp"
#include "wishart/hermitian.hpp"

namespace wishart {

/// Result of the maximum-likelihood fit: Sigma-hat is the sample mean,
/// L-hat the root of the looks score equation.
struct MLFit {
  WishartParams params;
  double residual;        // score value at the returned L-hat, |.| <= 1e-8
  int iterations;
  int branch;             // m-1 for the classical branch (m-1, L_max), else
                          // the lower interval (branch, branch+1)
  double log_likelihood;  // attained total log-likelihood
};

/// Fisher information (or its inverse) in the orthogonal block layout:
/// the scalar looks-looks block, the m^2 x m^2 vec(Sigma) block, and an
/// identically-zero cross block that is not stored.
struct FisherBlocks {
  double ll;
  Eigen::MatrixXcd ss;
};

/// Score of the looks parameter at the ML Sigma:
///   g(L) = m ln L + log_det_gap - psi_m^(0)(L),
/// where log_det_gap = mean_k ln|Z_k| - ln|mean Z| (<= 0 by concavity).
double looks_score(int m, double looks, double log_det_gap);

/// g'(L) = m/L - psi_m^(1)(L).
double looks_score_derivative(int m, double looks);

/// ML fit of (Sigma, L). Requires N >= 2 and a positive-definite sample mean.
MLFit estimate(const SampleSet& sample);

/// K(theta): ll = psi_m^(1)(L) - m/L, ss = L (Sigma^{-1} kron Sigma^{-1}).
FisherBlocks fisher_information(const WishartParams& p);

/// C(theta) = K(theta)^{-1}: ll = [psi_m^(1)(L) - m/L]^{-1},
/// ss = L^{-1} (Sigma kron Sigma).
FisherBlocks cramer_rao(const WishartParams& p);

/// Asymptotic variance of the Shannon or Renyi entropy at the ML estimate.
/// The vec(Sigma^{-1})^t (Sigma kron Sigma) vec(Sigma^{-1}) quadratic form
/// equals m identically, so the variance depends on Sigma only through m;
/// the scalar overload serves fixture-mode inputs.
double entropy_variance(const EntropyKind& kind, int m, double looks);
double entropy_variance(const EntropyKind& kind, const WishartParams& p);

/// Akaike information criterion: -2 sum_k log_density(Z_k; p) + 2 k,
/// k = m^2 real parameters for Hermitian Sigma, +1 when L was estimated.
double aic(const SampleSet& sample, const WishartParams& p, bool looks_fixed);

} // namespace wishart

#endif

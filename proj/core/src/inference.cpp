#include "wishart/inference.hpp"
#include "wishart/errors.hpp"
#include "wishart/model.hpp"
#include "wishart/special_functions.hpp"

#include <cmath>
#include <string>

namespace wishart {

namespace {

constexpr double kScoreTol = 1e-8;
constexpr double kPolePad = 1e-6;
constexpr double kLooksMax = 1e4;
constexpr int kMaxIterations = 200;

struct RootResult {
  double root;
  double residual;
  int iterations;
};

// Safeguarded Newton on a bracket with g(lo) > 0 > g(hi); the score is
// decreasing on every pole-free branch, so the bracket shrinks monotonically.
RootResult solve_bracketed(int m, double gap, double lo, double hi, double init) {
  double x = std::clamp(init, lo, hi);
  double gx = looks_score(m, x, gap);
  int iter = 0;
  while (std::abs(gx) > kScoreTol) {
    if (++iter > kMaxIterations)
      throw no_root_error("estimate: looks score iteration did not converge");
    if (gx > 0.0)
      lo = x;
    else
      hi = x;
    const double slope = looks_score_derivative(m, x);
    double next = slope < 0.0 ? x - gx / slope : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
    gx = looks_score(m, x, gap);
  }
  return {x, gx, iter};
}

} // namespace

double looks_score(int m, double looks, double log_det_gap) {
  return m * std::log(looks) + log_det_gap -
         multivariate_polygamma(PolygammaOrder::digamma, m, looks);
}

double looks_score_derivative(int m, double looks) {
  return m / looks - multivariate_polygamma(PolygammaOrder::trigamma, m, looks);
}

MLFit estimate(const SampleSet& sample) {
  if (sample.size() < 2)
    throw domain_error("estimate: need at least two observations");
  const int m = sample.dim();

  const HermitianMatrix sigma_hat = sample.mean();
  const double ld_mean = log_det(sigma_hat); // throws if the mean is not PD

  double mean_ld = 0.0;
  for (const auto& z : sample) mean_ld += log_det(z);
  mean_ld /= static_cast<double>(sample.size());
  const double gap = mean_ld - ld_mean;

  RootResult r{};
  int branch = -1;

  // Classical branch (m-1, L_max) first; it keeps the m <= L regime whenever
  // the data admit it.
  const double lo = (m - 1) + kPolePad;
  const double g_lo = looks_score(m, lo, gap);
  const double g_hi = looks_score(m, kLooksMax, gap);
  if (g_lo > 0.0 && g_hi < 0.0) {
    r = solve_bracketed(m, gap, lo, kLooksMax, m + 1.0);
    branch = m - 1;
  } else if (g_hi >= 0.0) {
    // Score stays positive out to L_max: the root has run off to infinity,
    // which happens when the sample shows (almost) no variability.
    throw degenerate_sample_error(
        "estimate: looks score has no root below " + std::to_string(kLooksMax) +
        "; sample variability too low to identify a finite number of looks");
  } else {
    for (int k = m - 2; k >= 0 && branch < 0; --k) {
      const double blo = k + kPolePad;
      const double bhi = k + 1 - kPolePad;
      if (looks_score(m, blo, gap) > 0.0 && looks_score(m, bhi, gap) < 0.0) {
        r = solve_bracketed(m, gap, blo, bhi, 0.5 * (blo + bhi));
        branch = k;
      }
    }
    if (branch < 0)
      throw no_root_error("estimate: no branch of the looks score brackets a root");
  }

  const double L = r.root;
  WishartParams params(sigma_hat, L);
  // At (Sigma-hat, L) the trace term reduces to m and the per-sample log
  // determinants have already been averaged.
  const double n = static_cast<double>(sample.size());
  const double loglik =
      n * (m * L * std::log(L) + (L - m) * mean_ld - L * ld_mean -
           ln_multivariate_gamma(m, L) - L * m);
  return MLFit{std::move(params), r.residual, r.iterations, branch, loglik};
}

namespace {

Eigen::MatrixXcd kronecker(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const int ar = static_cast<int>(a.rows()), ac = static_cast<int>(a.cols());
  const int br = static_cast<int>(b.rows()), bc = static_cast<int>(b.cols());
  Eigen::MatrixXcd out(ar * br, ac * bc);
  for (int i = 0; i < ar; ++i)
    for (int j = 0; j < ac; ++j)
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

double shannon_delta_looks(int m, double L) {
  return (m - L) * multivariate_polygamma(PolygammaOrder::trigamma, m, L) + m -
         static_cast<double>(m) * m / L;
}

double renyi_delta_looks(int m, double L, double beta) {
  const double q = L + (1.0 - beta) * (m - L);
  return beta / (1.0 - beta) *
             (multivariate_polygamma(PolygammaOrder::digamma, m, q) -
              multivariate_polygamma(PolygammaOrder::digamma, m, L)) -
         m * beta * std::log(beta) / (1.0 - beta) -
         static_cast<double>(m) * m / L;
}

} // namespace

FisherBlocks fisher_information(const WishartParams& p) {
  const int m = p.dim();
  const double k_ll =
      multivariate_polygamma(PolygammaOrder::trigamma, m, p.looks) - m / p.looks;
  if (!(k_ll > 0.0))
    throw numerical_error("fisher_information: looks block not positive");
  Eigen::MatrixXcd inv = p.sigma.matrix().inverse();
  return {k_ll, p.looks * kronecker(inv, inv)};
}

FisherBlocks cramer_rao(const WishartParams& p) {
  const int m = p.dim();
  const double k_ll =
      multivariate_polygamma(PolygammaOrder::trigamma, m, p.looks) - m / p.looks;
  if (!(k_ll > 0.0))
    throw numerical_error("cramer_rao: looks information not positive");
  const auto& s = p.sigma.matrix();
  return {1.0 / k_ll, kronecker(s, s) / p.looks};
}

double entropy_variance(const EntropyKind& kind, int m, double looks) {
  const double k_ll =
      multivariate_polygamma(PolygammaOrder::trigamma, m, looks) - m / looks;
  if (!(k_ll > 0.0))
    throw numerical_error("entropy_variance: looks information not positive");
  const double m3_over_l = static_cast<double>(m) * m * m / looks;

  double delta_l = 0.0;
  switch (kind.family()) {
    case EntropyFamily::shannon:
      delta_l = shannon_delta_looks(m, looks);
      break;
    case EntropyFamily::renyi:
      if (std::abs(kind.beta() - 1.0) < kEntropyOrderUnityGuard)
        delta_l = shannon_delta_looks(m, looks);
      else
        delta_l = renyi_delta_looks(m, looks, kind.beta());
      break;
    case EntropyFamily::tsallis:
      throw unsupported_kind_error(
          "entropy_variance: the Tsallis entropy variance has no tractable closed form");
  }
  return delta_l * delta_l / k_ll + m3_over_l;
}

double entropy_variance(const EntropyKind& kind, const WishartParams& p) {
  return entropy_variance(kind, p.dim(), p.looks);
}

double aic(const SampleSet& sample, const WishartParams& p, bool looks_fixed) {
  if (sample.empty()) throw domain_error("aic: empty sample");
  double loglik = 0.0;
  for (const auto& z : sample) loglik += log_density(z, p);
  const int m = p.dim();
  const int param_count = m * m + (looks_fixed ? 0 : 1);
  return -2.0 * loglik + 2.0 * param_count;
}

} // namespace wishart

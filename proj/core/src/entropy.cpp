#include "wishart/entropy.hpp"
#include "wishart/errors.hpp"
#include "wishart/model.hpp"
#include "wishart/special_functions.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace wishart {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double renyi_q(int m, double looks, double beta) {
  return looks + (1.0 - beta) * (m - looks);
}

void check_order(double beta) {
  if (!(beta > 0.0))
    throw domain_error("entropy order must be positive");
  if (beta == 1.0)
    throw domain_error("entropy order must differ from 1 (use Shannon)");
}

} // namespace

EntropyKind EntropyKind::renyi(double beta) {
  check_order(beta);
  return EntropyKind(EntropyFamily::renyi, beta);
}

EntropyKind EntropyKind::tsallis(double beta) {
  check_order(beta);
  return EntropyKind(EntropyFamily::tsallis, beta);
}

std::string EntropyKind::name() const {
  switch (family_) {
    case EntropyFamily::shannon:
      return "shannon";
    case EntropyFamily::renyi: {
      std::ostringstream os;
      os << "renyi:" << beta_;
      return os.str();
    }
    case EntropyFamily::tsallis: {
      std::ostringstream os;
      os << "tsallis:" << beta_;
      return os.str();
    }
  }
  return "?";
}

double shannon_entropy_scalar(int m, double looks, double log_det_sigma) {
  const double L = looks;
  double sum_lg = 0.0;
  for (int k = 0; k < m; ++k) sum_lg += ln_abs_gamma(L - k);
  return 0.5 * m * (m - 1) * std::log(kPi) - m * m * std::log(L) +
         m * log_det_sigma + m * L +
         (m - L) * multivariate_polygamma(PolygammaOrder::digamma, m, L) + sum_lg;
}

double log_mu_tilde_scalar(int m, double looks, double log_det_sigma, double beta) {
  check_order(beta);
  const double L = looks;
  const double q = renyi_q(m, L, beta);
  return ln_multivariate_gamma(m, q) - beta * ln_multivariate_gamma(m, L) -
         m * q * std::log(beta) + (1.0 - beta) * m * log_det_sigma -
         m * m * (1.0 - beta) * std::log(L);
}

double renyi_entropy_scalar(int m, double looks, double log_det_sigma, double beta) {
  check_order(beta);
  if (std::abs(beta - 1.0) < kEntropyOrderUnityGuard)
    return shannon_entropy_scalar(m, looks, log_det_sigma);
  const double L = looks;
  const double q = renyi_q(m, L, beta);
  double sum = 0.0;
  for (int i = 0; i < m; ++i)
    sum += ln_abs_gamma(q - i) - beta * ln_abs_gamma(L - i);
  return 0.5 * m * (m - 1) * std::log(kPi) - m * m * std::log(L) +
         m * log_det_sigma - m * q * std::log(beta) / (1.0 - beta) +
         sum / (1.0 - beta);
}

double tsallis_entropy_scalar(int m, double looks, double log_det_sigma, double beta) {
  check_order(beta);
  if (std::abs(beta - 1.0) < kEntropyOrderUnityGuard)
    return shannon_entropy_scalar(m, looks, log_det_sigma);
  const double lmu = log_mu_tilde_scalar(m, looks, log_det_sigma, beta);
  if (lmu > std::log(std::numeric_limits<double>::max()))
    throw overflow_error("tsallis_entropy: mu_tilde exceeds the representable range");
  return std::expm1(lmu) / (1.0 - beta);
}

double entropy_scalar(const EntropyKind& kind, int m, double looks, double log_det_sigma) {
  switch (kind.family()) {
    case EntropyFamily::shannon:
      return shannon_entropy_scalar(m, looks, log_det_sigma);
    case EntropyFamily::renyi:
      return renyi_entropy_scalar(m, looks, log_det_sigma, kind.beta());
    case EntropyFamily::tsallis:
      return tsallis_entropy_scalar(m, looks, log_det_sigma, kind.beta());
  }
  throw domain_error("entropy_scalar: unknown kind");
}

EntropyValue shannon_entropy(const WishartParams& p) {
  return {shannon_entropy_scalar(p.dim(), p.looks, log_det(p.sigma)),
          EntropyKind::shannon(), kNaN};
}

EntropyValue renyi_entropy(const WishartParams& p, double beta) {
  const auto kind = EntropyKind::renyi(beta);
  return {renyi_entropy_scalar(p.dim(), p.looks, log_det(p.sigma), beta), kind,
          renyi_q(p.dim(), p.looks, beta)};
}

EntropyValue tsallis_entropy(const WishartParams& p, double beta) {
  const auto kind = EntropyKind::tsallis(beta);
  return {tsallis_entropy_scalar(p.dim(), p.looks, log_det(p.sigma), beta), kind, kNaN};
}

double log_mu_tilde(const WishartParams& p, double beta) {
  return log_mu_tilde_scalar(p.dim(), p.looks, log_det(p.sigma), beta);
}

double mu_tilde(const WishartParams& p, double beta) {
  const double lmu = log_mu_tilde(p, beta);
  if (lmu > std::log(std::numeric_limits<double>::max()))
    throw overflow_error("mu_tilde exceeds the representable range; use log_mu_tilde");
  return std::exp(lmu);
}

EntropyValue entropy(const EntropyKind& kind, const WishartParams& p) {
  const double q = kind.family() == EntropyFamily::renyi
                       ? renyi_q(p.dim(), p.looks, kind.beta())
                       : kNaN;
  return {entropy_scalar(kind, p.dim(), p.looks, log_det(p.sigma)), kind, q};
}

} // namespace wishart

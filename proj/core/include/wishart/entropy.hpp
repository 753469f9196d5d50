#ifndef WISHART_ENTROPY_HPP
#define WISHART_ENTROPY_HPP

#include "wishart/hermitian.hpp"

#include <string>

namespace wishart {

enum class EntropyFamily { shannon, renyi, tsallis };

/// Entropy selector: Shannon, or Renyi/Tsallis of order beta (beta > 0,
/// beta != 1). Orders within 1e-7 of unity are evaluated through the
/// Shannon formula, which is their common limit.
class EntropyKind {
public:
  static EntropyKind shannon() { return EntropyKind(EntropyFamily::shannon, 1.0); }
  static EntropyKind renyi(double beta);
  static EntropyKind tsallis(double beta);

  EntropyFamily family() const { return family_; }
  double beta() const { return beta_; }

  std::string name() const;

  friend bool operator==(const EntropyKind& a, const EntropyKind& b) {
    return a.family_ == b.family_ && a.beta_ == b.beta_;
  }

private:
  EntropyKind(EntropyFamily f, double b) : family_(f), beta_(b) {}
  EntropyFamily family_;
  double beta_;
};

struct EntropyValue {
  double value;      // nats
  EntropyKind kind;
  double q;          // L + (1-beta)(m-L); recorded for Renyi, NaN otherwise
};

/// Orders closer to 1 than this evaluate via the Shannon limit.
inline constexpr double kEntropyOrderUnityGuard = 1e-7;

// Scalar closed forms. The entropies depend on Sigma only through ln|Sigma|,
// so these back both the matrix-parameter operations and the fixture-mode
// CLI, which has scalar inputs only.
double shannon_entropy_scalar(int m, double looks, double log_det_sigma);
double renyi_entropy_scalar(int m, double looks, double log_det_sigma, double beta);
double tsallis_entropy_scalar(int m, double looks, double log_det_sigma, double beta);
double log_mu_tilde_scalar(int m, double looks, double log_det_sigma, double beta);
double entropy_scalar(const EntropyKind& kind, int m, double looks, double log_det_sigma);

EntropyValue shannon_entropy(const WishartParams& p);
EntropyValue renyi_entropy(const WishartParams& p, double beta);
EntropyValue tsallis_entropy(const WishartParams& p, double beta);

/// mu_tilde_beta = E{f^{beta-1}}, the kernel shared by Renyi and Tsallis.
/// Computed in log space; exponentiation may raise overflow_error.
double mu_tilde(const WishartParams& p, double beta);
double log_mu_tilde(const WishartParams& p, double beta);

EntropyValue entropy(const EntropyKind& kind, const WishartParams& p);

} // namespace wishart

#endif

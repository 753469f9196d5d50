#ifndef WISHART_STATS_TESTS_HPP
#define WISHART_STATS_TESTS_HPP

#include "wishart/entropy.hpp"

#include <span>

namespace wishart {

/// Entropy evaluated at an ML estimate, with its asymptotic variance and
/// the sample size that backs the estimate.
struct EntropyEstimate {
  double value;
  double variance;
  long n;
  EntropyKind kind;
};

struct TestOutcome {
  double statistic;
  int df;
  double p_value;
  double pooled_mean;

  bool reject(double alpha) const { return p_value <= alpha; }
};

/// Which Gaussian quantile parameterizes the interval half-width:
/// two_sided uses z_{alpha/2}; paper_compat uses z_alpha, the convention
/// needed to reproduce published interval tables.
enum class QuantileConvention { two_sided, paper_compat };

struct ConfidenceInterval {
  double lower;
  double upper;
  double level;
  QuantileConvention convention;
};

/// Precision-weighted pooled mean: [sum N_i/s2_i]^{-1} sum N_i H_i / s2_i.
double pooled_entropy_mean(std::span<const EntropyEstimate> estimates);

/// Contrast statistic over r >= 2 populations:
///   S = sum N_i (H_i - pooled)^2 / s2_i,  S ~ chi^2_{r-1} under H0.
TestOutcome entropy_test(std::span<const EntropyEstimate> estimates);

/// r = 1 specialization against a known entropy value v; df = 1.
TestOutcome goodness_of_fit(const EntropyEstimate& estimate, double v);

ConfidenceInterval confidence_interval(const EntropyEstimate& estimate, double level,
                                       QuantileConvention convention);

/// Interval for the difference of two entropies; variances add.
ConfidenceInterval difference_interval(const EntropyEstimate& e1,
                                       const EntropyEstimate& e2, double level,
                                       QuantileConvention convention);

} // namespace wishart

#endif

#ifndef WISHART_SIMULATE_HPP
#define WISHART_SIMULATE_HPP

#include "wishart/entropy.hpp"
#include "wishart/hermitian.hpp"
#include "wishart/rng.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace wishart {

/// n independent draws from the scaled complex Wishart law. Integer L uses
/// the multilook construction (1/L) sum y y^H; non-integer L uses the
/// complex Bartlett decomposition, valid for L > m - 1.
SampleSet sample_wishart(const WishartParams& p, long n, RngStream& stream);

struct MCConfig {
  long replicas = 5500;
  std::vector<long> sample_sizes = {9, 49, 81, 121, 400};
  std::vector<double> levels = {0.01, 0.05, 0.10};
  std::uint64_t master_seed = 1;
  std::vector<EntropyKind> kinds = {EntropyKind::shannon(), EntropyKind::renyi(0.8),
                                    EntropyKind::renyi(0.1)};
  int threads = 1; // 0 = hardware concurrency

  void validate() const;
};

/// One rejection-rate cell (kind x N x alpha) of the report.
struct MCRateCell {
  EntropyKind kind;
  long sample_size;
  double alpha;
  long rejections;
  long replicas_used;
  double rate;
};

/// Mean statistic and its coefficient of variation per (kind, N):
/// cv = sqrt(sum (S_k - mean)^2) / (mean sqrt(R)).
struct MCStatCell {
  EntropyKind kind;
  long sample_size;
  double mean_statistic;
  double cv;
};

struct MCExclusion {
  long sample_size;
  long excluded;
};

struct MCReport {
  std::uint64_t master_seed = 0;
  long replicas = 0;
  bool null_is_true = false; // rates are sizes when true, powers otherwise
  std::vector<MCRateCell> rates;
  std::vector<MCStatCell> statistics;
  std::vector<MCExclusion> exclusions;

  void write_csv(std::ostream& os) const;
  void write_json(std::ostream& os) const;

  const MCRateCell& rate_at(const EntropyKind& kind, long n, double alpha) const;
  const MCStatCell& stat_at(const EntropyKind& kind, long n) const;
};

/// Empirical test size: both samples of every replica come from p.
MCReport mc_size_experiment(const WishartParams& p, const MCConfig& cfg);

/// Empirical test power: samples come from p1 and p2 (size when p1 == p2).
MCReport mc_power_experiment(const WishartParams& p1, const WishartParams& p2,
                             const MCConfig& cfg);

} // namespace wishart

#endif

#ifndef WISHART_RNG_HPP
#define WISHART_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace wishart {

/// Deterministic substream keyed by (master seed, stream index). Variate
/// generation is implemented here rather than with std::*_distribution so
/// that sequences are reproducible across standard libraries.
class RngStream {
public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform();

  /// Uniform on (0, 1]; safe under log().
  double uniform_open();

  /// Standard normal via Box-Muller (pairs cached).
  double normal();

  /// Circular complex Gaussian with E{|z|^2} = 1 (variance 1/2 per
  /// real component).
  std::complex<double> complex_normal();

  /// Gamma(shape, scale 1) via Marsaglia-Tsang squeeze; shape > 0.
  double gamma(double shape);

private:
  std::mt19937_64 engine_;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

} // namespace wishart

#endif

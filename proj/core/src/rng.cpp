#include "wishart/rng.hpp"
#include "wishart/errors.hpp"

#include <cmath>

namespace wishart {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kInv2p53 = 1.0 / 9007199254740992.0; // 2^-53
} // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index) {
  std::seed_seq seq{
      static_cast<std::uint32_t>(master_seed),
      static_cast<std::uint32_t>(master_seed >> 32),
      static_cast<std::uint32_t>(stream_index),
      static_cast<std::uint32_t>(stream_index >> 32),
  };
  engine_.seed(seq);
}

double RngStream::uniform() {
  return static_cast<double>(engine_() >> 11) * kInv2p53;
}

double RngStream::uniform_open() { return 1.0 - uniform(); }

double RngStream::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform_open()));
  const double theta = kTwoPi * uniform();
  cached_normal_ = r * std::sin(theta);
  has_cached_normal_ = true;
  return r * std::cos(theta);
}

std::complex<double> RngStream::complex_normal() {
  // One Box-Muller pair supplies both components; no caching involved.
  const double r = std::sqrt(-std::log(uniform_open()));
  const double theta = kTwoPi * uniform();
  return {r * std::cos(theta), r * std::sin(theta)};
}

double RngStream::gamma(double shape) {
  if (!(shape > 0.0)) throw domain_error("RngStream::gamma: shape must be positive");
  if (shape < 1.0) {
    const double u = uniform_open();
    return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_open();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

} // namespace wishart

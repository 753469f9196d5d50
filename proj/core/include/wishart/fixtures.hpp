#ifndef WISHART_FIXTURES_HPP
#define WISHART_FIXTURES_HPP

#include "wishart/hermitian.hpp"

#include <span>
#include <string_view>

namespace wishart {

/// Published per-region fit: sample size, covariance determinant, and the
/// estimated equivalent number of looks. Enough to evaluate entropies,
/// variances, and intervals without the source imagery.
struct RegionFixture {
  std::string_view id;
  int m;
  long n;
  double det_sigma;
  double looks;
};

/// 3x3 covariance observed on an urban area of the E-SAR Wessling scene.
const HermitianMatrix& esar_urban_covariance();

/// E-SAR Wessling regions A1-A3 (strong, moderate, weak return).
std::span<const RegionFixture> esar_wessling_fixtures();

/// EMISAR Foulum regions B1-B3.
std::span<const RegionFixture> emisar_foulum_fixtures();

/// Case-insensitive lookup across both fixture sets; nullptr when unknown.
const RegionFixture* find_fixture(std::string_view id);

} // namespace wishart

#endif

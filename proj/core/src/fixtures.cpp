#include "wishart/fixtures.hpp"

#include <array>
#include <cctype>

namespace wishart {

const HermitianMatrix& esar_urban_covariance() {
  static const HermitianMatrix sigma = [] {
    const std::array<double, 3> diag = {962892.0, 56707.0, 472251.0};
    const std::array<Complex, 3> upper = {
        Complex(19171.0, -3579.0),    // (0,1)
        Complex(-154638.0, 191388.0), // (0,2)
        Complex(-5798.0, 16812.0),    // (1,2)
    };
    return HermitianMatrix::from_upper(3, diag, upper);
  }();
  return sigma;
}

namespace {

constexpr std::array<RegionFixture, 3> kEsar = {{
    {"A1", 3, 3708, 355494.5, 1.361},
    {"A2", 3, 2088, 3321.241, 1.657},
    {"A3", 3, 1079, 274.189, 2.557},
}};

constexpr std::array<RegionFixture, 3> kEmisar = {{
    {"B1", 3, 3192, 1.609e-5, 6.925},
    {"B2", 3, 1408, 1.112e-6, 11.937},
    {"B3", 3, 1848, 5.814e-7, 10.752},
}};

} // namespace

std::span<const RegionFixture> esar_wessling_fixtures() { return kEsar; }

std::span<const RegionFixture> emisar_foulum_fixtures() { return kEmisar; }

const RegionFixture* find_fixture(std::string_view id) {
  auto matches = [&](const RegionFixture& f) {
    if (f.id.size() != id.size()) return false;
    for (std::size_t i = 0; i < id.size(); ++i)
      if (std::toupper(static_cast<unsigned char>(id[i])) !=
          std::toupper(static_cast<unsigned char>(f.id[i])))
        return false;
    return true;
  };
  for (const auto& f : kEsar)
    if (matches(f)) return &f;
  for (const auto& f : kEmisar)
    if (matches(f)) return &f;
  return nullptr;
}

} // namespace wishart

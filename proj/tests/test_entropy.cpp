#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wishart/entropy.hpp"
#include "wishart/errors.hpp"
#include "wishart/fixtures.hpp"
#include "wishart/model.hpp"
#include "wishart/rng.hpp"
#include "wishart/simulate.hpp"

#include <array>
#include <cmath>
#include <vector>

using namespace wishart;

namespace {

WishartParams unit_exponential() {
  const std::array<double, 1> one = {1.0};
  return WishartParams(HermitianMatrix::diagonal(one), 1.0);
}

HermitianMatrix random_pd(int m, RngStream& rng) {
  Eigen::MatrixXcd x(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) x(i, j) = rng.complex_normal();
  return HermitianMatrix::from_matrix(x * x.adjoint() / m +
                                      0.5 * Eigen::MatrixXcd::Identity(m, m));
}

} // namespace

TEST_CASE("entropy kind validation") {
  CHECK_THROWS_AS(EntropyKind::renyi(1.0), domain_error);
  CHECK_THROWS_AS(EntropyKind::renyi(0.0), domain_error);
  CHECK_THROWS_AS(EntropyKind::tsallis(-0.5), domain_error);
  CHECK(EntropyKind::renyi(0.1).name() == "renyi:0.1");
  CHECK(EntropyKind::shannon().name() == "shannon");
}

TEST_CASE("unit exponential closed forms") {
  const auto p = unit_exponential();
  CHECK(shannon_entropy(p).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mu_tilde(p, 0.5) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(tsallis_entropy(p, 0.5).value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(renyi_entropy(p, 0.5).value ==
        doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));

  CHECK(entropy(EntropyKind::shannon(), p).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(entropy(EntropyKind::tsallis(0.5), p).value ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("published interval midpoints at the fitted urban parameters") {
  const int m = 3;
  const double looks = 1.361;
  const double ld = std::log(355494.5);
  CHECK(std::abs(shannon_entropy_scalar(m, looks, ld) - 38.2055) <= 0.05);
  CHECK(std::abs(renyi_entropy_scalar(m, looks, ld, 0.1) - 61.2075) <= 0.05);
  CHECK(std::abs(renyi_entropy_scalar(m, looks, ld, 0.8) - 44.2045) <= 0.05);
  CHECK(std::abs(entropy_scalar(EntropyKind::renyi(0.1), m, looks, ld) - 61.2075) <= 0.05);
}

TEST_CASE("q bookkeeping") {
  const WishartParams p(esar_urban_covariance(), 4.0);
  const auto r = renyi_entropy(p, 0.8);
  CHECK(r.q == doctest::Approx(4.0 + 0.2 * (3.0 - 4.0)).epsilon(1e-14));
  CHECK(std::isnan(shannon_entropy(p).q));
}

TEST_CASE("order-to-one collapse") {
  RngStream rng(11, 0);
  for (int m : {1, 2, 3}) {
    const auto sigma = random_pd(m, rng);
    for (double looks : {3.2, 4.0, 8.0, 16.0}) {
      const WishartParams p(sigma, looks);
      const double hs = shannon_entropy(p).value;
      for (double beta : {1.0 - 1e-4, 1.0 + 1e-4}) {
        CHECK(std::abs(renyi_entropy(p, beta).value - hs) <= 1e-2);
        CHECK(std::abs(tsallis_entropy(p, beta).value - hs) <= 1e-2);
      }
      CHECK(std::abs(mu_tilde(p, 1.0 - 1e-6) - 1.0) <= 1e-4);
      CHECK(std::abs(mu_tilde(p, 1.0 + 1e-6) - 1.0) <= 1e-4);
    }
  }
}

TEST_CASE("orders within the unity guard evaluate through Shannon") {
  const WishartParams p(esar_urban_covariance(), 4.0);
  CHECK(renyi_entropy(p, 1.0 + 1e-9).value == shannon_entropy(p).value);
  CHECK(tsallis_entropy(p, 1.0 - 1e-9).value == shannon_entropy(p).value);
}

TEST_CASE("scale covariance identity") {
  RngStream rng(13, 0);
  for (int m : {1, 2, 3}) {
    const auto sigma = random_pd(m, rng);
    const WishartParams p(sigma, 4.0);
    const double hs = shannon_entropy(p).value;
    const double hr = renyi_entropy(p, 0.3).value;
    for (double c : {0.5, 1.1, 1.2, 2.0}) {
      const WishartParams pc(sigma.scaled(c), 4.0);
      CHECK(shannon_entropy(pc).value - hs ==
            doctest::Approx(m * m * std::log(c)).epsilon(1e-9));
      CHECK(renyi_entropy(pc, 0.3).value - hr ==
            doctest::Approx(m * m * std::log(c)).epsilon(1e-9));
    }
  }
}

TEST_CASE("renyi order monotonicity and convergence from above") {
  for (double looks : {3.2, 4.0, 8.0, 16.0}) {
    const WishartParams p(esar_urban_covariance(), looks);
    const double hs = shannon_entropy(p).value;
    const double r01 = renyi_entropy(p, 0.1).value;
    const double r08 = renyi_entropy(p, 0.8).value;
    CHECK(r01 >= r08);
    CHECK(r08 >= hs);
  }
}

TEST_CASE("entropy decreases with the number of looks on the case study") {
  double prev = std::numeric_limits<double>::infinity();
  for (int looks = 3; looks <= 50; ++looks) {
    const double h = shannon_entropy(WishartParams(esar_urban_covariance(),
                                                   static_cast<double>(looks)))
                         .value;
    CHECK(h < prev);
    prev = h;
  }
}

TEST_CASE("entropies depend on Sigma only through its determinant") {
  RngStream rng(17, 0);
  for (int rep = 0; rep < 10; ++rep) {
    const auto a = random_pd(3, rng);
    auto b = random_pd(3, rng);
    // Rescale b to match det(a).
    const double c = std::exp((log_det(a) - log_det(b)) / 3.0);
    b = b.scaled(c);
    const WishartParams pa(a, 5.5), pb(b, 5.5);
    CHECK(shannon_entropy(pa).value ==
          doctest::Approx(shannon_entropy(pb).value).epsilon(1e-9));
    CHECK(renyi_entropy(pa, 0.4).value ==
          doctest::Approx(renyi_entropy(pb, 0.4).value).epsilon(1e-9));
  }
}

TEST_CASE("mu_tilde overflow raises, log form survives") {
  const auto big = HermitianMatrix::identity(3).scaled(1e80);
  const WishartParams p(big, 4.0);
  CHECK(std::isfinite(log_mu_tilde(p, 0.1)));
  CHECK(log_mu_tilde(p, 0.1) > 709.0);
  CHECK_THROWS_AS(mu_tilde(p, 0.1), overflow_error);
  CHECK_THROWS_AS(tsallis_entropy(p, 0.1), overflow_error);
}

TEST_CASE("monte carlo oracle: E{-ln f} and E{f^(beta-1)}" * doctest::timeout(300)) {
  const WishartParams p(esar_urban_covariance(), 4.0);
  RngStream rng(23, 0);
  const long n = 20000;
  const SampleSet draws = sample_wishart(p, n, rng);

  std::vector<double> neg_logf;
  neg_logf.reserve(n);
  for (const auto& z : draws) neg_logf.push_back(-log_density(z, p));
  const auto hs = oracle::mean_var(neg_logf);
  CHECK(std::abs(hs.mean - shannon_entropy(p).value) <= 3.0 * hs.std_error);

  for (double beta : {0.5, 0.8}) {
    std::vector<double> fpow;
    fpow.reserve(n);
    for (std::size_t i = 0; i < neg_logf.size(); ++i)
      fpow.push_back(std::exp((beta - 1.0) * -neg_logf[i]));
    const auto mv = oracle::mean_var(fpow);
    CHECK(std::abs(mv.mean - mu_tilde(p, beta)) <= 3.0 * mv.std_error);
  }
}

TEST_CASE("normalized-covariance variant composes") {
  const auto& su = esar_urban_covariance();
  const WishartParams p(normalize_covariance(su), 4.0);
  // tr = 1, so the entropy equals the raw one shifted by m^2 ln tr(Sigma).
  const WishartParams raw(su, 4.0);
  CHECK(shannon_entropy(p).value ==
        doctest::Approx(shannon_entropy(raw).value - 9.0 * std::log(su.trace()))
            .epsilon(1e-9));
}

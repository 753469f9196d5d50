#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wishart/errors.hpp"
#include "wishart/fixtures.hpp"
#include "wishart/inference.hpp"
#include "wishart/model.hpp"
#include "wishart/rng.hpp"
#include "wishart/simulate.hpp"
#include "wishart/special_functions.hpp"

#include <array>
#include <cmath>
#include <vector>

using namespace wishart;

namespace {

HermitianMatrix random_pd(int m, RngStream& rng) {
  Eigen::MatrixXcd x(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) x(i, j) = rng.complex_normal();
  return HermitianMatrix::from_matrix(x * x.adjoint() / m +
                                      0.5 * Eigen::MatrixXcd::Identity(m, m));
}

} // namespace

TEST_CASE("estimate recovers synthetic parameters" * doctest::timeout(300)) {
  const WishartParams truth(esar_urban_covariance(), 8.0);
  RngStream rng(101, 0);
  const SampleSet sample = sample_wishart(truth, 10000, rng);
  const MLFit fit = estimate(sample);

  CHECK(fit.params.looks > 7.6);
  CHECK(fit.params.looks < 8.4);
  CHECK(std::abs(fit.residual) <= 1e-8);
  CHECK(fit.branch == 2); // classical branch for m = 3
  CHECK(fit.params.regime() == LooksRegime::classical);

  const double scale = esar_urban_covariance().matrix().cwiseAbs().maxCoeff();
  const Eigen::MatrixXcd diff =
      fit.params.sigma.matrix() - esar_urban_covariance().matrix();
  CHECK(diff.cwiseAbs().maxCoeff() <= 0.05 * scale);
}

TEST_CASE("estimate of identical matrices is degenerate") {
  const auto z0 = esar_urban_covariance();
  SampleSet sample;
  for (int i = 0; i < 5; ++i) sample.add(z0);
  CHECK_THROWS_AS(estimate(sample), degenerate_sample_error);
  CHECK(sample.mean()(0, 0) == z0(0, 0));
}

TEST_CASE("estimate needs at least two observations") {
  SampleSet sample;
  sample.add(HermitianMatrix::identity(2));
  CHECK_THROWS_AS(estimate(sample), domain_error);
}

TEST_CASE("score is strictly decreasing on every pole-free branch") {
  const int m = 3;
  const double gap = -1.5;
  // Classical branch (2, 1e4) plus the relaxed intervals (1,2) and (0,1).
  const std::vector<std::pair<double, double>> branches = {
      {2.0 + 1e-5, 100.0}, {1.0 + 1e-5, 2.0 - 1e-5}, {1e-5, 1.0 - 1e-5}};
  for (const auto& [lo, hi] : branches) {
    double prev = looks_score(m, lo, gap);
    for (int i = 1; i < 100; ++i) {
      const double x = lo + (hi - lo) * i / 99.0;
      const double g = looks_score(m, x, gap);
      CHECK(g < prev);
      prev = g;
    }
  }
}

TEST_CASE("fisher information blocks") {
  const std::array<double, 1> one = {1.0};
  const WishartParams p1(HermitianMatrix::diagonal(one), 1.0);
  CHECK(fisher_information(p1).ll ==
        doctest::Approx(oracle::kPi * oracle::kPi / 6.0 - 1.0).epsilon(1e-12));

  const WishartParams p2(HermitianMatrix::identity(2), 4.0);
  const auto k = fisher_information(p2);
  CHECK((k.ss - 4.0 * Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("cramer-rao inverts fisher blockwise") {
  RngStream rng(7, 1);
  for (int rep = 0; rep < 5; ++rep) {
    const WishartParams p(random_pd(3, rng), 5.3);
    const auto k = fisher_information(p);
    const auto c = cramer_rao(p);
    CHECK(k.ll * c.ll == doctest::Approx(1.0).epsilon(1e-12));
    const Eigen::MatrixXcd prod = c.ss * k.ss;
    CHECK((prod - Eigen::MatrixXcd::Identity(9, 9)).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("quadratic form vec(S^-1)^t (S kron S) vec(S^-1) equals m") {
  RngStream rng(7, 2);
  for (int rep = 0; rep < 50; ++rep) {
    const int m = 2 + rep % 2;
    const auto s = random_pd(m, rng);
    const Eigen::MatrixXcd inv = s.matrix().inverse();
    const Eigen::VectorXcd v = oracle::vec(inv);
    const Eigen::MatrixXcd kk = oracle::kron(s.matrix(), s.matrix());
    const Complex qf = (v.transpose() * kk * v)(0, 0); // plain transpose
    CHECK(std::abs(qf.real() - m) <= 1e-10);
    CHECK(std::abs(qf.imag()) <= 1e-10);
  }
}

TEST_CASE("entropy variance matches the delta-method quadratic form") {
  RngStream rng(7, 3);
  for (int rep = 0; rep < 8; ++rep) {
    const auto sigma = random_pd(3, rng);
    const WishartParams p(sigma, 4.7);
    const int m = 3;
    const auto c = cramer_rao(p);
    const Eigen::MatrixXcd inv = sigma.matrix().inverse();
    const Eigen::VectorXcd dsig = static_cast<double>(m) * oracle::vec(inv);

    // delta^t C delta with the orthogonal block layout and plain transpose.
    auto full_variance = [&](double delta_l) {
      const Complex block =
          (dsig.transpose() * c.ss * dsig)(0, 0);
      return delta_l * delta_l * c.ll + block.real();
    };

    const double psi1 = multivariate_polygamma(PolygammaOrder::trigamma, m, p.looks);
    const double dl_shannon = (m - p.looks) * psi1 + m - 9.0 / p.looks;
    CHECK(entropy_variance(EntropyKind::shannon(), p) ==
          doctest::Approx(full_variance(dl_shannon)).epsilon(1e-10));

    const double beta = 0.8;
    const double q = p.looks + (1 - beta) * (m - p.looks);
    const double dl_renyi =
        beta / (1 - beta) *
            (multivariate_polygamma(PolygammaOrder::digamma, m, q) -
             multivariate_polygamma(PolygammaOrder::digamma, m, p.looks)) -
        m * beta * std::log(beta) / (1 - beta) - 9.0 / p.looks;
    CHECK(entropy_variance(EntropyKind::renyi(beta), p) ==
          doctest::Approx(full_variance(dl_renyi)).epsilon(1e-10));
  }
}

TEST_CASE("entropy variance limits and rejections") {
  const int m = 3;
  const double looks = 4.0;
  const double vs = entropy_variance(EntropyKind::shannon(), m, looks);
  for (double beta : {1.0 - 1e-4, 1.0 + 1e-4}) {
    const double vr = entropy_variance(EntropyKind::renyi(beta), m, looks);
    CHECK(std::abs(vr - vs) <= 1e-2 * vs);
  }
  CHECK_THROWS_AS(entropy_variance(EntropyKind::tsallis(0.5), m, looks),
                  unsupported_kind_error);

  // Published-width cross check: variance at the A1 fit.
  CHECK(entropy_variance(EntropyKind::shannon(), 3, 1.361) ==
        doctest::Approx(70.3079).epsilon(1e-4));
}

TEST_CASE("aic definition and model preference" * doctest::timeout(300)) {
  const WishartParams truth(esar_urban_covariance(), 8.0);
  RngStream rng(31, 0);
  const SampleSet sample = sample_wishart(truth, 2000, rng);

  const MLFit fit = estimate(sample);
  double loglik = 0.0;
  for (const auto& z : sample) loglik += log_density(z, fit.params);
  CHECK(aic(sample, fit.params, false) ==
        doctest::Approx(-2.0 * loglik + 2.0 * 10.0).epsilon(1e-12));
  CHECK(aic(sample, fit.params, false) == aic(sample, fit.params, false));
  CHECK(fit.log_likelihood == doctest::Approx(loglik).epsilon(1e-9));

  const WishartParams fixed(fit.params.sigma, 3.2);
  CHECK(aic(sample, fit.params, false) < aic(sample, fixed, true));
}

TEST_CASE("score orthogonality of L and vec(Sigma)" * doctest::timeout(300)) {
  const WishartParams p(esar_urban_covariance(), 4.0);
  const int m = 3;
  RngStream rng(37, 0);
  const long n = 30000;

  const Eigen::MatrixXcd inv = p.sigma.matrix().inverse();
  const double ld_sigma = log_det(p.sigma);
  const double psi0 = multivariate_polygamma(PolygammaOrder::digamma, m, p.looks);

  std::vector<std::vector<double>> prod_re(9), prod_im(9);
  const SampleSet draws = sample_wishart(p, n, rng);
  for (const auto& z : draws) {
    const double score_l = m * (std::log(p.looks) + 1.0) + log_det(z) - ld_sigma -
                           psi0 - (inv * z.matrix()).trace().real();
    const Eigen::MatrixXcd score_sigma =
        p.looks * (inv * z.matrix() * inv - inv);
    const Eigen::VectorXcd v = oracle::vec(score_sigma);
    for (int i = 0; i < 9; ++i) {
      prod_re[i].push_back(score_l * v(i).real());
      prod_im[i].push_back(score_l * v(i).imag());
    }
  }
  for (int i = 0; i < 9; ++i) {
    const auto re = oracle::mean_var(prod_re[i]);
    const auto im = oracle::mean_var(prod_im[i]);
    CHECK(std::abs(re.mean) <= 3.0 * re.std_error);
    CHECK(std::abs(im.mean) <= 3.0 * std::max(im.std_error, 1e-12));
  }
}

TEST_CASE("looks estimator variance approaches the bound" * doctest::timeout(600)) {
  const WishartParams truth(esar_urban_covariance(), 4.0);
  const long fits = 1000, n = 500;
  RngStream rng(41, 0);
  std::vector<double> looks_hat;
  looks_hat.reserve(fits);
  for (long r = 0; r < fits; ++r) {
    RngStream stream(41, static_cast<std::uint64_t>(r) + 1);
    looks_hat.push_back(estimate(sample_wishart(truth, n, stream)).params.looks);
  }
  const auto mv = oracle::mean_var(looks_hat);
  const double bound = 1.0 / fisher_information(truth).ll;
  CHECK(std::abs(n * mv.variance - bound) <= 0.15 * bound);
}

#include "wishart/hermitian.hpp"
#include "wishart/errors.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <string>

namespace wishart {

HermitianMatrix HermitianMatrix::from_matrix(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols() || a.rows() < 1)
    throw dimension_mismatch_error("HermitianMatrix: matrix must be square and non-empty");
  const double scale = a.cwiseAbs().maxCoeff();
  const double asym = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (scale > 0.0 && asym > 1e-9 * scale)
    throw domain_error("HermitianMatrix: input asymmetry " + std::to_string(asym) +
                       " exceeds 1e-9 of the largest entry");
  Eigen::MatrixXcd h = 0.5 * (a + a.adjoint());
  h.diagonal() = h.diagonal().real().cast<Complex>();
  return HermitianMatrix(std::move(h));
}

HermitianMatrix HermitianMatrix::from_upper(int m, std::span<const double> diag,
                                            std::span<const Complex> upper) {
  if (m < 1) throw dimension_mismatch_error("HermitianMatrix: dimension must be positive");
  const std::size_t n_upper = static_cast<std::size_t>(m) * (m - 1) / 2;
  if (diag.size() != static_cast<std::size_t>(m) || upper.size() != n_upper)
    throw dimension_mismatch_error("HermitianMatrix: diagonal/upper-triangle sizes do not match dimension");
  Eigen::MatrixXcd h(m, m);
  std::size_t k = 0;
  for (int i = 0; i < m; ++i) {
    h(i, i) = Complex(diag[static_cast<std::size_t>(i)], 0.0);
    for (int j = i + 1; j < m; ++j) {
      h(i, j) = upper[k];
      h(j, i) = std::conj(upper[k]);
      ++k;
    }
  }
  return HermitianMatrix(std::move(h));
}

HermitianMatrix HermitianMatrix::identity(int m) {
  if (m < 1) throw dimension_mismatch_error("HermitianMatrix: dimension must be positive");
  return HermitianMatrix(Eigen::MatrixXcd::Identity(m, m));
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> entries) {
  if (entries.empty()) throw dimension_mismatch_error("HermitianMatrix: dimension must be positive");
  const int m = static_cast<int>(entries.size());
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(m, m);
  for (int i = 0; i < m; ++i) h(i, i) = Complex(entries[static_cast<std::size_t>(i)], 0.0);
  return HermitianMatrix(std::move(h));
}

HermitianMatrix HermitianMatrix::scaled(double factor) const {
  return HermitianMatrix(factor * mat_);
}

bool HermitianMatrix::is_positive_definite() const {
  Eigen::LLT<Eigen::MatrixXcd> llt(mat_);
  if (llt.info() != Eigen::Success) return false;
  for (int i = 0; i < dim(); ++i)
    if (!(llt.matrixLLT()(i, i).real() > 1e-300)) return false;
  return true;
}

WishartParams::WishartParams(HermitianMatrix sigma_in, double looks_in)
    : sigma(std::move(sigma_in)), looks(looks_in) {
  if (!(looks > 0.0))
    throw domain_error("WishartParams: looks must be positive");
  for (int i = 0; i < sigma.dim(); ++i) {
    const double arg = looks - i;
    if (arg <= 0.0 && arg == std::floor(arg))
      throw pole_error("WishartParams: looks - " + std::to_string(i) +
                       " hits a non-positive integer; density and entropies undefined");
  }
}

SampleSet::SampleSet(std::vector<HermitianMatrix> items) {
  for (auto& z : items) add(std::move(z));
}

void SampleSet::add(HermitianMatrix z) {
  if (!items_.empty() && z.dim() != items_.front().dim())
    throw dimension_mismatch_error("SampleSet: all items must share one dimension");
  items_.push_back(std::move(z));
}

int SampleSet::dim() const {
  if (items_.empty()) throw domain_error("SampleSet: empty sample has no dimension");
  return items_.front().dim();
}

HermitianMatrix SampleSet::mean() const {
  if (items_.empty()) throw domain_error("SampleSet: mean of empty sample");
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim(), dim());
  for (const auto& z : items_) acc += z.matrix();
  acc /= static_cast<double>(items_.size());
  return HermitianMatrix::from_matrix(acc);
}

} // namespace wishart

#ifndef WISHART_HERMITIAN_HPP
#define WISHART_HERMITIAN_HPP

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

namespace wishart {

using Complex = std::complex<double>;

/// Hermitian positive-definite matrix value type. Hermitian symmetry is
/// guaranteed by construction (exactly, not just to tolerance); positive
/// definiteness is established by the Cholesky-based operations that need it.
class HermitianMatrix {
public:
  /// Symmetrizes (a + a^H)/2. Rejects input whose asymmetry exceeds
  /// 1e-9 of the largest entry magnitude.
  static HermitianMatrix from_matrix(const Eigen::MatrixXcd& a);

  /// Exact construction from the diagonal (real) and the row-major upper
  /// triangle: (0,1), (0,2), ..., (1,2), ...
  static HermitianMatrix from_upper(int m, std::span<const double> diag,
                                    std::span<const Complex> upper);

  static HermitianMatrix identity(int m);
  static HermitianMatrix diagonal(std::span<const double> entries);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return mat_; }
  Complex operator()(int i, int j) const { return mat_(i, j); }

  double trace() const { return mat_.trace().real(); }
  HermitianMatrix scaled(double factor) const;

  bool is_positive_definite() const;

private:
  explicit HermitianMatrix(Eigen::MatrixXcd m) : mat_(std::move(m)) {}
  Eigen::MatrixXcd mat_;
};

/// Whether the looks parameter admits the classical Wishart derivation
/// (L >= m) or only the relaxed, meromorphically-continued evaluation.
enum class LooksRegime { classical, relaxed };

/// Scaled complex Wishart parameter pair (Sigma, L).
struct WishartParams {
  WishartParams(HermitianMatrix sigma_in, double looks_in);

  HermitianMatrix sigma;
  double looks;

  int dim() const { return sigma.dim(); }
  LooksRegime regime() const {
    return looks < sigma.dim() ? LooksRegime::relaxed : LooksRegime::classical;
  }
};

/// Ordered collection of same-dimension Hermitian matrices.
class SampleSet {
public:
  SampleSet() = default;
  explicit SampleSet(std::vector<HermitianMatrix> items);

  void add(HermitianMatrix z);
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  int dim() const;
  const HermitianMatrix& operator[](std::size_t i) const { return items_[i]; }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  /// Arithmetic mean, re-symmetrized against accumulation error.
  HermitianMatrix mean() const;

private:
  std::vector<HermitianMatrix> items_;
};

} // namespace wishart

#endif

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace bosesemi {

/// Dense column-major square matrix; column j holds eigenvector j.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t row, std::size_t col) { return data_[col * n_ + row]; }
  double operator()(std::size_t row, std::size_t col) const { return data_[col * n_ + row]; }

  [[nodiscard]] std::span<const double> column(std::size_t col) const {
    return {data_.data() + col * n_, n_};
  }
  [[nodiscard]] std::span<double> column(std::size_t col) { return {data_.data() + col * n_, n_}; }

  static Matrix identity(std::size_t n);

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct EigenDecomposition {
  std::vector<double> values;          // ascending
  std::optional<Matrix> vectors;       // orthonormal columns, matching values
  int iterations = 0;                  // total QL sweeps
};

/// Eigenvalues (and optionally eigenvectors) of the real symmetric tridiagonal
/// matrix with the given diagonal and first off-diagonal, by implicit-shift QL
/// with Wilkinson-type shifts. Eigenvector columns are sign-fixed so their first
/// nonzero component is positive.
///
/// Throws ConvergenceError if an eigenvalue needs more than 60 sweeps.
EigenDecomposition symmetric_tridiagonal_eigen(std::span<const double> diag,
                                               std::span<const double> offdiag,
                                               bool want_vectors);

}  // namespace bosesemi

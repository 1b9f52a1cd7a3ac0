#pragma once

#include <vector>

#include "radda/system_matrix.hpp"

namespace radda {

/// LU factorization with partial pivoting of a banded matrix, P·A = L·U.
/// Row interchanges widen U to lower+upper superdiagonals. Solves act on
/// n×t blocks; the row sweeps run over contiguous length-t rows.
class BandedLU {
 public:
  /// Throws ErrorCode::shift_singular when a pivot vanishes.
  explicit BandedLU(const BandedMatrix& a);

  Index size() const noexcept { return n_; }

  /// A⁻¹·Z, or A⁻ᵀ·Z when transposed.
  Matrix solve(const Matrix& z, bool transposed = false) const;

 private:
  double& at(Index i, Index j) { return work_[static_cast<std::size_t>(i * width_ + j - i + lower_)]; }
  double at(Index i, Index j) const {
    return work_[static_cast<std::size_t>(i * width_ + j - i + lower_)];
  }

  Index n_;
  Index lower_;
  Index upper_;   // after fill-in: lower + original upper
  Index width_;   // columns i−lower .. i+upper stored per row
  std::vector<double> work_;
  std::vector<Index> pivots_;
};

}  // namespace radda

#pragma once

#include <span>
#include <variant>
#include <vector>

#include "radda/linalg.hpp"

namespace radda {

/// Square banded matrix stored by diagonals. Diagonal d (−lower ≤ d ≤ upper)
/// holds a(i, i+d) at position i; positions outside the matrix are zero.
class BandedMatrix {
 public:
  BandedMatrix(Index n, Index lower, Index upper);

  Index size() const noexcept { return n_; }
  Index lower() const noexcept { return lower_; }
  Index upper() const noexcept { return upper_; }

  /// Zero outside the band.
  double operator()(Index i, Index j) const;
  /// Throws ErrorCode::invalid_dimension outside the band.
  void set(Index i, Index j, double value);

  /// Length-n view of diagonal `offset`, padded with zeros.
  std::span<const double> diagonal(Index offset) const;

  /// out = A·Z, or Aᵀ·Z when transposed.
  Matrix apply(const Matrix& z, bool transposed = false) const;

  BandedMatrix transposed() const;
  BandedMatrix shifted(double alpha) const;  // A − αI
  Matrix to_dense() const;
  double norm1() const;
  double norm_inf() const;

  friend bool operator==(const BandedMatrix&, const BandedMatrix&) = default;

 private:
  std::span<double> diagonal_mut(Index offset);

  Index n_;
  Index lower_;
  Index upper_;
  std::vector<double> diags_;
};

/// State matrix A of a Riccati problem: banded when the structure is known,
/// dense otherwise.
class SystemMatrix {
 public:
  SystemMatrix(BandedMatrix banded) : storage_(std::move(banded)) {}
  SystemMatrix(Matrix dense);

  Index size() const;
  bool is_banded() const noexcept { return std::holds_alternative<BandedMatrix>(storage_); }
  const BandedMatrix& banded() const { return std::get<BandedMatrix>(storage_); }
  const Matrix& dense() const { return std::get<Matrix>(storage_); }

  Matrix apply(const Matrix& z, bool transposed = false) const;
  SystemMatrix transposed() const;
  Matrix to_dense() const;
  double norm1() const;
  double norm_inf() const;

 private:
  std::variant<BandedMatrix, Matrix> storage_;
};

}  // namespace radda

#include "radda/banded_lu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "radda/error.hpp"
#include "radda/kernels.hpp"

namespace radda {

using RowBlock = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

BandedLU::BandedLU(const BandedMatrix& a)
    : n_(a.size()),
      lower_(a.lower()),
      upper_(a.lower() + a.upper()),
      width_(2 * a.lower() + a.upper() + 1),
      work_(static_cast<std::size_t>(n_ * width_), 0.0),
      pivots_(static_cast<std::size_t>(n_)) {
  for (Index i = 0; i < n_; ++i)
    for (Index j = std::max<Index>(0, i - a.lower()); j <= std::min(n_ - 1, i + a.upper()); ++j)
      at(i, j) = a(i, j);

  const double scale = std::max(a.norm_inf(), std::numeric_limits<double>::min());
  const double tiny = static_cast<double>(n_) * std::numeric_limits<double>::epsilon() * scale;

  Index last_col = 0;  // rightmost column touched by U so far
  for (Index j = 0; j < n_; ++j) {
    const Index below = std::min(lower_, n_ - 1 - j);
    Index piv = j;
    for (Index r = j + 1; r <= j + below; ++r)
      if (std::abs(at(r, j)) > std::abs(at(piv, j))) piv = r;
    pivots_[static_cast<std::size_t>(j)] = piv;
    const double pv = at(piv, j);
    if (!std::isfinite(pv)) throw Error(ErrorCode::numeric, "banded LU: non-finite pivot");
    if (std::abs(pv) <= tiny)
      throw Error(ErrorCode::shift_singular,
                  "banded LU: zero pivot in column " + std::to_string(j));
    last_col = std::max(last_col, std::min(n_ - 1, piv + upper_ - lower_));
    if (piv != j)
      for (Index c = j; c <= last_col; ++c) std::swap(at(j, c), at(piv, c));
    for (Index r = j + 1; r <= j + below; ++r) {
      const double l = at(r, j) / at(j, j);
      at(r, j) = l;
      if (l != 0.0)
        for (Index c = j + 1; c <= last_col; ++c) at(r, c) -= l * at(j, c);
    }
  }
}

Matrix BandedLU::solve(const Matrix& z, bool transposed) const {
  if (z.rows() != n_) throw Error(ErrorCode::invalid_dimension, "banded solve: row mismatch");
  const auto& k = kernels::active();
  const auto t = static_cast<std::size_t>(z.cols());
  RowBlock x = z;
  auto row = [&](Index i) { return x.data() + i * x.cols(); };
  auto swap_rows = [&](Index i, Index j) {
    if (i != j) std::swap_ranges(row(i), row(i) + t, row(j));
  };

  if (!transposed) {
    // L⁻¹ with interleaved interchanges
    for (Index j = 0; j < n_; ++j) {
      swap_rows(j, pivots_[static_cast<std::size_t>(j)]);
      const Index below = std::min(lower_, n_ - 1 - j);
      for (Index r = j + 1; r <= j + below; ++r) k.axpy(-at(r, j), row(j), row(r), t);
    }
    for (Index i = n_ - 1; i >= 0; --i) {
      for (Index c = i + 1; c <= std::min(n_ - 1, i + upper_); ++c)
        k.axpy(-at(i, c), row(c), row(i), t);
      k.scal(1.0 / at(i, i), row(i), t);
    }
  } else {
    // Uᵀ is lower triangular: column-oriented forward sweep
    for (Index i = 0; i < n_; ++i) {
      k.scal(1.0 / at(i, i), row(i), t);
      for (Index c = i + 1; c <= std::min(n_ - 1, i + upper_); ++c)
        k.axpy(-at(i, c), row(i), row(c), t);
    }
    for (Index j = n_ - 1; j >= 0; --j) {
      const Index below = std::min(lower_, n_ - 1 - j);
      for (Index r = j + 1; r <= j + below; ++r) k.axpy(-at(r, j), row(r), row(j), t);
      swap_rows(j, pivots_[static_cast<std::size_t>(j)]);
    }
  }
  return x;
}

}  // namespace radda

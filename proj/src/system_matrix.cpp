#include "radda/system_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "radda/error.hpp"
#include "radda/kernels.hpp"

namespace radda {

BandedMatrix::BandedMatrix(Index n, Index lower, Index upper)
    : n_(n), lower_(lower), upper_(upper) {
  if (n < 1 || lower < 0 || upper < 0 || lower >= n || upper >= n)
    throw Error(ErrorCode::invalid_dimension,
                "banded matrix needs n >= 1 and bandwidths in [0, n)");
  diags_.assign(static_cast<std::size_t>((lower + upper + 1) * n), 0.0);
}

std::span<const double> BandedMatrix::diagonal(Index offset) const {
  if (offset < -lower_ || offset > upper_)
    throw Error(ErrorCode::invalid_dimension, "diagonal offset outside band");
  return {diags_.data() + (offset + lower_) * n_, static_cast<std::size_t>(n_)};
}

std::span<double> BandedMatrix::diagonal_mut(Index offset) {
  return {diags_.data() + (offset + lower_) * n_, static_cast<std::size_t>(n_)};
}

double BandedMatrix::operator()(Index i, Index j) const {
  const Index d = j - i;
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || d < -lower_ || d > upper_) return 0.0;
  return diags_[static_cast<std::size_t>((d + lower_) * n_ + i)];
}

void BandedMatrix::set(Index i, Index j, double value) {
  const Index d = j - i;
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || d < -lower_ || d > upper_)
    throw Error(ErrorCode::invalid_dimension,
                "entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside band");
  diags_[static_cast<std::size_t>((d + lower_) * n_ + i)] = value;
}

Matrix BandedMatrix::apply(const Matrix& z, bool transposed) const {
  if (z.rows() != n_) throw Error(ErrorCode::invalid_dimension, "banded apply: row mismatch");
  const auto& k = kernels::active();
  Matrix out = Matrix::Zero(n_, z.cols());
  for (Index d = -lower_; d <= upper_; ++d) {
    const double* a = diags_.data() + (d + lower_) * n_;
    // rows i with 0 <= i + d < n
    const Index i0 = std::max<Index>(0, -d);
    const Index i1 = std::min<Index>(n_, n_ - d);
    const auto len = static_cast<std::size_t>(i1 - i0);
    for (Index c = 0; c < z.cols(); ++c) {
      const double* zc = z.data() + c * n_;
      double* oc = out.data() + c * n_;
      if (!transposed)
        k.vmuladd(a + i0, zc + i0 + d, oc + i0, len);
      else
        k.vmuladd(a + i0, zc + i0, oc + i0 + d, len);
    }
  }
  return out;
}

BandedMatrix BandedMatrix::transposed() const {
  BandedMatrix t(n_, upper_, lower_);
  for (Index d = -lower_; d <= upper_; ++d) {
    const Index i0 = std::max<Index>(0, -d);
    const Index i1 = std::min<Index>(n_, n_ - d);
    for (Index i = i0; i < i1; ++i) t.set(i + d, i, (*this)(i, i + d));
  }
  return t;
}

BandedMatrix BandedMatrix::shifted(double alpha) const {
  BandedMatrix s = *this;
  for (double& v : s.diagonal_mut(0)) v -= alpha;
  return s;
}

Matrix BandedMatrix::to_dense() const {
  Matrix m = Matrix::Zero(n_, n_);
  for (Index d = -lower_; d <= upper_; ++d) {
    const Index i0 = std::max<Index>(0, -d);
    const Index i1 = std::min<Index>(n_, n_ - d);
    for (Index i = i0; i < i1; ++i) m(i, i + d) = (*this)(i, i + d);
  }
  return m;
}

double BandedMatrix::norm1() const {
  double best = 0.0;
  for (Index j = 0; j < n_; ++j) {
    double s = 0.0;
    for (Index i = std::max<Index>(0, j - upper_); i <= std::min(n_ - 1, j + lower_); ++i)
      s += std::abs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

double BandedMatrix::norm_inf() const {
  double best = 0.0;
  for (Index i = 0; i < n_; ++i) {
    double s = 0.0;
    for (Index j = std::max<Index>(0, i - lower_); j <= std::min(n_ - 1, i + upper_); ++j)
      s += std::abs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

SystemMatrix::SystemMatrix(Matrix dense) : storage_(std::move(dense)) {
  const auto& m = std::get<Matrix>(storage_);
  if (m.rows() != m.cols() || m.rows() < 1)
    throw Error(ErrorCode::invalid_dimension, "system matrix must be square and nonempty");
}

Index SystemMatrix::size() const {
  return is_banded() ? banded().size() : dense().rows();
}

Matrix SystemMatrix::apply(const Matrix& z, bool transposed) const {
  if (is_banded()) return banded().apply(z, transposed);
  if (z.rows() != dense().rows())
    throw Error(ErrorCode::invalid_dimension, "dense apply: row mismatch");
  if (transposed) return dense().transpose() * z;
  return dense() * z;
}

SystemMatrix SystemMatrix::transposed() const {
  if (is_banded()) return SystemMatrix(banded().transposed());
  return SystemMatrix(Matrix(dense().transpose()));
}

Matrix SystemMatrix::to_dense() const { return is_banded() ? banded().to_dense() : dense(); }

double SystemMatrix::norm1() const {
  return is_banded() ? banded().norm1() : dense().cwiseAbs().colwise().sum().maxCoeff();
}

double SystemMatrix::norm_inf() const {
  return is_banded() ? banded().norm_inf() : dense().cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace radda

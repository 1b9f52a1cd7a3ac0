#include <string>

#include "radda/error.hpp"
#include "radda/radda.hpp"

namespace radda {

ImplicitAhat::ImplicitAhat(std::shared_ptr<const CayleyBase> base) : base_(std::move(base)) {
  if (!base_) throw Error(ErrorCode::invalid_dimension, "ImplicitAhat needs a base operator");
}

Matrix ImplicitAhat::apply(const Matrix& z, bool transposed) const {
  if (z.rows() != size()) throw Error(ErrorCode::invalid_dimension, "Ahat apply: row mismatch");
  if (z.cols() == 0) return Matrix(size(), 0);
  return apply_at(depth(), z, transposed);
}

Matrix ImplicitAhat::apply_at(int depth, const Matrix& z, bool transposed) const {
  if (depth == 0) return base_->apply(z, transposed);
  const Correction& c = *levels_[static_cast<std::size_t>(depth - 1)];
  Matrix out = apply_at(depth - 1, apply_at(depth - 1, z, transposed), transposed);
  if (!transposed)
    out.noalias() += c.left * gram(c.right, z);
  else
    out.noalias() += c.right * gram(c.left, z);
  if (!out.allFinite())
    throw Error(ErrorCode::numeric, "Ahat apply non-finite at depth " + std::to_string(depth));
  return out;
}

ImplicitAhat ImplicitAhat::extended(Matrix left, Matrix right) const {
  if (left.rows() != size() || right.rows() != size() || left.cols() != right.cols())
    throw Error(ErrorCode::invalid_dimension, "Ahat correction factors must be n×r pairs");
  ImplicitAhat next = *this;
  next.levels_.push_back(
      std::make_shared<const Correction>(Correction{std::move(left), std::move(right)}));
  return next;
}

Matrix ImplicitAhat::materialize() const {
  return apply(Matrix::Identity(size(), size()));
}

}  // namespace radda

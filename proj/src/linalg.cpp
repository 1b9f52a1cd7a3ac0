#include "radda/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "radda/error.hpp"
#include "radda/kernels.hpp"

namespace radda {

Matrix gram(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows())
    throw Error(ErrorCode::invalid_dimension, "gram: row counts differ");
  Matrix out(x.cols(), y.cols());
  if (out.size() == 0) return out;
  kernels::active().gram(x.data(), static_cast<std::size_t>(x.rows()),
                         static_cast<std::size_t>(x.cols()), y.data(),
                         static_cast<std::size_t>(y.rows()), static_cast<std::size_t>(y.cols()),
                         static_cast<std::size_t>(x.rows()), out.data(),
                         static_cast<std::size_t>(out.rows()));
  return out;
}

Matrix lu_solve_transposed(const Eigen::PartialPivLU<Matrix>& lu, const Matrix& b) {
  // Aᵀ = Uᵀ Lᵀ P
  Matrix y = lu.matrixLU().triangularView<Eigen::Upper>().transpose().solve(b);
  lu.matrixLU().triangularView<Eigen::UnitLower>().transpose().solveInPlace(y);
  return lu.permutationP().transpose() * y;
}

Matrix symmetrized(const Matrix& m) { return 0.5 * (m + m.transpose()); }

double min_eigenvalue_sym(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(symmetrized(m), Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

double spectral_norm_sym(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  if (!m.allFinite()) throw Error(ErrorCode::numeric, "spectral_norm_sym: non-finite entries");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(m, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success)
    throw Error(ErrorCode::numeric, "spectral_norm_sym: eigensolver failed");
  return eig.eigenvalues().cwiseAbs().maxCoeff();
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  if (!m.allFinite()) throw Error(ErrorCode::numeric, "spectral_norm: non-finite entries");
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double spectral_radius(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::ComplexEigenSolver<Matrix> eig(m, false);
  return eig.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace radda

#pragma once

#include <Eigen/Dense>

namespace radda {

using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Xᵀ·Y for tall column blocks of equal height, through the active kernels.
Matrix gram(const Matrix& x, const Matrix& y);

/// A⁻ᵀ·B from an existing P·A = L·U factorization.
Matrix lu_solve_transposed(const Eigen::PartialPivLU<Matrix>& lu, const Matrix& b);

/// (M + Mᵀ)/2
Matrix symmetrized(const Matrix& m);

/// Smallest eigenvalue of the symmetric part of a square matrix.
double min_eigenvalue_sym(const Matrix& m);

/// max |λ(M)| for symmetric M. Throws ErrorCode::numeric on non-finite input.
double spectral_norm_sym(const Matrix& m);

/// Largest singular value.
double spectral_norm(const Matrix& m);

/// Spectral radius of a square matrix.
double spectral_radius(const Matrix& m);

}  // namespace radda

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "radda/error.hpp"
#include "radda/problem.hpp"

namespace radda {
namespace {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

// Exchanges the adjacent diagonal entries k, k+1 of the upper triangular T by
// a unitary similarity, accumulated into U.
void swap_adjacent(CMatrix& t, CMatrix& u, Index k) {
  const Complex a = t(k, k);
  const Complex b = t(k + 1, k + 1);
  const Complex c = t(k, k + 1);
  // eigenvector of [[a, c], [0, b]] for b
  Complex v1 = c;
  Complex v2 = b - a;
  const double norm = std::hypot(std::abs(v1), std::abs(v2));
  if (norm == 0.0) return;
  v1 /= norm;
  v2 /= norm;
  Eigen::Matrix2cd z;
  z << v1, -std::conj(v2), v2, std::conj(v1);

  t.middleRows(k, 2) = z.adjoint() * t.middleRows(k, 2);
  t.middleCols(k, 2) = t.middleCols(k, 2) * z;
  u.middleCols(k, 2) = u.middleCols(k, 2) * z;
  t(k + 1, k) = 0.0;
}

}  // namespace

Matrix care_oracle_small(const CareProblem& problem, Index cap) {
  const Index n = problem.n();
  const Matrix h = hamiltonian(problem, cap);
  Eigen::ComplexSchur<Matrix> schur(h, true);
  if (schur.info() != Eigen::Success)
    throw Error(ErrorCode::numeric, "oracle: Schur decomposition did not converge");
  CMatrix t = schur.matrixT();
  CMatrix u = schur.matrixU();

  const double tie_tol =
      100.0 * static_cast<double>(2 * n) * std::numeric_limits<double>::epsilon() *
      h.cwiseAbs().colwise().sum().maxCoeff();
  Index stable = 0;
  for (Index i = 0; i < 2 * n; ++i) {
    const double re = t(i, i).real();
    if (std::abs(re) <= tie_tol)
      throw Error(ErrorCode::no_stabilizing_solution,
                  "oracle: Hamiltonian eigenvalue on the imaginary axis");
    if (re < 0.0) ++stable;
  }
  if (stable != n)
    throw Error(ErrorCode::no_stabilizing_solution,
                "oracle: found " + std::to_string(stable) + " stable eigenvalues, need " +
                    std::to_string(n));

  // move the stable eigenvalues to the leading block, preserving their order
  Index target = 0;
  for (Index j = 0; j < 2 * n && target < n; ++j) {
    if (t(j, j).real() >= 0.0) continue;
    for (Index k = j - 1; k >= target; --k) swap_adjacent(t, u, k);
    ++target;
  }

  const CMatrix u1 = u.topLeftCorner(n, n);
  const CMatrix u2 = u.bottomLeftCorner(n, n);
  Eigen::PartialPivLU<CMatrix> lu(u1.transpose());
  if (!(lu.rcond() > 1e-13))
    throw Error(ErrorCode::conditioning, "oracle: leading subspace block is ill-conditioned");
  const CMatrix x = lu.solve(u2.transpose()).transpose();
  return symmetrized(x.real());
}

}  // namespace radda

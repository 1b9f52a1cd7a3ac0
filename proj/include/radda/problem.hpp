#pragma once

#include "radda/system_matrix.hpp"

namespace radda {

/// Dense helpers (Hamiltonian, oracle) refuse problems larger than this.
inline constexpr Index kOracleCap = 256;
/// Dense doubling iteration cap; the CLI lets RADDA_DENSE_CAP override it.
inline constexpr Index kDenseCap = 512;

/// Coefficients of AᵀX + XA − XGX + Q = 0 with Q = CᵀC and G = BBᵀ.
/// Q and G are implied by C and B and never stored.
class CareProblem {
 public:
  /// Throws ErrorCode::invalid_dimension unless A is n×n, B is n×m, C is p×n.
  CareProblem(SystemMatrix a, Matrix b, Matrix c);

  Index n() const noexcept { return a_.size(); }
  Index m() const noexcept { return b_.cols(); }
  Index p() const noexcept { return c_.rows(); }

  const SystemMatrix& A() const noexcept { return a_; }
  const Matrix& B() const noexcept { return b_; }
  const Matrix& C() const noexcept { return c_; }

  Matrix Q() const { return c_.transpose() * c_; }  // dense, small n only
  Matrix G() const { return b_ * b_.transpose(); }  // dense, small n only

  /// ‖Q‖₂ = σ_max(C)², from the p×p product C·Cᵀ.
  double q_norm() const;

 private:
  SystemMatrix a_;
  Matrix b_;
  Matrix c_;
};

/// Tridiagonal stencil (2, −12, −3) with B = 0.02·1, C = 0.01·1ᵀ. n ≥ 2.
CareProblem make_example1(Index n);

/// Pentadiagonal stencil (1, 2, −10, −3, −2) with B = 0.005·1, C = 0.001·1ᵀ. n ≥ 3.
CareProblem make_example2(Index n);

/// The complementary equation AY + YAᵀ − YQY + G = 0 written as a CARE:
/// (Aᵀ, Cᵀ, Bᵀ).
CareProblem dual_problem(const CareProblem& problem);

struct Residual {
  double value = 0.0;
  /// True when ‖Q‖₂ = 0 and `value` is the unnormalized residual norm.
  bool absolute = false;
};

/// ‖AᵀX + XA − XGX + Q‖₂ / ‖Q‖₂ using dense n×n arithmetic.
Residual residual_dense(const CareProblem& problem, const Matrix& x);

/// H = [[A, −G], [−Q, −Aᵀ]].
Matrix hamiltonian(const CareProblem& problem, Index cap = kOracleCap);

/// Stabilizing solution from the stable invariant subspace of H, computed by
/// an ordered complex Schur form. Symmetrized on return.
Matrix care_oracle_small(const CareProblem& problem, Index cap = kOracleCap);

}  // namespace radda

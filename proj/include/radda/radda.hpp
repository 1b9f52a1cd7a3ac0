#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "radda/cayley.hpp"
#include "radda/error.hpp"
#include "radda/report.hpp"

namespace radda {

/// Symmetric matrix F·S·Fᵀ held by a tall factor F (n×r) and core S (r×r).
struct LowRankSymmetric {
  Matrix F;
  Matrix S;

  Index size() const noexcept { return F.rows(); }
  Index rank() const noexcept { return F.cols(); }
  Matrix to_dense() const { return F * S * F.transpose(); }
};

/// Â_k kept as the chain Â_j = Â_{j−1}² + L_j·R_jᵀ over the Cayley base Â₀,
/// so that no n×n matrix is ever formed. One application at depth k costs
/// 2ᵏ base applications plus the thin corrections.
class ImplicitAhat {
 public:
  explicit ImplicitAhat(std::shared_ptr<const CayleyBase> base);

  int depth() const noexcept { return static_cast<int>(levels_.size()); }
  Index size() const noexcept { return base_->size(); }

  /// Â_k·Z, or Â_kᵀ·Z when transposed.
  Matrix apply(const Matrix& z, bool transposed = false) const;

  /// The chain one level deeper: Â_{k+1} = Â_k² + left·rightᵀ.
  ImplicitAhat extended(Matrix left, Matrix right) const;

  /// Dense Â_k; for tests at small n.
  Matrix materialize() const;

  const Matrix& left(int level) const { return levels_.at(level - 1)->left; }
  const Matrix& right(int level) const { return levels_.at(level - 1)->right; }

 private:
  struct Correction {
    Matrix left;
    Matrix right;
  };

  Matrix apply_at(int depth, const Matrix& z, bool transposed) const;

  std::shared_ptr<const CayleyBase> base_;
  std::vector<std::shared_ptr<const Correction>> levels_;
};

/// Low-rank doubling iterate: X_k = D Σ Dᵀ, Y_k = P Γ Pᵀ, with the cached
/// cross Gram W = DᵀP.
struct RaddaState {
  int k = 0;
  Matrix D;
  Matrix Sigma;
  Matrix P;
  Matrix Gamma;
  ImplicitAhat Ahat;
  Matrix cross;

  LowRankSymmetric X() const { return {D, Sigma}; }
  LowRankSymmetric Y() const { return {P, Gamma}; }
};

RaddaState radda_initial_state(const InitialData& init);

/// One low-rank doubling step. Only p_k×m_k Gram blocks are formed from the
/// factors; Â_k enters through block applications. Throws
/// ErrorCode::breakdown when a core solve fails.
RaddaState radda_step(const RaddaState& state);

/// Relative residual of X = D Σ Dᵀ from the thin basis [Cᵀ, D, AᵀD]; never
/// forms an n×n matrix. `q_norm` is ‖Q‖₂; zero selects the absolute residual.
Residual residual_lowrank(const CareProblem& problem, const Matrix& d, const Matrix& sigma,
                          double q_norm);

/// Recompresses D Σ Dᵀ by dropping eigenpairs with |λ| ≤ tol·|λ|_max of the
/// projected core. tol = 0 returns the input unchanged.
LowRankSymmetric truncate_factors(const Matrix& d, const Matrix& sigma, double tol);

struct RaddaOptions {
  std::optional<double> alpha;
  double tol = 1e-12;
  int maxit = 30;
  double truncate_tol = 0.0;
  /// Evaluate the residual every this many steps (always on the last).
  int residual_every = 1;
  /// Stop (as max-iterations) before a step that would widen D or P past this
  /// many columns. 0 selects max(2n, 256).
  Index max_rank = 0;
  std::function<void(const RaddaState&)> on_iterate;  // called for every k, including 0
};

struct RaddaResult {
  LowRankSymmetric X;
  SolveReport report;
};

/// Solver breakdown mid-run; carries the history up to the failure.
class BreakdownError : public Error {
 public:
  BreakdownError(const std::string& message, SolveReport partial)
      : Error(ErrorCode::breakdown, message), partial_(std::move(partial)) {}
  const SolveReport& partial_report() const noexcept { return partial_; }

 private:
  SolveReport partial_;
};

RaddaResult radda_solve(const CareProblem& problem, const RaddaOptions& options = {});

}  // namespace radda

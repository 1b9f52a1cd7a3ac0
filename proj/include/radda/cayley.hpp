#pragma once

#include <memory>
#include <variant>

#include "radda/banded_lu.hpp"
#include "radda/problem.hpp"

namespace radda {

/// Default shift sqrt(‖A‖₁·‖A‖_∞).
double choose_alpha(const CareProblem& problem);

/// A_α = A − αI factored once; every solve of the run reuses it.
class ShiftedFactorization {
 public:
  /// Throws ErrorCode::shift_singular when A_α is singular.
  ShiftedFactorization(const CareProblem& problem, double alpha);

  double alpha() const noexcept { return alpha_; }
  Index size() const noexcept { return n_; }

  Matrix solve(const Matrix& z) const;             // A_α⁻¹·Z
  Matrix solve_transposed(const Matrix& z) const;  // A_α⁻ᵀ·Z

 private:
  double alpha_;
  Index n_;
  std::variant<BandedLU, Eigen::PartialPivLU<Matrix>> lu_;
};

std::shared_ptr<const ShiftedFactorization> build_shifted(const CareProblem& problem,
                                                          double alpha);

/// Â₀ = I + 2α·V_α⁻¹ with V_α = A_α + G·A_α⁻ᵀ·Q, applied through the
/// Woodbury form so each application costs one A_α solve plus thin products:
///   V_α⁻¹Z = A_α⁻¹Z − P₀ (I + V₀ᵀV₀)⁻¹ V₀ᵀ D₀ᵀZ
///   V_α⁻ᵀZ = A_α⁻ᵀZ − D₀ V₀ (I + V₀ᵀV₀)⁻¹ P₀ᵀZ
/// where D₀ = A_α⁻ᵀCᵀ, P₀ = A_α⁻¹B, V₀ = C·P₀.
class CayleyBase {
 public:
  CayleyBase(std::shared_ptr<const ShiftedFactorization> shifted, Matrix d0, Matrix p0,
             Matrix v0);

  Index size() const noexcept { return d0_.rows(); }
  Matrix apply(const Matrix& z, bool transposed = false) const;

 private:
  std::shared_ptr<const ShiftedFactorization> shifted_;
  Matrix d0_;
  Matrix p0_;
  Matrix v0_;
  Eigen::LLT<Matrix> inner_;  // I_m + V₀ᵀV₀
};

struct InitialData {
  Matrix D0;      // n×p
  Matrix Sigma0;  // p×p
  Matrix P0;      // n×m
  Matrix Gamma0;  // m×m
  std::shared_ptr<const CayleyBase> Ahat0;
};

/// Low-rank k = 0 data; only thin products of B, C, D₀, P₀ are formed.
InitialData init_lowrank(const CareProblem& problem,
                         std::shared_ptr<const ShiftedFactorization> shifted);

struct DenseInitialData {
  Matrix Ahat0;
  Matrix X0;
  Matrix Y0;
};

/// Dense k = 0 data straight from U_α = A_αᵀ + Q·A_α⁻¹·G and V_α; a route
/// independent of the Woodbury forms above.
DenseInitialData init_dense(const CareProblem& problem, double alpha, Index cap = kDenseCap);

}  // namespace radda

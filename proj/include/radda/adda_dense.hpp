#pragma once

#include <functional>
#include <optional>

#include "radda/cayley.hpp"
#include "radda/report.hpp"

namespace radda {

/// Dense doubling iterate (Â_k, X_k, Y_k).
struct AddaDenseState {
  int k = 0;
  Matrix Ahat;
  Matrix X;
  Matrix Y;
};

AddaDenseState adda_initial_state(const CareProblem& problem, double alpha,
                                  Index cap = kDenseCap);

/// One doubling step:
///   Â ← Â(I+YX)⁻¹Â,  X ← X + Âᵀ(I+XY)⁻¹XÂ,  Y ← Y + ÂY(I+XY)⁻¹Âᵀ.
/// (I+XY) = (I+YX)ᵀ, so a single LU serves every solve.
/// Throws ErrorCode::singular_update if I + YX is numerically singular.
AddaDenseState adda_step_dense(const AddaDenseState& state);

struct DenseSolveOptions {
  std::optional<double> alpha;
  double tol = 1e-12;
  int maxit = 30;
  Index cap = kDenseCap;
  std::function<void(const AddaDenseState&)> on_iterate;  // called for every k, including 0
};

struct DenseSolveResult {
  Matrix X;
  SolveReport report;
};

DenseSolveResult adda_solve_dense(const CareProblem& problem, const DenseSolveOptions& options = {});

/// Oracle quantities for checking the closed forms of the doubling iterates.
struct VerificationContext {
  double alpha = 0.0;
  Matrix Xstar;  // stabilizing solution of the CARE
  Matrix Ystar;  // stabilizing solution of the dual equation
  Matrix R;      // A − G·X*
  Matrix S;      // Aᵀ − Q·Y*
  Matrix CR;     // (R + αI)(R − αI)⁻¹
  Matrix CS;     // (S + αI)(S − αI)⁻¹

  /// Throws ErrorCode::cayley_singular if R − αI or S − αI is singular.
  static VerificationContext build(const CareProblem& problem, double alpha,
                                   Index cap = kOracleCap);

  /// M^(2^k) by repeated squaring.
  static Matrix doubled_power(const Matrix& m, int k);
};

struct ClosedFormDiagnostics {
  double ahat_deviation = 0.0;        // ‖Â_k − (I + Y_k X*) CR^(2^k)‖_F
  double error_deviation = 0.0;       // ‖(X* − X_k) − (I + X_k Y*) CS^(2^k) X* CR^(2^k)‖_F
  double dual_error_deviation = 0.0;  // ‖(Y* − Y_k) − (I + Y_k X*) CR^(2^k) Y* CS^(2^k)‖_F
  double ahat_norm = 0.0;             // ‖Â_k‖_F
  double error_norm = 0.0;            // ‖X* − X_k‖_F
  double spectral_radius = 0.0;       // ρ(CR)
};

ClosedFormDiagnostics verify_closed_forms(const AddaDenseState& state, const VerificationContext& ctx);

/// ‖M J Mᵀ − L J Lᵀ‖_F / ‖M‖_F² for M = [[Â, 0], [−X, I]], L = [[I, Y], [0, Âᵀ]].
double verify_symplectic_pencil(const AddaDenseState& state);

}  // namespace radda

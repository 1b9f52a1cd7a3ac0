#include "radda/adda_dense.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "radda/error.hpp"

namespace radda {

const char* to_string(Termination t) noexcept {
  switch (t) {
    case Termination::converged: return "converged";
    case Termination::max_iterations: return "max-iterations";
    case Termination::breakdown: return "breakdown";
  }
  return "unknown";
}

AddaDenseState adda_initial_state(const CareProblem& problem, double alpha, Index cap) {
  DenseInitialData init = init_dense(problem, alpha, cap);
  return {0, std::move(init.Ahat0), std::move(init.X0), std::move(init.Y0)};
}

AddaDenseState adda_step_dense(const AddaDenseState& state) {
  const Index n = state.Ahat.rows();
  const Matrix& a = state.Ahat;
  Eigen::PartialPivLU<Matrix> lu(Matrix::Identity(n, n) + state.Y * state.X);  // I + YX
  if (!(lu.rcond() > std::numeric_limits<double>::epsilon()))
    throw Error(ErrorCode::singular_update,
                "I + Y_k X_k is singular at k = " + std::to_string(state.k));

  AddaDenseState next;
  next.k = state.k + 1;
  next.Ahat = a * lu.solve(a);
  // (I+XY)⁻¹X solved against (I+YX)ᵀ; Y(I+XY)⁻¹ = (I+YX)⁻¹Y
  const Matrix ixy_x = lu_solve_transposed(lu, state.X);
  const Matrix y_ixy = lu.solve(state.Y);
  next.X = symmetrized(state.X + a.transpose() * ixy_x * a);
  next.Y = symmetrized(state.Y + a * y_ixy * a.transpose());
  if (!next.Ahat.allFinite() || !next.X.allFinite() || !next.Y.allFinite())
    throw Error(ErrorCode::numeric, "dense doubling step produced non-finite values");
  return next;
}

DenseSolveResult adda_solve_dense(const CareProblem& problem, const DenseSolveOptions& options) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  auto elapsed_ms = [](clock::time_point from) {
    return std::chrono::duration<double, std::milli>(clock::now() - from).count();
  };

  SolveReport report;
  report.alpha = options.alpha.value_or(choose_alpha(problem));
  const Index n = problem.n();

  auto tick = clock::now();
  AddaDenseState state = adda_initial_state(problem, report.alpha, options.cap);
  Residual res = residual_dense(problem, state.X);
  report.absolute_residual = res.absolute;
  report.history.push_back({0, res.value, n, n, elapsed_ms(tick)});
  if (options.on_iterate) options.on_iterate(state);

  while (!(res.value < options.tol) && state.k < options.maxit) {
    tick = clock::now();
    state = adda_step_dense(state);
    res = residual_dense(problem, state.X);
    report.history.push_back({state.k, res.value, n, n, elapsed_ms(tick)});
    if (options.on_iterate) options.on_iterate(state);
  }
  report.iterations = state.k;
  report.termination = res.value < options.tol ? Termination::converged : Termination::max_iterations;
  report.total_ms = elapsed_ms(start);
  return {std::move(state.X), std::move(report)};
}

namespace {

Matrix cayley(const Matrix& m, double alpha) {
  const Index n = m.rows();
  const Matrix id = Matrix::Identity(n, n);
  Eigen::PartialPivLU<Matrix> lu(m - alpha * id);
  if (!(lu.rcond() > std::numeric_limits<double>::epsilon()))
    throw Error(ErrorCode::cayley_singular, "Cayley transform: M - alpha*I is singular");
  // (M + αI)(M − αI)⁻¹ = (M − αI)⁻¹(M + αI): the factors commute
  return lu.solve(m + alpha * id);
}

}  // namespace

VerificationContext VerificationContext::build(const CareProblem& problem, double alpha,
                                               Index cap) {
  VerificationContext ctx;
  ctx.alpha = alpha;
  ctx.Xstar = care_oracle_small(problem, cap);
  ctx.Ystar = care_oracle_small(dual_problem(problem), cap);
  const Matrix a = problem.A().to_dense();
  ctx.R = a - problem.G() * ctx.Xstar;
  ctx.S = a.transpose() - problem.Q() * ctx.Ystar;
  ctx.CR = cayley(ctx.R, alpha);
  ctx.CS = cayley(ctx.S, alpha);
  return ctx;
}

Matrix VerificationContext::doubled_power(const Matrix& m, int k) {
  Matrix p = m;
  for (int i = 0; i < k; ++i) p = p * p;
  return p;
}

ClosedFormDiagnostics verify_closed_forms(const AddaDenseState& state, const VerificationContext& ctx) {
  const Index n = state.X.rows();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix cr = VerificationContext::doubled_power(ctx.CR, state.k);
  const Matrix cs = VerificationContext::doubled_power(ctx.CS, state.k);

  ClosedFormDiagnostics d;
  d.ahat_deviation = (state.Ahat - (id + state.Y * ctx.Xstar) * cr).norm();
  d.error_deviation =
      ((ctx.Xstar - state.X) - (id + state.X * ctx.Ystar) * cs * ctx.Xstar * cr).norm();
  d.dual_error_deviation =
      ((ctx.Ystar - state.Y) - (id + state.Y * ctx.Xstar) * cr * ctx.Ystar * cs).norm();
  d.ahat_norm = state.Ahat.norm();
  d.error_norm = (ctx.Xstar - state.X).norm();
  d.spectral_radius = spectral_radius(ctx.CR);
  return d;
}

double verify_symplectic_pencil(const AddaDenseState& state) {
  const Index n = state.X.rows();
  const Matrix id = Matrix::Identity(n, n);
  Matrix m = Matrix::Zero(2 * n, 2 * n);
  m.topLeftCorner(n, n) = state.Ahat;
  m.bottomLeftCorner(n, n) = -state.X;
  m.bottomRightCorner(n, n) = id;
  Matrix l = Matrix::Zero(2 * n, 2 * n);
  l.topLeftCorner(n, n) = id;
  l.topRightCorner(n, n) = state.Y;
  l.bottomRightCorner(n, n) = state.Ahat.transpose();
  Matrix j = Matrix::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = id;
  j.bottomLeftCorner(n, n) = -id;
  const double scale = m.squaredNorm();
  return (m * j * m.transpose() - l * j * l.transpose()).norm() / scale;
}

}  // namespace radda

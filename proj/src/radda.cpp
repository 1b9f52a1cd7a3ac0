#include "radda/radda.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <string>

namespace radda {
namespace {

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

Eigen::PartialPivLU<Matrix> factor_core(const Matrix& m, int k, const char* what) {
  Eigen::PartialPivLU<Matrix> lu(m);
  if (m.size() > 0 && !(lu.rcond() > std::numeric_limits<double>::epsilon()))
    throw Error(ErrorCode::breakdown,
                std::string(what) + " is singular at k = " + std::to_string(k));
  return lu;
}

// Upper-trapezoidal factor R̂ of a thin Householder QR, min(rows, cols)×cols.
Matrix thin_r(const Matrix& f) {
  Eigen::HouseholderQR<Matrix> qr(f);
  const Index r = std::min(f.rows(), f.cols());
  return qr.matrixQR().topRows(r).triangularView<Eigen::Upper>();
}

}  // namespace

RaddaState radda_initial_state(const InitialData& init) {
  RaddaState s{0, init.D0, init.Sigma0, init.P0, init.Gamma0, ImplicitAhat(init.Ahat0), Matrix()};
  s.cross = gram(s.D, s.P);
  return s;
}

RaddaState radda_step(const RaddaState& state) {
  const int k = state.k;
  const Matrix& w = state.cross;  // DᵀP
  const Matrix& sigma = state.Sigma;
  const Matrix& gamma = state.Gamma;
  const Index pk = sigma.rows();
  const Index mk = gamma.rows();

  const Matrix dyd = symmetrized(w * gamma * w.transpose());  // DᵀYD
  const Matrix pxp = symmetrized(w.transpose() * sigma * w);  // PᵀXP

  // K = I + Σ·DᵀYD; its transpose I + DᵀYD·Σ appears in the Â correction.
  const auto k_lu = factor_core(Matrix::Identity(pk, pk) + sigma * dyd, k, "I + Sigma D'YD");
  const auto kg_lu = factor_core(Matrix::Identity(mk, mk) + gamma * pxp, k, "I + Gamma P'XP");

  Matrix sigma_new = symmetrized(sigma - k_lu.solve(sigma * dyd * sigma));
  // Γ − ΓPᵀXPΓ(I + PᵀXPΓ)⁻¹, and (I + PᵀXPΓ)ᵀ = I + Γ·PᵀXP
  const Matrix gpg = gamma * pxp * gamma;
  Matrix gamma_new = symmetrized(gamma - Matrix(kg_lu.solve(gpg.transpose()).transpose()));

  // Â_{k+1} = Â_k² − Â_k·Y D Σ (I + DᵀYDΣ)⁻¹·(Â_kᵀD)ᵀ with Y D Σ = P·ΓWᵀΣ, so the
  // left factor is (Â_kP)·coef and only Â_kP is needed.
  const Matrix gws = gamma * w.transpose() * sigma;                 // m_k×p_k
  const Matrix coef = k_lu.solve(gws.transpose()).transpose();       // ΓWᵀΣ(I + DᵀYDΣ)⁻¹

  const Matrix ap = state.Ahat.apply(state.P, false);   // Â_k P
  const Matrix atd = state.Ahat.apply(state.D, true);   // Â_kᵀ D

  RaddaState next{k + 1,
                  hcat(state.D, atd),
                  direct_sum(sigma, sigma_new),
                  hcat(state.P, ap),
                  direct_sum(gamma, gamma_new),
                  state.Ahat.extended(-(ap * coef), atd),
                  Matrix(pk * 2, mk * 2)};

  next.cross.topLeftCorner(pk, mk) = w;
  next.cross.topRightCorner(pk, mk) = gram(state.D, ap);
  next.cross.bottomLeftCorner(pk, mk) = gram(atd, state.P);
  next.cross.bottomRightCorner(pk, mk) = gram(atd, ap);

  if (!next.Sigma.allFinite() || !next.Gamma.allFinite())
    throw Error(ErrorCode::breakdown, "non-finite core at k = " + std::to_string(k + 1));
  return next;
}

Residual residual_lowrank(const CareProblem& problem, const Matrix& d, const Matrix& sigma,
                          double q_norm) {
  const Index n = problem.n();
  const Index p = problem.p();
  const Index r = d.cols();
  if (d.rows() != n || sigma.rows() != r || sigma.cols() != r)
    throw Error(ErrorCode::invalid_dimension, "residual_lowrank: factor shapes mismatch");

  // AᵀX + XA − XGX + Q = F·S·Fᵀ with F = [Cᵀ, D, AᵀD],
  // S = [[I, 0, 0], [0, −ΣWWᵀΣ, Σ], [0, Σ, 0]], W = DᵀB.
  Matrix f(n, p + 2 * r);
  f.leftCols(p) = problem.C().transpose();
  f.middleCols(p, r) = d;
  f.rightCols(r) = problem.A().apply(d, true);

  const Matrix w = gram(d, problem.B());
  const Matrix sw = sigma * w;
  Matrix core = Matrix::Zero(p + 2 * r, p + 2 * r);
  core.topLeftCorner(p, p).setIdentity();
  core.block(p, p, r, r) = -sw * sw.transpose();
  core.block(p, p + r, r, r) = sigma;
  core.block(p + r, p, r, r) = sigma;

  const Matrix rf = thin_r(f);
  const double norm = spectral_norm_sym(symmetrized(rf * core * rf.transpose()));
  if (q_norm == 0.0) return {norm, true};
  return {norm / q_norm, false};
}

LowRankSymmetric truncate_factors(const Matrix& d, const Matrix& sigma, double tol) {
  if (tol <= 0.0 || d.cols() == 0) return {d, sigma};
  const Index n = d.rows();
  const Index r = std::min(n, d.cols());
  Eigen::HouseholderQR<Matrix> qr(d);
  const Matrix rf = qr.matrixQR().topRows(r).triangularView<Eigen::Upper>();
  const Matrix q = qr.householderQ() * Matrix::Identity(n, r);

  Eigen::SelfAdjointEigenSolver<Matrix> eig(symmetrized(rf * sigma * rf.transpose()));
  const auto& lambda = eig.eigenvalues();
  const double top = lambda.cwiseAbs().maxCoeff();
  std::vector<Index> keep;
  for (Index i = 0; i < lambda.size(); ++i)
    if (std::abs(lambda(i)) > tol * top) keep.push_back(i);

  LowRankSymmetric out{Matrix(n, static_cast<Index>(keep.size())),
                       Matrix::Zero(static_cast<Index>(keep.size()),
                                    static_cast<Index>(keep.size()))};
  for (std::size_t c = 0; c < keep.size(); ++c) {
    const auto ci = static_cast<Index>(c);
    out.F.col(ci) = q * eig.eigenvectors().col(keep[c]);
    out.S(ci, ci) = lambda(keep[c]);
  }
  return out;
}

RaddaResult radda_solve(const CareProblem& problem, const RaddaOptions& options) {
  using clock = std::chrono::steady_clock;
  auto elapsed_ms = [](clock::time_point from) {
    return std::chrono::duration<double, std::milli>(clock::now() - from).count();
  };
  if (!(options.tol > 0.0)) throw Error(ErrorCode::invalid_dimension, "tol must be positive");
  if (options.maxit < 1) throw Error(ErrorCode::invalid_dimension, "maxit must be >= 1");
  const int every = std::max(1, options.residual_every);

  const auto start = clock::now();
  SolveReport report;
  report.alpha = options.alpha.value_or(choose_alpha(problem));
  const double q_norm = problem.q_norm();
  report.absolute_residual = q_norm == 0.0;

  auto tick = clock::now();
  const auto shifted = build_shifted(problem, report.alpha);
  RaddaState state = radda_initial_state(init_lowrank(problem, shifted));
  double res = residual_lowrank(problem, state.D, state.Sigma, q_norm).value;
  report.history.push_back({0, res, state.D.cols(), state.P.cols(), elapsed_ms(tick)});
  if (options.on_iterate) options.on_iterate(state);

  const Index rank_cap = options.max_rank > 0 ? options.max_rank : std::max<Index>(2 * problem.n(), 256);
  auto room_to_double = [&](const RaddaState& s) {
    return 2 * std::max(s.D.cols(), s.P.cols()) <= std::max(rank_cap, Index{1});
  };

  while (!(res < options.tol) && state.k < options.maxit && room_to_double(state)) {
    tick = clock::now();
    try {
      state = radda_step(state);
    } catch (const Error& e) {
      report.iterations = state.k;
      report.termination = Termination::breakdown;
      report.total_ms = elapsed_ms(start);
      throw BreakdownError(e.what(), std::move(report));
    }
    if (options.truncate_tol > 0.0) {
      LowRankSymmetric x = truncate_factors(state.D, state.Sigma, options.truncate_tol);
      LowRankSymmetric y = truncate_factors(state.P, state.Gamma, options.truncate_tol);
      state.D = std::move(x.F);
      state.Sigma = std::move(x.S);
      state.P = std::move(y.F);
      state.Gamma = std::move(y.S);
      state.cross = gram(state.D, state.P);
    }
    double current = std::numeric_limits<double>::quiet_NaN();
    if (state.k % every == 0 || state.k == options.maxit || !room_to_double(state)) {
      current = residual_lowrank(problem, state.D, state.Sigma, q_norm).value;
      res = current;
    }
    report.history.push_back({state.k, current, state.D.cols(), state.P.cols(), elapsed_ms(tick)});
    if (options.on_iterate) options.on_iterate(state);
  }

  report.iterations = state.k;
  report.termination = res < options.tol ? Termination::converged : Termination::max_iterations;
  report.total_ms = elapsed_ms(start);
  return {LowRankSymmetric{std::move(state.D), std::move(state.Sigma)}, std::move(report)};
}

}  // namespace radda

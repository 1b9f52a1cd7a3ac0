#include "radda/cayley.hpp"

#include <cmath>
#include <string>

#include "radda/error.hpp"

namespace radda {

double choose_alpha(const CareProblem& problem) {
  return std::sqrt(problem.A().norm1() * problem.A().norm_inf());
}

namespace {

std::variant<BandedLU, Eigen::PartialPivLU<Matrix>> factor_shifted(const CareProblem& problem,
                                                                   double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw Error(ErrorCode::shift_singular, "shift must be positive and finite");
  const SystemMatrix& a = problem.A();
  if (a.is_banded()) return BandedLU(a.banded().shifted(alpha));

  const Index n = a.size();
  Matrix shifted = a.dense() - alpha * Matrix::Identity(n, n);
  Eigen::PartialPivLU<Matrix> lu(shifted);
  const double tiny = static_cast<double>(n) * std::numeric_limits<double>::epsilon() *
                      shifted.cwiseAbs().rowwise().sum().maxCoeff();
  const auto diag = lu.matrixLU().diagonal().cwiseAbs();
  if (!(diag.minCoeff() > tiny))
    throw Error(ErrorCode::shift_singular, "A - alpha*I is singular");
  return lu;
}

}  // namespace

ShiftedFactorization::ShiftedFactorization(const CareProblem& problem, double alpha)
    : alpha_(alpha), n_(problem.n()), lu_(factor_shifted(problem, alpha)) {}

Matrix ShiftedFactorization::solve(const Matrix& z) const {
  if (const auto* band = std::get_if<BandedLU>(&lu_)) return band->solve(z, false);
  return std::get<Eigen::PartialPivLU<Matrix>>(lu_).solve(z);
}

Matrix ShiftedFactorization::solve_transposed(const Matrix& z) const {
  if (const auto* band = std::get_if<BandedLU>(&lu_)) return band->solve(z, true);
  return lu_solve_transposed(std::get<Eigen::PartialPivLU<Matrix>>(lu_), z);
}

std::shared_ptr<const ShiftedFactorization> build_shifted(const CareProblem& problem,
                                                          double alpha) {
  return std::make_shared<const ShiftedFactorization>(problem, alpha);
}

CayleyBase::CayleyBase(std::shared_ptr<const ShiftedFactorization> shifted, Matrix d0,
                       Matrix p0, Matrix v0)
    : shifted_(std::move(shifted)), d0_(std::move(d0)), p0_(std::move(p0)), v0_(std::move(v0)) {
  const Index m = p0_.cols();
  inner_.compute(Matrix::Identity(m, m) + v0_.transpose() * v0_);
  if (inner_.info() != Eigen::Success)
    throw Error(ErrorCode::numeric, "I + V0^T V0 is not positive definite");
}

Matrix CayleyBase::apply(const Matrix& z, bool transposed) const {
  if (z.rows() != size()) throw Error(ErrorCode::invalid_dimension, "Ahat0 apply: row mismatch");
  const double two_alpha = 2.0 * shifted_->alpha();
  Matrix out;
  if (!transposed) {
    Matrix vinv = shifted_->solve(z);
    const Matrix small = inner_.solve(v0_.transpose() * gram(d0_, z));
    vinv.noalias() -= p0_ * small;
    out = z + two_alpha * vinv;
  } else {
    Matrix vinv = shifted_->solve_transposed(z);
    const Matrix small = v0_ * inner_.solve(gram(p0_, z));
    vinv.noalias() -= d0_ * small;
    out = z + two_alpha * vinv;
  }
  if (!out.allFinite()) throw Error(ErrorCode::numeric, "Ahat0 apply produced non-finite values");
  return out;
}

InitialData init_lowrank(const CareProblem& problem,
                         std::shared_ptr<const ShiftedFactorization> shifted) {
  const double alpha = shifted->alpha();
  const Index p = problem.p();
  const Index m = problem.m();

  Matrix d0 = shifted->solve_transposed(problem.C().transpose());
  Matrix p0 = shifted->solve(problem.B());
  if (!d0.allFinite() || !p0.allFinite())
    throw Error(ErrorCode::numeric, "initial factors are not finite");

  const Matrix w0 = gram(d0, problem.B());                  // D₀ᵀB, so D₀ᵀGD₀ = W₀W₀ᵀ
  const Matrix v0 = gram(problem.C().transpose(), p0);      // C·P₀, so P₀ᵀQP₀ = V₀ᵀV₀
  const Matrix dgd = w0 * w0.transpose();
  const Matrix pqp = v0.transpose() * v0;

  const Matrix ip = Matrix::Identity(p, p);
  const Matrix im = Matrix::Identity(m, m);
  Matrix sigma0 = 2.0 * alpha * (ip - (ip + dgd).llt().solve(dgd));
  // P₀ᵀQP₀ (I + P₀ᵀQP₀)⁻¹ = ((I + P₀ᵀQP₀)⁻¹ P₀ᵀQP₀)ᵀ
  Matrix gamma0 = 2.0 * alpha * (im - (im + pqp).llt().solve(pqp).transpose());

  InitialData init;
  init.Sigma0 = symmetrized(sigma0);
  init.Gamma0 = symmetrized(gamma0);
  init.Ahat0 = std::make_shared<const CayleyBase>(shifted, d0, p0, v0);
  init.D0 = std::move(d0);
  init.P0 = std::move(p0);
  return init;
}

DenseInitialData init_dense(const CareProblem& problem, double alpha, Index cap) {
  const Index n = problem.n();
  if (n > cap)
    throw Error(ErrorCode::size_cap, "init_dense: n = " + std::to_string(n) + " exceeds cap " +
                                         std::to_string(cap));
  const Matrix id = Matrix::Identity(n, n);
  const Matrix a_alpha = problem.A().to_dense() - alpha * id;
  const Matrix q = problem.Q();
  const Matrix g = problem.G();

  Eigen::PartialPivLU<Matrix> a_lu(a_alpha);
  const Matrix a_inv_g = a_lu.solve(g);                       // A_α⁻¹G
  const Matrix a_invt_q = lu_solve_transposed(a_lu, q);          // A_α⁻ᵀQ
  const Matrix u_alpha = a_alpha.transpose() + q * a_inv_g;   // A_αᵀ + QA_α⁻¹G
  const Matrix v_alpha = a_alpha + g * a_invt_q;              // A_α + GA_α⁻ᵀQ
  Eigen::PartialPivLU<Matrix> u_lu(u_alpha);
  Eigen::PartialPivLU<Matrix> v_lu(v_alpha);
  if (!(a_lu.rcond() > 0.0) || !(u_lu.rcond() > 0.0) || !(v_lu.rcond() > 0.0))
    throw Error(ErrorCode::shift_singular, "init_dense: singular shifted matrix");

  DenseInitialData out;
  out.Ahat0 = id + 2.0 * alpha * v_lu.inverse();
  // X₀ = 2α U_α⁻¹ Q A_α⁻¹, and Q A_α⁻¹ = (A_α⁻ᵀ Q)ᵀ
  out.X0 = symmetrized(2.0 * alpha * u_lu.solve(Matrix(a_invt_q.transpose())));
  // Y₀ = 2α A_α⁻¹ G U_α⁻¹ = 2α (U_α⁻ᵀ (A_α⁻¹G)ᵀ)ᵀ
  out.Y0 = symmetrized(2.0 * alpha *
                       Matrix(lu_solve_transposed(u_lu, a_inv_g.transpose()).transpose()));
  return out;
}

}  // namespace radda

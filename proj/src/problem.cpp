#include "radda/problem.hpp"

#include <string>

#include "radda/error.hpp"

namespace radda {

CareProblem::CareProblem(SystemMatrix a, Matrix b, Matrix c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  const Index n = a_.size();
  if (b_.rows() != n || c_.cols() != n)
    throw Error(ErrorCode::invalid_dimension,
                "B must be n×m and C p×n for n = " + std::to_string(n));
  if (b_.cols() < 1 || c_.rows() < 1)
    throw Error(ErrorCode::invalid_dimension, "m and p must be positive");
  if (!b_.allFinite() || !c_.allFinite())
    throw Error(ErrorCode::numeric, "B and C must be finite");
}

double CareProblem::q_norm() const {
  const Matrix cct = c_ * c_.transpose();
  return spectral_norm_sym(cct);
}

CareProblem make_example1(Index n) {
  if (n < 2) throw Error(ErrorCode::invalid_dimension, "example 1 needs n >= 2");
  BandedMatrix a(n, 1, 1);
  for (Index i = 0; i < n; ++i) {
    a.set(i, i, -12.0);
    if (i + 1 < n) {
      a.set(i, i + 1, -3.0);
      a.set(i + 1, i, 2.0);
    }
  }
  return CareProblem(std::move(a), Matrix::Constant(n, 1, 0.02), Matrix::Constant(1, n, 0.01));
}

CareProblem make_example2(Index n) {
  if (n < 3) throw Error(ErrorCode::invalid_dimension, "example 2 needs n >= 3");
  BandedMatrix a(n, 2, 2);
  for (Index i = 0; i < n; ++i) {
    a.set(i, i, -10.0);
    if (i + 1 < n) {
      a.set(i, i + 1, -3.0);
      a.set(i + 1, i, 2.0);
    }
    if (i + 2 < n) {
      a.set(i, i + 2, -2.0);
      a.set(i + 2, i, 1.0);
    }
  }
  return CareProblem(std::move(a), Matrix::Constant(n, 1, 0.005),
                     Matrix::Constant(1, n, 0.001));
}

CareProblem dual_problem(const CareProblem& problem) {
  return CareProblem(problem.A().transposed(), problem.C().transpose(),
                     problem.B().transpose());
}

Residual residual_dense(const CareProblem& problem, const Matrix& x) {
  const Index n = problem.n();
  if (x.rows() != n || x.cols() != n)
    throw Error(ErrorCode::invalid_dimension, "residual_dense: X must be n×n");
  const Matrix atx = problem.A().apply(x, true);
  const Matrix xa = problem.A().apply(x.transpose(), true).transpose();
  const Matrix xb = x * problem.B();
  const Matrix bx = problem.B().transpose() * x;
  const Matrix r = symmetrized(atx + xa - xb * bx + problem.Q());
  const double norm = spectral_norm_sym(r);
  const double qn = problem.q_norm();
  if (qn == 0.0) return {norm, true};
  return {norm / qn, false};
}

Matrix hamiltonian(const CareProblem& problem, Index cap) {
  const Index n = problem.n();
  if (n > cap)
    throw Error(ErrorCode::size_cap, "hamiltonian: n = " + std::to_string(n) +
                                         " exceeds cap " + std::to_string(cap));
  const Matrix a = problem.A().to_dense();
  Matrix h(2 * n, 2 * n);
  h.topLeftCorner(n, n) = a;
  h.topRightCorner(n, n) = -problem.G();
  h.bottomLeftCorner(n, n) = -problem.Q();
  h.bottomRightCorner(n, n) = -a.transpose();
  return h;
}

}  // namespace radda

#include <doctest.h>

#include <cmath>
#include <random>

#include "radda/error.hpp"
#include "radda/problem.hpp"
#include "test_support.hpp"

using namespace radda;
using testing::scalar_problem;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected radda::Error");
  return ErrorCode::numeric;
}

// X solving AᵀX + XA − XGX + Q = 0 for a scalar problem, larger root of −gx² + 2ax + q.
double scalar_root(double a, double b, double c) {
  const double g = b * b, q = c * c;
  return (a + std::sqrt(a * a + g * q)) / g;
}

}  // namespace

TEST_CASE("example 1 stencil") {
  const CareProblem p4 = make_example1(4);
  Matrix a4(4, 4);
  a4 << -12, -3, 0, 0, 2, -12, -3, 0, 0, 2, -12, -3, 0, 0, 2, -12;
  CHECK(p4.A().to_dense() == a4);
  CHECK(p4.A().is_banded());
  CHECK(p4.B() == Matrix::Constant(4, 1, 0.02));
  CHECK(p4.C() == Matrix::Constant(1, 4, 0.01));

  Matrix a2(2, 2);
  a2 << -12, -3, 2, -12;
  CHECK(make_example1(2).A().to_dense() == a2);
  CHECK(code_of([] { make_example1(1); }) == ErrorCode::invalid_dimension);
  CHECK(code_of([] { make_example1(0); }) == ErrorCode::invalid_dimension);
}

TEST_CASE("example 2 stencil") {
  const Matrix a5 = make_example2(5).A().to_dense();
  Matrix row(1, 5);
  row << 1, 2, -10, -3, -2;
  CHECK(a5.row(2) == row);

  Matrix a3(3, 3);
  a3 << -10, -3, -2, 2, -10, -3, 1, 2, -10;
  const CareProblem p3 = make_example2(3);
  CHECK(p3.A().to_dense() == a3);
  CHECK(p3.B() == Matrix::Constant(3, 1, 0.005));
  CHECK(p3.C() == Matrix::Constant(1, 3, 0.001));
  CHECK(code_of([] { make_example2(2); }) == ErrorCode::invalid_dimension);
}

TEST_CASE("problem dimensions are validated") {
  CHECK(code_of([] {
          CareProblem(SystemMatrix(Matrix::Identity(3, 3)), Matrix::Ones(2, 1), Matrix::Ones(1, 3));
        }) == ErrorCode::invalid_dimension);
  CHECK(code_of([] {
          CareProblem(SystemMatrix(Matrix::Identity(3, 3)), Matrix::Ones(3, 1), Matrix::Ones(1, 2));
        }) == ErrorCode::invalid_dimension);
  CHECK(code_of([] {
          CareProblem(SystemMatrix(Matrix::Ones(3, 2)), Matrix::Ones(3, 1), Matrix::Ones(1, 3));
        }) == ErrorCode::invalid_dimension);
}

TEST_CASE("q_norm is the largest eigenvalue of CᵀC") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 10; ++t) {
    const CareProblem p = testing::random_stable_problem(rng, 12);
    const Matrix q = p.Q();
    CHECK(p.q_norm() == doctest::Approx(q.selfadjointView<Eigen::Lower>().eigenvalues().maxCoeff())
                            .epsilon(1e-13));
  }
  // ones(1, n)·0.01 gives ‖Q‖₂ = n·1e-4
  CHECK(make_example1(50).q_norm() == doctest::Approx(50e-4).epsilon(1e-14));
}

TEST_CASE("residual_dense on known iterates") {
  const CareProblem e1 = make_example1(6);
  const Residual zero = residual_dense(e1, Matrix::Zero(6, 6));
  CHECK(zero.value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_FALSE(zero.absolute);

  const double root = -1.0 + std::sqrt(2.0);
  CHECK(residual_dense(scalar_problem(-1, 1, 1), Matrix::Constant(1, 1, root)).value <= 1e-14);

  // nonsymmetric X: the residual must use XA, not (AᵀX)ᵀ
  const CareProblem s = scalar_problem(-3, 0, 1);
  CHECK(residual_dense(s, Matrix::Constant(1, 1, 1.0 / 6.0)).value <= 1e-15);
}

TEST_CASE("residual_dense falls back to the absolute residual when C = 0") {
  const CareProblem p(SystemMatrix(Matrix::Constant(1, 1, -1.0)), Matrix::Ones(1, 1),
                      Matrix::Zero(1, 1));
  const Residual r = residual_dense(p, Matrix::Constant(1, 1, 2.0));
  CHECK(r.absolute);
  // −2·2 − 4 = −8
  CHECK(r.value == doctest::Approx(8.0));
}

TEST_CASE("spectral_norm_sym") {
  CHECK(spectral_norm_sym(Matrix::Identity(3, 3)) == doctest::Approx(1.0));
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 2;
  d(1, 1) = -5;
  CHECK(spectral_norm_sym(d) == doctest::Approx(5.0));
  Matrix s(2, 2);
  s << 0, 1, 1, 0;
  CHECK(spectral_norm_sym(s) == doctest::Approx(1.0));
  Matrix bad = Matrix::Identity(2, 2);
  bad(1, 0) = std::nan("");
  CHECK(code_of([&] { spectral_norm_sym(bad); }) == ErrorCode::numeric);
  bad(1, 0) = INFINITY;
  CHECK(code_of([&] { spectral_norm_sym(bad); }) == ErrorCode::numeric);
}

TEST_CASE("hamiltonian structure") {
  Matrix h1(2, 2);
  h1 << -1, -1, -1, 1;
  CHECK(hamiltonian(scalar_problem(-1, 1, 1)) == h1);

  const Matrix a = make_example2(6).A().to_dense();
  const CareProblem zero(SystemMatrix(a), Matrix::Zero(6, 1), Matrix::Zero(1, 6));
  Matrix expect = Matrix::Zero(12, 12);
  expect.topLeftCorner(6, 6) = a;
  expect.bottomRightCorner(6, 6) = -a.transpose();
  CHECK(hamiltonian(zero) == expect);

  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    const CareProblem p = testing::random_stable_problem(rng, 2 + t);
    const Matrix h = hamiltonian(p);
    const Index n = p.n();
    Matrix j = Matrix::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n).setIdentity();
    j.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
    CHECK((h * j + j * h.transpose()).norm() <= 1e-14 * h.norm());
  }

  CHECK(code_of([] { hamiltonian(make_example1(300)); }) == ErrorCode::size_cap);
  CHECK(code_of([] { hamiltonian(make_example1(20), 10); }) == ErrorCode::size_cap);
}

TEST_CASE("oracle on closed forms") {
  const Matrix x = care_oracle_small(scalar_problem(-2, 2, 1));
  CHECK(x(0, 0) == doctest::Approx((-2.0 + std::sqrt(8.0)) / 4.0).epsilon(1e-13));
  CHECK(x(0, 0) == doctest::Approx(0.2071068).epsilon(1e-7));

  for (double a : {-5.0, -1.0, -0.1, 0.5, 3.0}) {
    for (double b : {0.3, 1.0, 2.0}) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(care_oracle_small(scalar_problem(a, b, 0.7))(0, 0) ==
            doctest::Approx(scalar_root(a, b, 0.7)).epsilon(1e-12));
    }
  }

  const CareProblem c0(make_example1(5).A(), Matrix::Ones(5, 1), Matrix::Zero(1, 5));
  CHECK(care_oracle_small(c0).norm() <= 1e-14);
}

TEST_CASE("oracle solutions satisfy the equation and are PSD") {
  for (Index n : {8, 16, 32}) {
    const CareProblem p = make_example1(n);
    const Matrix x = care_oracle_small(p);
    CHECK(residual_dense(p, x).value <= 1e-10);
    CHECK(x == x.transpose());
    CHECK(min_eigenvalue_sym(x) >= -1e-9 * spectral_norm_sym(x));
  }
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    const CareProblem p = testing::random_stable_problem(rng, 3 + 2 * t);
    const Matrix x = care_oracle_small(p);
    CHECK(residual_dense(p, x).value <= 1e-10);
    // closed loop A − GX is stable
    const Matrix closed = p.A().to_dense() - p.B() * (p.B().transpose() * x);
    CHECK(closed.eigenvalues().real().maxCoeff() < 0.0);
  }
}

TEST_CASE("oracle refuses problems without a stabilizing solution") {
  // a = 1, b = 0: the stable eigenvector of H has a zero top block
  CHECK(code_of([] { care_oracle_small(scalar_problem(1, 0, 1)); }) == ErrorCode::conditioning);
  // purely imaginary Hamiltonian spectrum
  CHECK(code_of([] { care_oracle_small(scalar_problem(0, 0, 0)); }) ==
        ErrorCode::no_stabilizing_solution);
}

TEST_CASE("dual problem swaps the roles of B and C") {
  const CareProblem p = make_example2(7);
  const CareProblem d = dual_problem(p);
  CHECK(d.A().to_dense() == p.A().to_dense().transpose());
  CHECK(d.B() == p.C().transpose());
  CHECK(d.C() == p.B().transpose());
}

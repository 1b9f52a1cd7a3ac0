#include <doctest.h>

#include <cmath>
#include <random>

#include "radda/adda_dense.hpp"
#include "radda/cayley.hpp"
#include "radda/error.hpp"
#include "test_support.hpp"

using namespace radda;
using testing::scalar_problem;

namespace {

std::vector<AddaDenseState> run_dense(const CareProblem& p, double alpha, int steps) {
  std::vector<AddaDenseState> out{adda_initial_state(p, alpha)};
  for (int k = 0; k < steps; ++k) out.push_back(adda_step_dense(out.back()));
  return out;
}

}  // namespace

TEST_CASE("scalar doubling step") {
  const auto states = run_dense(scalar_problem(-1, 1, 1), 1.0, 1);
  CHECK(std::abs(states[1].X(0, 0) - (0.4 + 0.04 * 0.4 / 1.16)) <= 1e-15);
  CHECK(std::abs(states[1].X(0, 0) - 0.413793103448276) <= 1e-12);
  CHECK(std::abs(states[1].Ahat(0, 0) - 0.04 / 1.16) <= 1e-15);
  CHECK(states[1].k == 1);
}

TEST_CASE("zero data propagates") {
  std::mt19937_64 rng(1);
  AddaDenseState s{3, testing::random_matrix(rng, 5, 5), Matrix::Zero(5, 5), Matrix::Zero(5, 5)};
  const AddaDenseState next = adda_step_dense(s);
  CHECK((next.Ahat - s.Ahat * s.Ahat).norm() <= 1e-15 * s.Ahat.squaredNorm());
  CHECK(next.X.norm() == 0.0);
  CHECK(next.Y.norm() == 0.0);
  CHECK(next.k == 4);
}

TEST_CASE("dense solve") {
  const double root = -1.0 + std::sqrt(2.0);
  DenseSolveOptions opt;
  opt.alpha = 1.0;
  const DenseSolveResult s = adda_solve_dense(scalar_problem(-1, 1, 1), opt);
  CHECK(s.report.termination == Termination::converged);
  CHECK(s.report.iterations <= 5);
  CHECK(std::abs(s.X(0, 0) - root) <= 1e-12);

  const DenseSolveResult e1 = adda_solve_dense(make_example1(128));
  CHECK(e1.report.termination == Termination::converged);
  CHECK(e1.report.iterations <= 6);
  CHECK(e1.report.alpha == doctest::Approx(17.0));

  const CareProblem c0(make_example1(6).A(), make_example1(6).B(), Matrix::Zero(1, 6));
  const DenseSolveResult z = adda_solve_dense(c0);
  CHECK(z.report.termination == Termination::converged);
  CHECK(z.report.iterations == 0);
  CHECK(z.X.norm() == 0.0);
  CHECK(z.report.absolute_residual);

  DenseSolveOptions short_run;
  short_run.maxit = 1;
  short_run.tol = 1e-15;
  const DenseSolveResult m = adda_solve_dense(make_example1(16), short_run);
  CHECK(m.report.termination == Termination::max_iterations);
  CHECK(m.report.history.size() == 2);
}

TEST_CASE("dense cap") {
  try {
    adda_initial_state(make_example1(40), 17.0, 32);
    FAIL("expected size cap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::size_cap);
  }
}

TEST_CASE("closed forms of the iterates") {
  const CareProblem p = scalar_problem(-1, 1, 1);
  const VerificationContext ctx = VerificationContext::build(p, 1.0);
  for (const AddaDenseState& s : run_dense(p, 1.0, 2)) {
    const ClosedFormDiagnostics d = verify_closed_forms(s, ctx);
    CHECK(d.ahat_deviation <= 1e-12);
    CHECK(d.error_deviation <= 1e-12);
    CHECK(d.dual_error_deviation <= 1e-12);
  }

  // no coupling: Â₀ is the Cayley transform of A itself
  const Index n = 5;
  const CareProblem free_p(make_example1(n).A(), Matrix::Zero(n, 1), Matrix::Zero(1, n));
  const AddaDenseState s0 = adda_initial_state(free_p, 17.0);
  const Matrix a = free_p.A().to_dense(), i = Matrix::Identity(n, n);
  const Matrix cayley = (a + 17.0 * i) * (a - 17.0 * i).inverse();
  CHECK((s0.Ahat - cayley).norm() <= 1e-15 * n);
  CHECK(verify_closed_forms(s0, VerificationContext::build(free_p, 17.0)).ahat_deviation <= 1e-14);

  const CareProblem e1 = make_example1(8);
  const VerificationContext c1 = VerificationContext::build(e1, 17.0);
  const auto states = run_dense(e1, 17.0, 4);
  for (std::size_t k = 1; k < states.size(); ++k) {
    CAPTURE(k);
    const ClosedFormDiagnostics d = verify_closed_forms(states[k], c1);
    CHECK(d.ahat_deviation <= 1e-9 * d.ahat_norm);
    CHECK(d.error_deviation <= 1e-9 * c1.Xstar.norm());
  }
}

TEST_CASE("doubled_power") {
  Matrix m(2, 2);
  m << 0.5, 0.1, -0.2, 0.3;
  Matrix expect = m;
  for (int i = 1; i < 8; ++i) expect = expect * m;
  CHECK((VerificationContext::doubled_power(m, 3) - expect).norm() <= 1e-16);
  CHECK(VerificationContext::doubled_power(m, 0) == m);
}

TEST_CASE("iterates grow monotonically towards the oracle and Â decays at the doubled rate") {
  std::mt19937_64 rng(12);
  std::vector<CareProblem> problems{make_example1(8), make_example2(10), scalar_problem(-1, 1, 1)};
  for (int t = 0; t < 6; ++t) problems.push_back(testing::random_stable_problem(rng, 4 + 3 * t));
  for (const CareProblem& p : problems) {
    const double alpha = choose_alpha(p);
    const VerificationContext ctx = VerificationContext::build(p, alpha);
    const auto states = run_dense(p, alpha, 5);
    const double xs = spectral_norm_sym(ctx.Xstar), ys = spectral_norm_sym(ctx.Ystar);
    const double rho = spectral_radius(ctx.CR);
    CHECK(rho < 1.0);
    for (std::size_t k = 0; k < states.size(); ++k) {
      CAPTURE(k);
      const AddaDenseState& s = states[k];
      CHECK(min_eigenvalue_sym(ctx.Xstar - s.X) >= -1e-9 * xs);
      CHECK(min_eigenvalue_sym(ctx.Ystar - s.Y) >= -1e-9 * ys);
      CHECK(min_eigenvalue_sym(s.X) >= -1e-11 * (spectral_norm_sym(s.X) + 1e-300));
      if (k > 0) {
        CHECK(min_eigenvalue_sym(s.X - states[k - 1].X) >= -1e-11 * spectral_norm_sym(s.X));
        CHECK(min_eigenvalue_sym(s.Y - states[k - 1].Y) >= -1e-11 * spectral_norm_sym(s.Y));
      }
      // ‖Â_k‖ ≤ ‖I + Y_k X*‖·‖CR^(2^k)‖ and ‖X* − X_k‖ ≤ ‖I + X_k Y*‖·‖CS^(2^k)‖·‖X*‖·‖CR^(2^k)‖
      const Index n = p.n();
      const Matrix crk = VerificationContext::doubled_power(ctx.CR, static_cast<int>(k));
      const Matrix csk = VerificationContext::doubled_power(ctx.CS, static_cast<int>(k));
      const Matrix i = Matrix::Identity(n, n);
      const double tiny = 1e-14 * (1 + spectral_norm(s.Ahat));
      CHECK(spectral_norm(s.Ahat) <= spectral_norm(i + s.Y * ctx.Xstar) * spectral_norm(crk) + tiny);
      CHECK(spectral_norm(ctx.Xstar - s.X) <=
            spectral_norm(i + s.X * ctx.Ystar) * spectral_norm(csk) * spectral_norm(ctx.Xstar) *
                    spectral_norm(crk) +
                1e-9 * xs);
    }
  }
}

TEST_CASE("symplectic pencil structure is preserved") {
  std::mt19937_64 rng(5);
  AddaDenseState zero{0, testing::random_matrix(rng, 4, 4), Matrix::Zero(4, 4), Matrix::Zero(4, 4)};
  CHECK(verify_symplectic_pencil(zero) == 0.0);

  const AddaDenseState scalar{0, Matrix::Constant(1, 1, 0.2), Matrix::Constant(1, 1, 0.4),
                              Matrix::Constant(1, 1, 0.4)};
  CHECK(verify_symplectic_pencil(scalar) <= 1e-15);

  for (const AddaDenseState& s : run_dense(make_example1(8), 17.0, 5))
    CHECK(verify_symplectic_pencil(s) <= 1e-12);
  for (int t = 0; t < 5; ++t) {
    const CareProblem p = testing::random_stable_problem(rng, 5 + t);
    for (const AddaDenseState& s : run_dense(p, choose_alpha(p), 5))
      CHECK(verify_symplectic_pencil(s) <= 1e-12);
  }
}

TEST_CASE("verification context rejects a singular Cayley shift") {
  // C = 0 gives X* = 0 and R = A = −2I, so the shift −2 makes R − αI vanish
  const CareProblem p(SystemMatrix(Matrix(-2.0 * Matrix::Identity(2, 2))), Matrix::Ones(2, 1),
                      Matrix::Zero(1, 2));
  try {
    VerificationContext::build(p, -2.0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::cayley_singular);
  }
}

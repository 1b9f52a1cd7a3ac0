#pragma once

#include <vector>

#include "radda/linalg.hpp"

namespace radda {

enum class Termination { converged, max_iterations, breakdown };

const char* to_string(Termination t) noexcept;

struct IterationRecord {
  int k = 0;
  double residual = 0.0;  // NaN when the check was skipped at this k
  Index rank_x = 0;
  Index rank_y = 0;
  double wall_ms = 0.0;
};

/// Per-iteration history of one solve; history[0] is the k = 0 iterate, so
/// history.size() == iterations + 1.
struct SolveReport {
  double alpha = 0.0;
  int iterations = 0;
  std::vector<IterationRecord> history;
  Termination termination = Termination::max_iterations;
  bool absolute_residual = false;
  double total_ms = 0.0;

  double final_residual() const { return history.empty() ? 0.0 : history.back().residual; }
};

}  // namespace radda

#pragma once

#include <vector>

#include "wbpdn/model.hpp"

namespace wbpdn {

enum class StepRule { fixed, backtracking };

struct SolverConfig {
  int max_iterations = 50000;
  double objective_tolerance = 1e-12; // relative change over a 10-iteration window
  double kkt_tolerance = 1e-9;
  StepRule step_rule = StepRule::fixed;
  bool restart = true; // gradient restart with a monotone safeguard
};

struct SolveOutcome {
  Vector solution;
  int iterations = 0;
  double final_objective = 0.0;
  double kkt_residual = 0.0;
  bool converged = false;
  std::vector<double> objective_trace;
};

/// Componentwise soft threshold with per-coordinate thresholds tau*weights_i.
/// Identity on coordinates with weight 0.
Vector prox_weighted_l1(const Vector& u, double tau, const WeightProfile& profile);

/// Largest singular value by power iteration on A^T A (tolerance 1e-10,
/// 1000-iteration cap).
double spectral_norm(const Matrix& A);

/// Max violation of the first-order conditions of the weighted BPDN
/// objective: with g = A^T (b - A x), per coordinate
///   x_i != 0: |g_i - lambda w_i sign(x_i)|,  x_i == 0: max(|g_i| - lambda w_i, 0).
double kkt_residual(const Vector& x, const ProblemInstance& inst);

/// Accelerated proximal gradient (FISTA) on the weighted BPDN objective.
/// Non-convergence within max_iterations is reported, not thrown.
SolveOutcome solve(const ProblemInstance& inst, const SolverConfig& config = {});

/// Plain proximal gradient with fixed step lambda / sigma_max(A)^2, run for
/// the full budget (early exit only on a bitwise fixed point). Slow,
/// algorithmically distinct oracle for cross-checking solve().
SolveOutcome reference_solve(const ProblemInstance& inst, int budget);

} // namespace wbpdn

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "teleport/numerics.hpp"

namespace teleport {

struct OptimizerConfig {
  int restarts = 32;
  int max_iters = 500;
  double step_init = 0.1;
  double tol = 1e-9;
  std::uint64_t seed = 0x5eed;
  /// Worker threads for independent restarts. Results do not depend on it.
  int jobs = 1;
  /// Keep every objective value the search evaluated (for soundness checks).
  bool record_evaluations = false;

  void validate() const;
};

struct OptResult {
  double value = 0.0;
  /// The unitary (singlet fraction) or mixing isometry (convex roofs) achieving `value`.
  ComplexMatrix argument;
  bool converged = false;
  int iterations_used = 0;
  int best_restart = 0;
  std::vector<double> evaluations;
};

enum class Sense { maximize, minimize };

/// Objective over isometries X (n x m, X^dagger X = I). Returns nullopt where the
/// point is inadmissible.
using ManifoldObjective = std::function<std::optional<double>(const ComplexMatrix&)>;

/// Wirtinger gradient dh/dX* at an admissible point.
using ManifoldGradient = std::function<ComplexMatrix(const ComplexMatrix&)>;

/// Line-searched gradient steps X <- exp(i eps H) X with hermitian H, from one start.
/// The returned value is the best objective value evaluated at any admissible point;
/// nullopt if no admissible point was found.
std::optional<OptResult> riemannian_search(const ComplexMatrix& start, const ManifoldObjective& objective,
                                           const ManifoldGradient& gradient, const OptimizerConfig& cfg,
                                           Sense sense);

/// Runs `make_start(restart, rng-derived)` for every restart index and keeps the
/// extremal result; ties go to the lowest restart index.
std::optional<OptResult> multistart_search(const std::function<ComplexMatrix(int)>& make_start,
                                           const ManifoldObjective& objective,
                                           const ManifoldGradient& gradient, const OptimizerConfig& cfg,
                                           Sense sense);

/// Runs body(i) for i in [0, n) on up to `jobs` threads.
void parallel_for(int n, int jobs, const std::function<void(int)>& body);

} // namespace teleport

#include "teleport/unitary_search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

namespace teleport {

void OptimizerConfig::validate() const {
  if (restarts < 1) throw InvariantViolation("OptimizerConfig: restarts must be >= 1");
  if (max_iters < 1) throw InvariantViolation("OptimizerConfig: max_iters must be >= 1");
  if (!(tol > 0.0)) throw InvariantViolation("OptimizerConfig: tol must be positive");
  if (!(step_init > 0.0)) throw InvariantViolation("OptimizerConfig: step_init must be positive");
}

namespace {

// Strictly better in the search direction.
bool better(double a, double b, Sense sense) { return sense == Sense::maximize ? a > b : a < b; }

constexpr double kArmijo = 1e-4;
constexpr double kMinStep = 1e-14;
constexpr double kMaxStep = std::numbers::pi;
constexpr int kStallIterations = 3;

} // namespace

std::optional<OptResult> riemannian_search(const ComplexMatrix& start, const ManifoldObjective& objective,
                                           const ManifoldGradient& gradient, const OptimizerConfig& cfg,
                                           Sense sense) {
  const double sign = sense == Sense::maximize ? 1.0 : -1.0;
  OptResult out;
  const auto record = [&](double v) {
    if (cfg.record_evaluations) out.evaluations.push_back(v);
  };

  ComplexMatrix x = start;
  const auto first = objective(x);
  if (!first) return std::nullopt;
  double value = *first;
  record(value);
  out.value = value;
  out.argument = x;

  double step = cfg.step_init;
  int quiet = 0;
  int it = 0;
  for (; it < cfg.max_iters; ++it) {
    const ComplexMatrix g = gradient(x);
    // Directional derivative along exp(i eps H) X is Re tr(grad_H H) with this grad_H.
    ComplexMatrix h = Complex(0.0, 1.0) * (x * g.adjoint() - g * x.adjoint());
    h = 0.5 * (h + h.adjoint());
    const double gnorm = h.norm();
    if (!(gnorm > 1e-12)) {
      out.converged = true;
      break;
    }
    const ComplexMatrix direction = (sign / gnorm) * h;

    double eps = step;
    bool accepted = false;
    double improvement = 0.0;
    while (eps >= kMinStep) {
      const ComplexMatrix trial = unitary_exp(direction, eps) * x;
      const auto v = objective(trial);
      if (v) {
        record(*v);
        if (better(*v, out.value, sense)) {
          out.value = *v;
          out.argument = trial;
        }
        if (sign * (*v - value) >= kArmijo * eps * gnorm) {
          improvement = sign * (*v - value);
          x = trial;
          value = *v;
          accepted = true;
          break;
        }
      }
      eps *= 0.5;
    }
    if (!accepted) {
      out.converged = true;
      break;
    }
    step = std::min(2.0 * eps, kMaxStep);
    quiet = improvement <= cfg.tol * std::max(1.0, std::abs(value)) ? quiet + 1 : 0;
    if (quiet >= kStallIterations) {
      out.converged = true;
      ++it;
      break;
    }
  }
  out.iterations_used = it;
  return out;
}

void parallel_for(int n, int jobs, const std::function<void(int)>& body) {
  if (jobs <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  const int count = std::min(jobs, n);
  workers.reserve(static_cast<std::size_t>(count));
  for (int w = 0; w < count; ++w)
    workers.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

std::optional<OptResult> multistart_search(const std::function<ComplexMatrix(int)>& make_start,
                                           const ManifoldObjective& objective,
                                           const ManifoldGradient& gradient, const OptimizerConfig& cfg,
                                           Sense sense) {
  cfg.validate();
  std::vector<std::optional<OptResult>> results(static_cast<std::size_t>(cfg.restarts));
  parallel_for(cfg.restarts, cfg.jobs, [&](int r) {
    results[static_cast<std::size_t>(r)] = riemannian_search(make_start(r), objective, gradient, cfg, sense);
  });

  std::optional<OptResult> best;
  std::vector<double> all_evaluations;
  for (int r = 0; r < cfg.restarts; ++r) {
    auto& res = results[static_cast<std::size_t>(r)];
    if (!res) continue;
    if (cfg.record_evaluations)
      all_evaluations.insert(all_evaluations.end(), res->evaluations.begin(), res->evaluations.end());
    if (!best || better(res->value, best->value, sense)) {
      best = std::move(res);
      best->best_restart = r;
    }
  }
  if (best) best->evaluations = std::move(all_evaluations);
  return best;
}

} // namespace teleport

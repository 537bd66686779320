#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "teleport/states.hpp"

namespace teleport {

/// Squeezed thermal bath seen by two two-level atoms. Temperatures are in units
/// of the transition energy (hbar omega0 / k_B = 1 with the default omega0), and
/// r12 is the inter-atomic distance times the resonant wavenumber.
struct BathParams {
  double temperature = 0.0;
  double squeeze_r = 0.0;
  double squeeze_phi = 0.0;
  double r12 = 0.05;
  double omega0 = 1.0;

  void validate() const;
  /// 1 / (exp(omega0 / T) - 1), zero at T = 0.
  double thermal_occupation() const;
  /// N_th (cosh^2 r + sinh^2 r) + sinh^2 r
  double effective_occupation() const;
  /// -(2 N_th + 1) sinh r cosh r e^{i phi}
  Complex squeeze_amplitude() const;
};

enum class ModelKind { Dissipative, QND };

std::string_view to_string(ModelKind kind);

/// |psi-> = (|01> - |10>)/sqrt2 mixed with white noise: w |psi-><psi-| + (1 - w) I/4.
DensityMatrix default_initial_state(double singlet_weight = 0.95);

struct DynamicsConfig {
  ModelKind model = ModelKind::Dissipative;
  BathParams bath;
  double gamma0 = 1.0;
  double t_max = 4.0;
  double dt = 1e-3;
  int max_steps = 4096;
  DensityMatrix initial_state = default_initial_state();
  /// Also integrate with dt/2 and record the endpoint concurrence change.
  bool check_step_doubling = false;

  void validate() const;
};

struct CollectiveCoefficients {
  double gamma12;
  double omega12;
};

/// Collective damping and dipole-dipole shift for parallel dipoles perpendicular to
/// the inter-atomic axis. gamma12 -> gamma0 as r12 -> 0 and -> 0 as r12 -> infinity.
/// At r12 = 0 the shift is reported as 0 (coincident atoms).
CollectiveCoefficients collective_coefficients(const BathParams& bath, double gamma0);

/// Right-hand side d rho / dt of the master equation. Trace-free and hermitian
/// for hermitian input.
ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const DynamicsConfig& cfg);

/// The master equation as a 16x16 superoperator acting on column-major vec(rho).
ComplexMatrix liouvillian(const DynamicsConfig& cfg);

/// One output step of fixed-step RK4: the RK4 update polynomial for the internal
/// step h = dt / 2^k, raised to the 2^k-th power. k is the smallest value with
/// h * ||L||_1 <= 1/100.
ComplexMatrix rk4_propagator(const ComplexMatrix& liouvillian, double dt);

struct TrajectoryPoint {
  double t;
  double concurrence;
  double singlet_fraction;
  double fidelity;
  double trace_err;
  double min_eig;
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  ComplexMatrix final_state;
  /// |C(t_max; dt) - C(t_max; dt/2)| when step doubling was requested.
  std::optional<double> dt_halving_delta;
};

/// Positivity tolerance: the run aborts if an eigenvalue drops below -1e-6.
inline constexpr double kPositivityTolerance = 1e-6;

/// Evaluates C, f and F on an integrator state, checking trace and positivity.
TrajectoryPoint observe(double t, const ComplexMatrix& rho);

Trajectory evolve(const DynamicsConfig& cfg);

enum class SweepAxis { time, r12, squeeze_r };

std::string_view to_string(SweepAxis axis);
SweepAxis parse_sweep_axis(std::string_view name);

struct SweepRow {
  double axis_value;
  TrajectoryPoint endpoint;
};

/// Endpoint observables for every grid value. For the time axis the grid value
/// is the evolution time; otherwise evolution runs to cfg_base.t_max. Rows come
/// back in grid order whatever the job count.
std::vector<SweepRow> sweep(const DynamicsConfig& cfg_base, SweepAxis axis, const std::vector<double>& grid,
                            int jobs = 1);

} // namespace teleport

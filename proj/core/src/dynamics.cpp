#include "teleport/dynamics.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "teleport/measures.hpp"
#include "teleport/mixed.hpp"
#include "teleport/unitary_search.hpp"

namespace teleport {

namespace {

// Local basis: 0 = ground, 1 = excited. Two-qubit index 2a + b.
ComplexMatrix lowering() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = -1.0;
  m(1, 1) = 1.0;
  return m;
}

ComplexMatrix on_qubit(const ComplexMatrix& op, int which) {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  return which == 0 ? kron(op, id) : kron(id, op);
}

struct Operators {
  std::array<ComplexMatrix, 2> minus;
  std::array<ComplexMatrix, 2> plus;
  std::array<ComplexMatrix, 2> z;
};

const Operators& operators() {
  static const Operators ops = [] {
    Operators o;
    for (int i = 0; i < 2; ++i) {
      o.minus[i] = on_qubit(lowering(), i);
      o.plus[i] = o.minus[i].adjoint();
      o.z[i] = on_qubit(pauli_z(), i);
    }
    return o;
  }();
  return ops;
}

// c * (A rho B^dag - 1/2 {B^dag A, rho})
void add_dissipator(ComplexMatrix& out, Complex c, const ComplexMatrix& a, const ComplexMatrix& b,
                    const ComplexMatrix& rho) {
  if (c == Complex(0.0)) return;
  const ComplexMatrix bda = b.adjoint() * a;
  out += c * (a * rho * b.adjoint() - 0.5 * (bda * rho + rho * bda));
}

double radiative_gamma(double x) {
  if (x < 1e-2) return 1.0 - x * x / 5.0 + 3.0 * x * x * x * x / 280.0;
  const double s = std::sin(x), c = std::cos(x);
  return 1.5 * (s / x + c / (x * x) - s / (x * x * x));
}

double radiative_omega(double x) {
  if (x == 0.0) return 0.0;
  const double s = std::sin(x), c = std::cos(x);
  return 0.75 * (-c / x + s / (x * x) + c / (x * x * x));
}

int substeps_for(const ComplexMatrix& l, double dt) {
  const double norm = l.cwiseAbs().colwise().sum().maxCoeff();
  int n = 1;
  while (dt / n * norm > 1e-2) {
    if (n >= (1 << 30)) throw std::length_error("rk4_propagator: step count overflow");
    n *= 2;
  }
  return n;
}

ComplexMatrix rk4_power(const ComplexMatrix& l, double dt, int substeps) {
  const Eigen::Index n = l.rows();
  const double h = dt / substeps;
  const ComplexMatrix hl = h * l;
  const ComplexMatrix hl2 = hl * hl;
  ComplexMatrix p = ComplexMatrix::Identity(n, n) + hl + hl2 / 2.0 + hl2 * hl / 6.0 + hl2 * hl2 / 24.0;
  for (int k = substeps; k > 1; k /= 2) p = p * p;
  return p;
}

ComplexMatrix vec_col(const ComplexMatrix& m) {
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

ComplexMatrix unvec_col(const ComplexVector& v, Eigen::Index n) {
  return Eigen::Map<const ComplexMatrix>(v.data(), n, n);
}

} // namespace

void BathParams::validate() const {
  if (!(temperature >= 0.0) || !std::isfinite(temperature))
    throw InvariantViolation("BathParams: temperature must be finite and >= 0");
  if (!(r12 >= 0.0) || !std::isfinite(r12)) throw InvariantViolation("BathParams: r12 must be finite and >= 0");
  if (!std::isfinite(squeeze_r) || !std::isfinite(squeeze_phi))
    throw InvariantViolation("BathParams: squeezing parameters must be finite");
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) throw InvariantViolation("BathParams: omega0 must be > 0");
}

double BathParams::thermal_occupation() const {
  if (temperature == 0.0) return 0.0;
  return 1.0 / std::expm1(omega0 / temperature);
}

double BathParams::effective_occupation() const {
  const double nth = thermal_occupation();
  const double s = std::sinh(squeeze_r), c = std::cosh(squeeze_r);
  return nth * (c * c + s * s) + s * s;
}

Complex BathParams::squeeze_amplitude() const {
  const double nth = thermal_occupation();
  return -(2.0 * nth + 1.0) * std::sinh(squeeze_r) * std::cosh(squeeze_r) * std::polar(1.0, squeeze_phi);
}

std::string_view to_string(ModelKind kind) { return kind == ModelKind::QND ? "qnd" : "dissipative"; }

DensityMatrix default_initial_state(double singlet_weight) {
  if (!(singlet_weight >= 0.0 && singlet_weight <= 1.0))
    throw std::domain_error("default_initial_state: weight outside [0,1]");
  ComplexVector psi = ComplexVector::Zero(4);
  psi(1) = 1.0 / std::sqrt(2.0);
  psi(2) = -1.0 / std::sqrt(2.0);
  const ComplexMatrix rho =
      singlet_weight * psi * psi.adjoint() + (1.0 - singlet_weight) / 4.0 * ComplexMatrix::Identity(4, 4);
  return DensityMatrix(rho, 2);
}

void DynamicsConfig::validate() const {
  bath.validate();
  if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) throw InvariantViolation("DynamicsConfig: gamma0 must be > 0");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvariantViolation("DynamicsConfig: dt must be > 0");
  if (!(t_max >= dt) || !std::isfinite(t_max)) throw InvariantViolation("DynamicsConfig: t_max must be >= dt");
  if (max_steps < 1) throw InvariantViolation("DynamicsConfig: max_steps must be positive");
  if (initial_state.dim() != 2) throw InvariantViolation("DynamicsConfig: initial state must be two-qubit");
}

CollectiveCoefficients collective_coefficients(const BathParams& bath, double gamma0) {
  bath.validate();
  return {gamma0 * radiative_gamma(bath.r12), gamma0 * radiative_omega(bath.r12)};
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const DynamicsConfig& cfg) {
  if (rho.rows() != 4 || rho.cols() != 4) throw InvariantViolation("lindblad_rhs: expects a 4x4 matrix");
  const Operators& op = operators();
  const CollectiveCoefficients cc = collective_coefficients(cfg.bath, cfg.gamma0);
  const double rate[2][2] = {{cfg.gamma0, cc.gamma12}, {cc.gamma12, cfg.gamma0}};
  ComplexMatrix out = ComplexMatrix::Zero(4, 4);

  if (cfg.model == ModelKind::QND) {
    const double nth = cfg.bath.thermal_occupation();
    const double gamma_phi = cfg.gamma0 * (2.0 * nth + 1.0) * std::cosh(2.0 * cfg.bath.squeeze_r) / 2.0;
    const double g = cc.gamma12 / cfg.gamma0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        add_dissipator(out, gamma_phi / 2.0 * (i == j ? 1.0 : g), op.z[i], op.z[j], rho);
    return out;
  }

  const double n = cfg.bath.effective_occupation();
  const Complex m = cfg.bath.squeeze_amplitude();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double r = rate[i][j];
      add_dissipator(out, r * (n + 1.0), op.minus[i], op.minus[j], rho);
      add_dissipator(out, r * n, op.plus[i], op.plus[j], rho);
      add_dissipator(out, -r * m, op.plus[i], op.minus[j], rho);
      add_dissipator(out, -r * std::conj(m), op.minus[i], op.plus[j], rho);
    }
  const ComplexMatrix h = cc.omega12 * (op.plus[0] * op.minus[1] + op.minus[0] * op.plus[1]);
  out += Complex(0.0, -1.0) * (h * rho - rho * h);
  return out;
}

ComplexMatrix liouvillian(const DynamicsConfig& cfg) {
  cfg.validate();
  ComplexMatrix l(16, 16);
  for (int b = 0; b < 4; ++b)
    for (int a = 0; a < 4; ++a) {
      ComplexMatrix e = ComplexMatrix::Zero(4, 4);
      e(a, b) = 1.0;
      l.col(a + 4 * b) = vec_col(lindblad_rhs(e, cfg));
    }
  return l;
}

ComplexMatrix rk4_propagator(const ComplexMatrix& l, double dt) { return rk4_power(l, dt, substeps_for(l, dt)); }

TrajectoryPoint observe(double t, const ComplexMatrix& rho) {
  TrajectoryPoint p{};
  p.t = t;
  p.trace_err = std::abs(rho.trace() - Complex(1.0));
  p.min_eig = herm_eig(rho).eigenvalues(0);
  if (p.min_eig < -kPositivityTolerance)
    throw NumericFailure("evolve: positivity breach at t=" + std::to_string(t) +
                         " (min eigenvalue " + std::to_string(p.min_eig) + "); reduce dt");
  p.concurrence = concurrence_2qubit(rho);
  p.singlet_fraction = fef_2qubit_closed_form(rho);
  p.fidelity = (2.0 * p.singlet_fraction + 1.0) / 3.0;
  return p;
}

Trajectory evolve(const DynamicsConfig& cfg) {
  cfg.validate();
  const double ratio = cfg.t_max / cfg.dt;
  const double whole = std::floor(ratio + 1e-9);
  if (whole > cfg.max_steps)
    throw std::length_error("evolve: " + std::to_string(static_cast<long long>(whole)) +
                            " steps exceed the cap of " + std::to_string(cfg.max_steps));
  const int steps = static_cast<int>(whole);
  const double rest = cfg.t_max - steps * cfg.dt;
  const bool partial = rest > 1e-9 * cfg.dt;

  const ComplexMatrix l = liouvillian(cfg);
  const int sub = substeps_for(l, cfg.dt);

  const auto run = [&](int substeps, bool record, Trajectory& traj) {
    const ComplexMatrix step = rk4_power(l, cfg.dt, substeps);
    ComplexMatrix rho = cfg.initial_state.matrix();
    if (record) traj.points.push_back(observe(0.0, rho));
    const auto advance = [&](const ComplexMatrix& prop, double t) {
      ComplexVector v = prop * vec_col(rho);
      rho = unvec_col(v, 4);
      rho = 0.5 * (rho + rho.adjoint()).eval();
      if (!all_finite(rho)) throw NumericFailure("evolve: non-finite state");
      if (record) traj.points.push_back(observe(t, rho));
    };
    for (int k = 1; k <= steps; ++k) advance(step, k * cfg.dt);
    if (partial) {
      const int rest_sub = std::max(1, static_cast<int>(std::ceil(substeps * rest / cfg.dt)));
      advance(rk4_power(l, rest, rest_sub), cfg.t_max);
    }
    return rho;
  };

  Trajectory traj;
  traj.final_state = run(sub, true, traj);
  if (cfg.check_step_doubling) {
    Trajectory scratch;
    const ComplexMatrix half = run(2 * sub, false, scratch);
    traj.dt_halving_delta = std::abs(concurrence_2qubit(half) - traj.points.back().concurrence);
  }
  return traj;
}

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
  case SweepAxis::time: return "time";
  case SweepAxis::r12: return "r12";
  case SweepAxis::squeeze_r: return "r";
  }
  return "time";
}

SweepAxis parse_sweep_axis(std::string_view name) {
  if (name == "time" || name == "t") return SweepAxis::time;
  if (name == "r12") return SweepAxis::r12;
  if (name == "r" || name == "squeeze_r") return SweepAxis::squeeze_r;
  throw std::invalid_argument("unknown sweep axis '" + std::string(name) + "' (expected time, r12 or r)");
}

std::vector<SweepRow> sweep(const DynamicsConfig& cfg_base, SweepAxis axis, const std::vector<double>& grid,
                            int jobs) {
  cfg_base.validate();
  std::vector<SweepRow> rows(grid.size());
  parallel_for(static_cast<int>(grid.size()), jobs, [&](int i) {
    const double x = grid[static_cast<std::size_t>(i)];
    DynamicsConfig cfg = cfg_base;
    cfg.check_step_doubling = false;
    switch (axis) {
    case SweepAxis::time:
      if (x < 0.0) throw InvariantViolation("sweep: negative time");
      if (x == 0.0) {
        rows[static_cast<std::size_t>(i)] = {x, observe(0.0, cfg.initial_state.matrix())};
        return;
      }
      cfg.t_max = x;
      cfg.dt = std::min(cfg.dt, x);
      break;
    case SweepAxis::r12: cfg.bath.r12 = x; break;
    case SweepAxis::squeeze_r: cfg.bath.squeeze_r = x; break;
    }
    rows[static_cast<std::size_t>(i)] = {x, evolve(cfg).points.back()};
  });
  return rows;
}

} // namespace teleport

#include "teleport/mixed.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "teleport/random.hpp"

namespace teleport {

double singlet_fraction_at(const DensityMatrix& rho, const ComplexMatrix& u) {
  const ComplexVector v = vec(u);
  return v.dot(rho.matrix() * v).real() / rho.dim();
}

namespace {

ComplexMatrix magic_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  // Columns: (|00>+|11>), i(|00>-|11>), i(|01>+|10>), (|01>-|10>), all / sqrt(2).
  m(0, 0) = s;
  m(3, 0) = s;
  m(0, 1) = i * s;
  m(3, 1) = -i * s;
  m(1, 2) = i * s;
  m(2, 2) = i * s;
  m(1, 3) = s;
  m(2, 3) = -s;
  return m;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> magic_real_part(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw std::domain_error("two-qubit closed form requires d = 2");
  const ComplexMatrix m = magic_basis();
  const Eigen::MatrixXd re = (m.adjoint() * rho * m).real();
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(0.5 * (re + re.transpose()));
}

} // namespace

double fef_2qubit_closed_form(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw std::domain_error("two-qubit closed form requires d = 2");
  return fef_2qubit_closed_form(rho.matrix());
}

double fef_2qubit_closed_form(const ComplexMatrix& rho) { return magic_real_part(rho).eigenvalues()(3); }

ComplexMatrix fef_2qubit_maximizer(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw std::domain_error("two-qubit closed form requires d = 2");
  const auto es = magic_real_part(rho.matrix());
  const ComplexVector phi = magic_basis() * es.eigenvectors().col(3).cast<Complex>();
  return std::sqrt(2.0) * unvec(phi, 2);
}

OptResult singlet_fraction_mixed(const DensityMatrix& rho, const OptimizerConfig& cfg, bool use_closed_form) {
  const int d = rho.dim();
  const ManifoldObjective objective = [&](const ComplexMatrix& u) -> std::optional<double> {
    return singlet_fraction_at(rho, u);
  };
  const ManifoldGradient gradient = [&](const ComplexMatrix& u) -> ComplexMatrix {
    return unvec(rho.matrix() * vec(u), d) / static_cast<double>(d);
  };
  const auto start = [&](int r) -> ComplexMatrix {
    if (r == 0) return ComplexMatrix::Identity(d, d);
    auto rng = derived_rng(cfg.seed, static_cast<std::uint64_t>(r));
    return haar_unitary(d, rng);
  };
  auto best = multistart_search(start, objective, gradient, cfg, Sense::maximize);
  OptResult out = std::move(*best); // the singlet fraction is defined everywhere on U(d)

  if (use_closed_form && d == 2) {
    const ComplexMatrix u = fef_2qubit_maximizer(rho);
    const double v = singlet_fraction_at(rho, u);
    if (v > out.value) {
      out.value = v;
      out.argument = u;
      out.converged = true;
    }
  }
  return out;
}

double cren_upper_bound(const DensityMatrix& rho, const PureDecomposition& decomp) {
  const double err = decomp.reconstruction_error(rho);
  if (err > kReconstructionTolerance)
    throw InvariantViolation("cren_upper_bound: decomposition does not reconstruct rho (error " +
                             std::to_string(err) + ")");
  double total = 0.0;
  for (std::size_t i = 0; i < decomp.size(); ++i)
    total += decomp.weights[i] * negativity_pure(schmidt(decomp.states[i]), rho.dim());
  return total;
}

double average_fidelity(const PureDecomposition& decomp) {
  double total = 0.0;
  for (std::size_t i = 0; i < decomp.size(); ++i) {
    const int d = decomp.states[i].dim();
    total += decomp.weights[i] * fidelity_from_fraction(std::min(1.0, singlet_fraction_pure(schmidt(decomp.states[i]), d)), d);
  }
  return total;
}

namespace {

// Member contribution p * M(Psi) expressed through the singular values sigma of
// the unnormalized amplitude matrix, together with its sigma-gradient.
struct MemberTerm {
  double value = 0.0;
  RealVector dsigma;
  bool admissible = true;
};

MemberTerm member_term(const RealVector& sigma, int d, RoofMeasure measure, double rank_tol) {
  MemberTerm t;
  t.dsigma = RealVector::Zero(sigma.size());
  const double p = sigma.squaredNorm();
  if (p <= 1e-300) return t;
  int rank = 0;
  for (Eigen::Index k = 0; k < sigma.size(); ++k)
    if (sigma(k) * sigma(k) / p > rank_tol) ++rank;
  const auto s = [&](Eigen::Index k) { return k < sigma.size() ? sigma(k) : 0.0; };

  switch (measure) {
  case RoofMeasure::negativity: {
    const double sum = sigma.sum();
    t.value = std::max(0.0, (sum * sum - p) / (d - 1.0));
    for (Eigen::Index k = 0; k < sigma.size(); ++k) t.dsigma(k) = 2.0 * (sum - sigma(k)) / (d - 1.0);
    break;
  }
  case RoofMeasure::e_d2: {
    if (rank > 3) {
      t.admissible = false;
      return t;
    }
    const double c = 2.0 * d / (d - 1.0);
    const double a = s(0) * s(0), b = s(1) * s(1), e = s(2) * s(2);
    t.value = std::sqrt(std::max(0.0, c * (a * b + b * e + a * e)));
    if (t.value > 0.0) {
      const double sq[3] = {a, b, e};
      const double total = a + b + e;
      for (Eigen::Index k = 0; k < std::min<Eigen::Index>(3, sigma.size()); ++k)
        t.dsigma(k) = c * sigma(k) * (total - sq[k]) / t.value;
    }
    break;
  }
  case RoofMeasure::e_d3: {
    if (rank > 3) {
      t.admissible = false;
      return t;
    }
    if (rank < 3) return t;
    const double c = 6.0 * d * d / ((d - 1.0) * (d - 2.0));
    const double prod = s(0) * s(1) * s(2);
    t.value = std::cbrt(c * prod * prod);
    for (Eigen::Index k = 0; k < 3; ++k) t.dsigma(k) = 2.0 / 3.0 * t.value / sigma(k);
    break;
  }
  }
  return t;
}

struct RoofProblem {
  int d;
  RoofMeasure measure;
  double rank_tol;
  std::vector<ComplexMatrix> pieces; // sqrt(e_j) |v_j> as d x d amplitude matrices

  RoofProblem(const DensityMatrix& rho, RoofMeasure m, double tol)
      : d(rho.dim()), measure(m), rank_tol(tol) {
    const ComplexMatrix b = scaled_eigenvectors(rho);
    for (Eigen::Index j = 0; j < b.cols(); ++j) pieces.push_back(unvec(b.col(j), d));
  }

  ComplexMatrix member(const ComplexMatrix& mix, Eigen::Index i) const {
    ComplexMatrix a = ComplexMatrix::Zero(d, d);
    for (std::size_t j = 0; j < pieces.size(); ++j) a += mix(i, static_cast<Eigen::Index>(j)) * pieces[j];
    return a;
  }

  std::optional<double> value(const ComplexMatrix& mix) const {
    double total = 0.0;
    for (Eigen::Index i = 0; i < mix.rows(); ++i) {
      const ComplexMatrix a = member(mix, i);
      Eigen::JacobiSVD<ComplexMatrix> solver(a);
      const auto t = member_term(solver.singularValues(), d, measure, rank_tol);
      if (!t.admissible) return std::nullopt;
      total += t.value;
    }
    return total;
  }

  ComplexMatrix gradient(const ComplexMatrix& mix) const {
    ComplexMatrix g(mix.rows(), mix.cols());
    for (Eigen::Index i = 0; i < mix.rows(); ++i) {
      const ComplexMatrix a = member(mix, i);
      Eigen::JacobiSVD<ComplexMatrix> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
      const auto t = member_term(solver.singularValues(), d, measure, rank_tol);
      // dM/dA* = sum_k (dM/dsigma_k) u_k v_k^dagger / 2.
      ComplexMatrix ga = ComplexMatrix::Zero(d, d);
      for (Eigen::Index k = 0; k < t.dsigma.size(); ++k)
        if (t.dsigma(k) != 0.0)
          ga += 0.5 * t.dsigma(k) * solver.matrixU().col(k) * solver.matrixV().col(k).adjoint();
      for (std::size_t j = 0; j < pieces.size(); ++j)
        g(i, static_cast<Eigen::Index>(j)) = pieces[j].conjugate().cwiseProduct(ga).sum();
    }
    return g;
  }
};

} // namespace

std::optional<double> roof_objective(const DensityMatrix& rho, const ComplexMatrix& mix, RoofMeasure measure,
                                     double rank_tol) {
  const RoofProblem problem(rho, measure, rank_tol);
  if (mix.cols() != static_cast<Eigen::Index>(problem.pieces.size()))
    throw InvariantViolation("roof_objective: mix needs one column per eigenpair");
  return problem.value(mix);
}

std::optional<OptResult> convex_roof_search(const DensityMatrix& rho, RoofMeasure measure,
                                            const OptimizerConfig& cfg, const RoofSearchOptions& opts) {
  if (measure == RoofMeasure::e_d3 && rho.dim() < 3)
    throw std::domain_error("E^(d,3) convex roof requires d >= 3");
  if (opts.member_factor < 1) throw InvariantViolation("convex_roof_search: member_factor must be >= 1");
  const RoofProblem problem(rho, measure, opts.rank_tol);
  const int rank = static_cast<int>(problem.pieces.size());
  int members = std::max(rank, opts.member_factor * rank);
  if (opts.seed_mix) {
    if (opts.seed_mix->cols() != rank)
      throw InvariantViolation("convex_roof_search: seed isometry needs one column per eigenpair");
    members = std::max<int>(members, static_cast<int>(opts.seed_mix->rows()));
  }

  const auto start = [&](int r) -> ComplexMatrix {
    ComplexMatrix mix = ComplexMatrix::Zero(members, rank);
    if (r == 0) {
      if (opts.seed_mix)
        mix.topRows(opts.seed_mix->rows()) = *opts.seed_mix;
      else
        mix.topRows(rank) = ComplexMatrix::Identity(rank, rank);
      return mix;
    }
    auto rng = derived_rng(cfg.seed, static_cast<std::uint64_t>(r));
    return haar_isometry(members, rank, rng);
  };
  const ManifoldObjective objective = [&](const ComplexMatrix& mix) { return problem.value(mix); };
  const ManifoldGradient gradient = [&](const ComplexMatrix& mix) { return problem.gradient(mix); };
  return multistart_search(start, objective, gradient, cfg, Sense::minimize);
}

OptResult cren_estimate(const DensityMatrix& rho, const OptimizerConfig& cfg, const RoofSearchOptions& opts) {
  // Negativity is defined for every ensemble, so a result always exists.
  return *convex_roof_search(rho, RoofMeasure::negativity, cfg, opts);
}

std::optional<OptResult> e_d2_mixed(const DensityMatrix& rho, const OptimizerConfig& cfg,
                                    const RoofSearchOptions& opts) {
  return convex_roof_search(rho, RoofMeasure::e_d2, cfg, opts);
}

std::optional<OptResult> e_d3_mixed(const DensityMatrix& rho, const OptimizerConfig& cfg,
                                    const RoofSearchOptions& opts) {
  return convex_roof_search(rho, RoofMeasure::e_d3, cfg, opts);
}

MeasureReport classify_mixed(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  const int d = rho.dim();
  MeasureReport r;
  r.d = d;
  r.singlet_fraction = std::clamp(singlet_fraction_mixed(rho, cfg).value, 0.0, 1.0);
  r.fidelity = fidelity_from_fraction(r.singlet_fraction, d);
  r.negativity = negativity_mixed(rho);
  r.cren = cren_estimate(rho, cfg).value;
  if (const auto e2 = e_d2_mixed(rho, cfg)) r.e_d2 = e2->value;
  if (d >= 3)
    if (const auto e3 = e_d3_mixed(rho, cfg)) r.e_d3 = e3->value;
  if (d == 2) r.concurrence = concurrence_2qubit(rho);
  r.schmidt_rank = max_schmidt_rank(spectral_decomposition(rho));
  r.useful_for_teleportation = useful_for_teleportation(r.singlet_fraction, d);
  r.rank_class = classify_band(r.useful_for_teleportation, r.e_d2, d);
  return r;
}

} // namespace teleport

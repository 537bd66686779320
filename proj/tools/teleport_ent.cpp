#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "teleport/dynamics.hpp"
#include "teleport/measures.hpp"
#include "teleport/mixed.hpp"
#include "teleport/qutrit_example.hpp"
#include "teleport/random.hpp"
#include "teleport/report.hpp"
#include "teleport/state_io.hpp"

using namespace teleport;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;
constexpr std::uint64_t kDefaultSeed = 0x5eed;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("TELEPORT_ENT_SEED"); env && *env) {
    try {
      return std::stoull(env, nullptr, 0);
    } catch (const std::exception&) {
      throw ParseError(std::string("TELEPORT_ENT_SEED is not an integer: '") + env + "'");
    }
  }
  return kDefaultSeed;
}

struct Common {
  std::uint64_t seed = 0;
  int jobs = 1;
  bool no_manifest = false;
  RunManifest manifest;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to `path` (or stdout when empty).
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::vector<double> parse_grid(const std::string& range) {
  const auto a = range.find(':');
  const auto b = range.find(':', a == std::string::npos ? a : a + 1);
  if (a == std::string::npos || b == std::string::npos)
    throw ParseError("sweep range must be lo:hi:n, got '" + range + "'");
  double lo = 0.0, hi = 0.0;
  long n = 0;
  try {
    lo = std::stod(range.substr(0, a));
    hi = std::stod(range.substr(a + 1, b - a - 1));
    n = std::stol(range.substr(b + 1));
  } catch (const std::exception&) {
    throw ParseError("sweep range must be lo:hi:n, got '" + range + "'");
  }
  if (n < 1 || n > 100000) throw ParseError("sweep point count out of range");
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) grid[static_cast<std::size_t>(i)] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return grid;
}

OptimizerConfig optimizer(const Common& c, int restarts, double tol) {
  OptimizerConfig cfg;
  cfg.seed = c.seed;
  cfg.jobs = c.jobs;
  cfg.restarts = restarts;
  cfg.tol = tol;
  cfg.validate();
  return cfg;
}

} // namespace

int main(int argc, char** argv) {
  const auto started = std::chrono::steady_clock::now();
  CLI::App app{"Entanglement of teleportation: measures, bounds and two-qubit bath dynamics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", TELEPORT_VERSION);

  Common common;
  std::optional<std::uint64_t> seed_flag;
  app.add_option("--seed", seed_flag, "RNG seed (default: $TELEPORT_ENT_SEED or 0x5eed)");
  app.add_option("--jobs", common.jobs, "Worker threads for restarts and sweeps")->check(CLI::Range(1, 256));
  app.add_flag("--no-manifest", common.no_manifest, "Do not print the run manifest to stderr");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Measures and usefulness of a state file");
  std::string state_path;
  double tol = kDefaultRankTolerance;
  int restarts = 32;
  analyze->add_option("path", state_path, "State file ('pure d' or 'dm d' header)")->required();
  analyze->add_option("--tol", tol, "Schmidt rank tolerance (pure) or optimizer tolerance (dm)");
  analyze->add_option("--restarts", restarts, "Optimizer restarts for mixed states")->check(CLI::PositiveNumber);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Entanglement bands for useful states");
  int bounds_d = 3;
  bounds->add_option("--d", bounds_d, "Local dimension")->required();

  // dynamics
  auto* dyn = app.add_subcommand("dynamics", "Two-qubit evolution in a squeezed thermal bath (CSV)");
  std::string model = "dissipative";
  DynamicsConfig dcfg;
  std::string out_path, initial_path;
  std::vector<std::string> sweep_args;
  std::optional<double> sweep_t;
  dyn->add_option("--model", model, "dissipative or qnd")->check(CLI::IsMember({"dissipative", "qnd"}));
  dyn->add_option("--T", dcfg.bath.temperature, "Bath temperature");
  dyn->add_option("--r", dcfg.bath.squeeze_r, "Bath squeezing r");
  dyn->add_option("--phi", dcfg.bath.squeeze_phi, "Squeezing phase");
  dyn->add_option("--r12", dcfg.bath.r12, "Inter-qubit distance (k r12)");
  dyn->add_option("--gamma0", dcfg.gamma0, "Single-qubit decay rate");
  dyn->add_option("--t-max", dcfg.t_max, "Evolution time");
  dyn->add_option("--dt", dcfg.dt, "Output step");
  dyn->add_option("--max-steps", dcfg.max_steps, "Step cap per run");
  dyn->add_option("--initial", initial_path, "Initial two-qubit state file (default 0.95 singlet + noise)");
  dyn->add_option("--sweep", sweep_args, "Sweep mode: AXIS LO:HI:N with AXIS in {time, r12, r}")
      ->expected(2);
  dyn->add_option("--t", sweep_t, "Endpoint time for r12 and r sweeps (default --t-max)");
  dyn->add_option("--out", out_path, "CSV output file (default stdout)");

  // qutrit-example
  auto* qutrit = app.add_subcommand("qutrit-example", "Two-qutrit rank-2 family");
  QutritFamilyParams qparams;
  int qrestarts = 32;
  qutrit->add_option("--p", qparams.p, "Mixing probability in [0, 1/2]");
  qutrit->add_option("--restarts", qrestarts, "Optimizer restarts")->check(CLI::PositiveNumber);

  // random
  auto* rnd = app.add_subcommand("random", "Write a seeded random state file");
  std::string kind = "pure";
  int rd = 2, rank = 0;
  std::string rnd_out;
  rnd->add_option("--kind", kind, "pure or dm")->check(CLI::IsMember({"pure", "dm"}));
  rnd->add_option("--d", rd, "Local dimension")->check(CLI::Range(2, 64));
  rnd->add_option("--rank", rank, "Schmidt rank (pure) or matrix rank (dm); 0 = full");
  rnd->add_option("--out", rnd_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  std::ostringstream text;
  std::string manifest_target;
  try {
    common.seed = seed_flag ? *seed_flag : default_seed();
    common.manifest.seed = common.seed;
    common.manifest.version = TELEPORT_VERSION;
    common.manifest.command_line.assign(argv, argv + argc);

    if (*analyze) {
      const std::string raw = read_file(state_path);
      common.manifest.input_digests.emplace_back(state_path, hex_digest(fnv1a64(raw)));
      const ParsedState parsed = parse_state(raw);
      if (const auto* psi = std::get_if<PureBipartiteState>(&parsed)) {
        text << "# pure state, d=" << psi->dim() << "\n";
        write_report(text, analyze_pure(*psi, tol));
      } else {
        const auto& rho = std::get<DensityMatrix>(parsed);
        text << "# density matrix, d=" << rho.dim() << " (optimized fields are one-sided bounds)\n";
        write_report(text, classify_mixed(rho, optimizer(common, restarts, tol)));
      }
    } else if (*bounds) {
      const Bounds b2 = rank2_bounds(bounds_d);
      text << "# E^(d,2) band of useful Schmidt-rank-2 states; E^(d,3) band of rank-3 states\n";
      text << "d=" << bounds_d << "\n";
      text << "rank2_lo=" << format_fixed(b2.lo) << "\n";
      text << "rank2_hi=" << format_fixed(b2.hi) << "\n";
      if (bounds_d >= 3) {
        text << "rank3_lo=" << format_fixed(0.0) << "\n";
        text << "rank3_hi=" << format_fixed(rank3_mixed_bound(bounds_d)) << "\n";
      }
    } else if (*dyn) {
      dcfg.model = model == "qnd" ? ModelKind::QND : ModelKind::Dissipative;
      if (!initial_path.empty()) {
        const std::string raw = read_file(initial_path);
        common.manifest.input_digests.emplace_back(initial_path, hex_digest(fnv1a64(raw)));
        const ParsedState parsed = parse_state(raw);
        if (const auto* psi = std::get_if<PureBipartiteState>(&parsed))
          dcfg.initial_state = DensityMatrix::from_pure(*psi);
        else
          dcfg.initial_state = std::get<DensityMatrix>(parsed);
      }
      if (sweep_args.empty()) {
        write_csv(text, evolve(dcfg).points);
      } else {
        const SweepAxis axis = parse_sweep_axis(sweep_args[0]);
        const std::vector<double> grid = parse_grid(sweep_args[1]);
        if (sweep_t) dcfg.t_max = *sweep_t;
        write_csv(text, sweep(dcfg, axis, grid, common.jobs));
      }
      manifest_target = out_path;
    } else if (*qutrit) {
      const QutritReport r = e_32_of_family(qparams, optimizer(common, qrestarts, 1e-9));
      text << "# two-qutrit family rho_f(p); closed form from the family's stated fraction minimum\n";
      text << "p=" << format_fixed(r.p) << "\n";
      text << "closed_form=" << format_fixed(r.closed_form) << "\n";
      text << "declared_fraction_average=" << format_fixed(r.declared_fraction_average) << "\n";
      text << "declared_value=" << format_fixed(r.declared_value) << "\n";
      text << "declared_e_d2=" << format_fixed(r.declared_e_d2) << "\n";
      if (r.search) text << "search=" << format_fixed(*r.search) << "\n";
      text << "f=" << format_fixed(r.singlet_fraction) << "\n";
      text << "useful_by_band=" << (r.useful_by_band ? "true" : "false") << "\n";
      text << "useful_by_fraction=" << (r.useful_by_fraction ? "true" : "false") << "\n";
    } else if (*rnd) {
      Rng rng(common.seed);
      if (rank < 0 || rank > (kind == "pure" ? rd : rd * rd)) throw InvariantViolation("random: rank out of range");
      if (kind == "pure") {
        const auto psi = rank == 0 ? random_pure_state(rd, rng) : random_pure_state_with_rank(rd, rank, rng);
        write_state(text, psi);
      } else {
        write_state(text, random_density_matrix(rd, rng, rank));
      }
      manifest_target = rnd_out;
    }

    const std::string& target = *dyn ? out_path : *rnd ? rnd_out : std::string();
    emit(target, text.str());

    common.manifest.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    const std::string manifest = manifest_json(common.manifest);
    if (!common.no_manifest) std::cerr << manifest << "\n";
    if (!manifest_target.empty()) emit(manifest_target + ".manifest.json", manifest + "\n");
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvariantViolation& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

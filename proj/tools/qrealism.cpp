// qrealism command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error (including
// unreadable inputs and unwritable outputs).

#include "qrealism/qrealism.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>

#ifndef QREALISM_PULSE_DIR
#define QREALISM_PULSE_DIR "data/pulses"
#endif

namespace {

using namespace qreal;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CircuitKind parse_kind(const std::string& s) {
  if (s == "qdce") return CircuitKind::qdce;
  if (s == "qcre") return CircuitKind::qcre;
  throw UsageError("unknown circuit kind '" + s + "' (expected qdce or qcre)");
}

/// Writes through `body` to PATH, or stdout for "-".
template <typename F>
void with_output(const std::string& path, F&& body) {
  if (path == "-") {
    body(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + path + "'");
  body(out);
  out.flush();
  if (!out) throw UsageError("failed writing output file '" + path + "'");
}

struct NoiseFlags {
  double sigma = -1.0;
  std::size_t samples = 100;
  std::uint64_t seed = 1;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--noise", sigma, "Per-coefficient tomography noise sigma (enables Monte Carlo)");
    cmd->add_option("--samples", samples, "Monte Carlo samples per grid point")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "Random seed");
  }

  std::optional<NoiseModel> model() const {
    if (sigma < 0.0) return std::nullopt;
    return NoiseModel{sigma, samples, seed};
  }
};

std::vector<double> linspace(double lo, double hi, std::size_t n, bool inclusive) {
  if (n == 0) throw UsageError("grid needs at least one point");
  std::vector<double> g(n);
  const double denom = inclusive ? static_cast<double>(n > 1 ? n - 1 : 1) : static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo + (hi - lo) * static_cast<double>(i) / denom;
  if (inclusive && n > 1) g.back() = hi;
  return g;
}

void print_matrix(std::ostream& os, const ComplexMatrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) os << "  ";
      os << format_number(m(r, c).real()) << (m(r, c).imag() < 0 ? "-" : "+")
         << format_number(std::abs(m(r, c).imag())) << "i";
    }
    os << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wave/particle realism in quantum-controlled interferometers"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Optional key=value configuration file; flags override it");

  bool degrees = false;
  auto to_rad = [&](double v) { return degrees ? v * kPi / 180.0 : v; };

  // figure2
  auto* fig2 = app.add_subcommand("figure2", "Wave and particle realism against visibility (CSV)");
  std::string fig2_out;
  std::size_t fig2_points = 65;
  double fig2_theta = 0.0;
  NoiseFlags fig2_noise;
  fig2->add_option("--out", fig2_out, "Output CSV path ('-' for stdout)")->required();
  fig2->add_option("--points", fig2_points, "Number of alpha grid points over [0, pi]")->check(CLI::PositiveNumber);
  fig2->add_option("--theta", fig2_theta, "Phase-shifter angle");
  fig2->add_flag("--degrees", degrees, "Angles are given in degrees");
  fig2_noise.add_to(fig2);

  // figure3
  auto* fig3 = app.add_subcommand("figure3", "Detection pattern p0(alpha, theta) and visibility table (CSV)");
  std::string fig3_out, fig3_kind;
  Figure3Options fig3_opts;
  fig3->add_option("--kind", fig3_kind, "qdce or qcre")->required();
  fig3->add_option("--out", fig3_out, "Output CSV path ('-' for stdout)")->required();
  fig3->add_option("--alpha-points", fig3_opts.alpha_points, "Alpha grid points over [0, pi]")
      ->check(CLI::PositiveNumber);
  fig3->add_option("--theta-points", fig3_opts.theta_points, "Theta grid points over [0, 2 pi)")
      ->check(CLI::PositiveNumber);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Quantifier table over an (alpha, theta) grid (CSV)");
  std::string sweep_out, sweep_kind;
  std::vector<double> sweep_alphas, sweep_thetas;
  double alpha_min = 0.0, alpha_max = -1.0, theta_min = 0.0, theta_max = -1.0;
  std::size_t alpha_points = 17, theta_points = 1;
  NoiseFlags sweep_noise;
  sweep->add_option("--kind", sweep_kind, "qdce or qcre")->required();
  sweep->add_option("--out", sweep_out, "Output CSV path ('-' for stdout)")->required();
  sweep->add_option("--alpha", sweep_alphas, "Explicit alpha values (comma separated)")->delimiter(',');
  sweep->add_option("--theta", sweep_thetas, "Explicit theta values (comma separated)")->delimiter(',');
  sweep->add_option("--alpha-min", alpha_min, "Grid start for alpha");
  sweep->add_option("--alpha-max", alpha_max, "Grid end for alpha (inclusive, default pi)");
  sweep->add_option("--alpha-points", alpha_points, "Alpha grid points")->check(CLI::PositiveNumber);
  sweep->add_option("--theta-min", theta_min, "Grid start for theta");
  sweep->add_option("--theta-max", theta_max, "Grid end for theta (exclusive, default 2 pi)");
  sweep->add_option("--theta-points", theta_points, "Theta grid points")->check(CLI::PositiveNumber);
  sweep->add_flag("--degrees", degrees, "Angles are given in degrees");
  sweep_noise.add_to(sweep);

  // verify
  auto* verify = app.add_subcommand("verify", "Run the built-in verification suite");
  VerifyOptions verify_opts;
  verify_opts.pulse_dir = QREALISM_PULSE_DIR;
  bool fault_hadamard = false;
  verify->add_option("--pulse-dir", verify_opts.pulse_dir, "Directory holding qdce.seq and qcre.seq");
  verify->add_option("--states", verify_opts.random_states, "Random states for the bound checks");
  verify->add_option("--seed", verify_opts.seed, "Seed for the random states");
  verify->add_flag("--fault-hadamard", fault_hadamard, "Swap in a wrong beam-splitter convention")
      ->group("");

  // pulse compile
  auto* pulse_cmd = app.add_subcommand("pulse", "Pulse-sequence tools");
  pulse_cmd->require_subcommand(1);
  auto* compile = pulse_cmd->add_subcommand("compile", "Compile a sequence file to a two-qubit unitary");
  std::string seq_path, check_kind;
  double pulse_alpha = 0.0, pulse_theta = 0.0, pulse_tol = 1e-9;
  compile->add_option("--seq", seq_path, "Sequence file")->required();
  compile->add_option("--check-against", check_kind, "Compare with the ideal qdce or qcre circuit");
  compile->add_option("--alpha", pulse_alpha, "Controller angle bound to 'alpha'");
  compile->add_option("--theta", pulse_theta, "Phase-shifter angle bound to 'theta'");
  compile->add_option("--tol", pulse_tol, "Equivalence tolerance");
  compile->add_flag("--degrees", degrees, "Angles are given in degrees");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*fig2) {
      Figure2Options opts;
      opts.points = fig2_points;
      opts.theta = to_rad(fig2_theta);
      opts.noise = fig2_noise.model();
      CircuitParams{0.0, opts.theta}.validate();
      with_output(fig2_out, [&](std::ostream& os) { write_figure2(os, opts); });
    } else if (*fig3) {
      fig3_opts.kind = parse_kind(fig3_kind);
      with_output(fig3_out, [&](std::ostream& os) { write_figure3(os, fig3_opts); });
    } else if (*sweep) {
      SweepGrid grid;
      grid.kind = parse_kind(sweep_kind);
      if (!sweep_alphas.empty()) {
        for (double a : sweep_alphas) grid.alphas.push_back(to_rad(a));
      } else {
        grid.alphas = linspace(to_rad(alpha_min), alpha_max < 0 ? kPi : to_rad(alpha_max), alpha_points, true);
      }
      if (!sweep_thetas.empty()) {
        for (double t : sweep_thetas) grid.thetas.push_back(to_rad(t));
      } else {
        grid.thetas = linspace(to_rad(theta_min), theta_max < 0 ? 2.0 * kPi : to_rad(theta_max), theta_points, false);
      }
      grid.noise = sweep_noise.model();
      grid.validate();
      with_output(sweep_out, [&](std::ostream& os) { write_sweep(os, grid); });
    } else if (*verify) {
      if (fault_hadamard) verify_opts.devices.superposition = controller_preparation(kPi / 2);
      const auto results = run_verification(verify_opts);
      bool ok = true;
      for (const auto& r : results) {
        std::cout << (r.passed() ? "[PASS] " : "[FAIL] ") << r.name << "  margin=" << format_number(r.margin)
                  << "  (" << r.detail << ")\n";
        ok = ok && r.passed();
      }
      std::cout << (ok ? "all checks passed\n" : "verification FAILED\n");
      return ok ? kExitOk : kExitVerifyFailed;
    } else if (*compile) {
      const auto tmpl = pulse::load_sequence(seq_path);
      const CircuitParams params{to_rad(pulse_alpha), to_rad(pulse_theta)};
      const auto compiled = pulse::compile(pulse::bind(tmpl, params.alpha, params.theta));
      std::cout << "J_Hz=" << format_number(tmpl.coupling_hz) << '\n'
                << "rotations=" << compiled.budget.rotation_count << '\n'
                << "duration_s=" << format_number(compiled.budget.total_duration) << '\n'
                << "unitary:\n";
      print_matrix(std::cout, compiled.unitary);
      if (!check_kind.empty()) {
        const CircuitKind kind = parse_kind(check_kind);
        params.validate();
        const auto eq = pulse::equivalent_up_to_phase(compiled.unitary, circuit_unitary(kind, params), pulse_tol);
        std::cout << "equivalent=" << (eq.equal ? "true" : "false") << '\n'
                  << "global_phase=" << format_number(eq.phase) << '\n'
                  << "residual=" << format_number(eq.residual) << '\n';
        const bool within_budget = compiled.budget.total_duration <= pulse::kProtocolBudgetSeconds;
        std::cout << "within_budget=" << (within_budget ? "true" : "false") << '\n';
        return eq.equal && within_budget ? kExitOk : kExitVerifyFailed;
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const pulse::ParseError& e) {
    std::cerr << "error: " << seq_path << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

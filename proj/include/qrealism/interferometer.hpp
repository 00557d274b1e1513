// Quantum-controlled interferometers on a path qubit and a controller qubit.
//
// Two arrangements share the same devices and differ only in which
// superposition device is placed under quantum control:
//   delayed choice (qdce):      H_path -> phase -> controlled-H
//   reality controlled (qcre):  controlled-H -> phase -> H_path
// The controller starts in cos(a/2)|in> + sin(a/2)|out> with |in> = |0>_C,
// |out> = |1>_C; a controlled device acts when the controller is |in>.
// Factor order is (path, controller).
#pragma once

#include "qrealism/bounds.hpp"

#include <optional>
#include <string_view>

namespace qreal {

enum class CircuitKind { qdce, qcre };
enum class Stage { input, inside, output };

inline const std::string kPath = "path";
inline const std::string kController = "controller";

inline std::string_view to_string(CircuitKind kind) { return kind == CircuitKind::qdce ? "qdce" : "qcre"; }

inline std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::input: return "input";
    case Stage::inside: return "inside";
    case Stage::output: return "output";
  }
  return "?";
}

inline FactorList path_controller_factors() { return {{kPath, 2}, {kController, 2}}; }

/// Controller angle alpha in [0, pi] and phase-shifter angle theta in [0, 2 pi).
struct CircuitParams {
  double alpha = 0.0;
  double theta = 0.0;

  void validate() const {
    constexpr double slack = 1e-12;
    if (!(alpha >= -slack && alpha <= kPi + slack))
      throw std::invalid_argument("alpha must lie in [0, pi]");
    if (!(theta >= -slack && theta < 2.0 * kPi))
      throw std::invalid_argument("theta must lie in [0, 2 pi)");
  }
};

inline ComplexMatrix hadamard() {
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

/// diag(e^{i theta}, 1) on the path.
inline ComplexMatrix phase_shifter(double theta) {
  ComplexMatrix s = ComplexMatrix::Identity(2, 2);
  s(0, 0) = std::polar(1.0, theta);
  return s;
}

/// Real rotation taking |0> to cos(a/2)|0> + sin(a/2)|1>.
inline ComplexMatrix controller_preparation(double alpha) {
  ComplexMatrix r(2, 2);
  r << std::cos(alpha / 2), -std::sin(alpha / 2), std::sin(alpha / 2), std::cos(alpha / 2);
  return r;
}

/// The superposition device used by both circuits. Tests swap it to inject faults.
struct Devices {
  ComplexMatrix superposition = hadamard();
};

inline ComplexMatrix on_path(const ComplexMatrix& u) { return tensor_product(u, pauli::i2()); }
inline ComplexMatrix on_controller(const ComplexMatrix& u) { return tensor_product(pauli::i2(), u); }

/// `u` on the path when the controller is |in>, identity when |out>.
inline ComplexMatrix controlled_on_in(const ComplexMatrix& u) {
  return tensor_product(u, outer(basis_ket(2, 0))) + tensor_product(pauli::i2(), outer(basis_ket(2, 1)));
}

/// Product of every gate up to and including `stage`, starting from |0>_path |0>_C.
inline ComplexMatrix stage_unitary(CircuitKind kind, const CircuitParams& params, Stage stage,
                                   const Devices& devices = {}) {
  params.validate();
  const ComplexMatrix prep = on_controller(controller_preparation(params.alpha));
  if (stage == Stage::input) return prep;
  const ComplexMatrix shift = on_path(phase_shifter(params.theta));
  const ComplexMatrix split = on_path(devices.superposition);
  const ComplexMatrix controlled = controlled_on_in(devices.superposition);
  if (kind == CircuitKind::qdce) {
    const ComplexMatrix inside = shift * split * prep;
    return stage == Stage::inside ? inside : ComplexMatrix(controlled * inside);
  }
  const ComplexMatrix inside = shift * controlled * prep;
  return stage == Stage::inside ? inside : ComplexMatrix(split * inside);
}

/// Full circuit unitary (preparation included), the target for pulse compilation.
inline ComplexMatrix circuit_unitary(CircuitKind kind, const CircuitParams& params, const Devices& devices = {}) {
  return stage_unitary(kind, params, Stage::output, devices);
}

inline ComplexVector stage_ket(CircuitKind kind, const CircuitParams& params, Stage stage,
                               const Devices& devices = {}) {
  return stage_unitary(kind, params, stage, devices) * basis_ket(4, 0);
}

struct StageState {
  Stage stage;
  DensityOperator state;
};

inline StageState stage_state(CircuitKind kind, const CircuitParams& params, Stage stage,
                              const Devices& devices = {}) {
  return {stage, DensityOperator::pure(stage_ket(kind, params, stage, devices), path_controller_factors())};
}

/// |0>(cos(a/2)|in> + sin(a/2)|out>); identical for both circuits.
inline StageState input_state(const CircuitParams& params) {
  return stage_state(CircuitKind::qdce, params, Stage::input);
}

/// Tr[(|0><0| (x) 1) rho_out].
inline double detection_probability(CircuitKind kind, const CircuitParams& params, const Devices& devices = {}) {
  const ComplexVector out = stage_ket(kind, params, Stage::output, devices);
  return std::norm(out(0)) + std::norm(out(1));
}

inline constexpr std::size_t kDefaultVisibilityResolution = 720;

/// Extremal contrast of the detection pattern over a theta grid
/// theta_k = 2 pi k / resolution. Resolution below 360 throws.
inline double visibility(CircuitKind kind, double alpha, std::size_t resolution = kDefaultVisibilityResolution,
                         const Devices& devices = {}) {
  if (resolution < 360) throw std::invalid_argument("visibility: resolution must be at least 360");
  double lo = INFINITY, hi = -INFINITY;
  for (std::size_t k = 0; k < resolution; ++k) {
    const double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(resolution);
    const double p = detection_probability(kind, {alpha, theta}, devices);
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  return (hi - lo) / (hi + lo);
}

/// Particle observable: definite paths {|0>, |1>}.
inline ProjectiveObservable particle_observable(const std::string& subsystem = kPath) {
  return ProjectiveObservable::from_basis(subsystem, {basis_ket(2, 0), basis_ket(2, 1)}, {"P+", "P-"});
}

/// Wave observable: (e^{i theta}|0> +- |1>)/sqrt2.
inline ProjectiveObservable wave_observable(double theta, const std::string& subsystem = kPath) {
  ComplexVector plus(2), minus(2);
  const cplx phase = std::polar(1.0, theta);
  plus << phase, 1.0;
  minus << phase, -1.0;
  return ProjectiveObservable::from_basis(subsystem, {plus / std::sqrt(2.0), minus / std::sqrt(2.0)},
                                          {"W+", "W-"});
}

struct WaveParticleBasis {
  double theta;
  ProjectiveObservable wave;
  ProjectiveObservable particle;
};

inline WaveParticleBasis wave_particle_basis(double theta, const std::string& subsystem = kPath) {
  return {theta, wave_observable(theta, subsystem), particle_observable(subsystem)};
}

struct ErrorBars {
  double wave_realism = 0.0;
  double particle_realism = 0.0;
  double visibility = 0.0;
};

/// Quantifiers of the in-interferometer state. All entropic values in bits.
struct RealismReport {
  double wave_realism = 0.0;
  double particle_realism = 0.0;
  double visibility = 0.0;
  double bound_rhs = 0.0;  // log2 d + S(rho_path) - I_{path:controller}
  double discord = 0.0;    // path measured
  double mutual_information = 0.0;
  std::optional<ErrorBars> errors;
};

struct RealismOptions {
  std::size_t visibility_resolution = kDefaultVisibilityResolution;
  bool with_discord = true;
  DiscordOptions discord{};
  Devices devices{};
};

inline RealismReport realism_inside(CircuitKind kind, const CircuitParams& params,
                                    const RealismOptions& options = {}) {
  const StageState inside = stage_state(kind, params, Stage::inside, options.devices);
  const WaveParticleBasis basis = wave_particle_basis(params.theta);
  const IncompatibilityBound bound = bound_incompatible(inside.state, basis.wave, basis.particle);

  RealismReport report;
  report.wave_realism = realism(inside.state, basis.wave);
  report.particle_realism = realism(inside.state, basis.particle);
  report.visibility = visibility(kind, params.alpha, options.visibility_resolution, options.devices);
  report.bound_rhs = bound.rhs;
  report.mutual_information = mutual_information(inside.state, kPath);
  if (options.with_discord) report.discord = discord(inside.state, kPath, options.discord).value;
  return report;
}

}  // namespace qreal

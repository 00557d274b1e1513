// Simulated two-qubit state tomography with Gaussian noise on the Pauli
// correlators, physical projection of the linear-inversion estimate, and Monte
// Carlo propagation into the in-interferometer quantifiers.
#pragma once

#include "qrealism/interferometer.hpp"
#include "qrealism/random.hpp"

#include <array>
#include <numeric>

namespace qreal {

/// c[i][j] = Tr[rho (sigma_i (x) sigma_j)], indices I, X, Y, Z. c[0][0] = 1.
using PauliCoefficients = std::array<std::array<double, 4>, 4>;

struct NoiseModel {
  double sigma = 0.01;
  std::size_t samples = 100;
  std::uint64_t seed = 1;

  void validate() const {
    if (!(sigma >= 0.0)) throw std::invalid_argument("noise sigma must be >= 0");
    if (samples < 1) throw std::invalid_argument("noise samples must be >= 1");
  }
};

inline void require_two_qubits(const FactorList& factors, std::size_t dim) {
  if (dim != 4 || factors.size() != 2 || factors[0].dim != 2 || factors[1].dim != 2)
    throw std::invalid_argument("tomography works on exactly two qubits");
}

inline PauliCoefficients pauli_expectations(const DensityOperator& rho) {
  require_two_qubits(rho.factors(), rho.dim());
  PauliCoefficients c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      c[i][j] = (rho.matrix() * tensor_product(pauli::by_index(i), pauli::by_index(j))).trace().real();
  c[0][0] = 1.0;
  return c;
}

/// Adds independent N(0, sigma) to the 15 non-identity coefficients. The draw
/// depends only on (noise.seed, draw_index).
inline PauliCoefficients perturb(const PauliCoefficients& c, const NoiseModel& noise, std::uint64_t draw_index) {
  noise.validate();
  PauliCoefficients out = c;
  if (noise.sigma == 0.0) return out;
  Rng rng(noise.seed, draw_index);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != 0 || j != 0) out[i][j] += noise.sigma * rng.normal();
  return out;
}

/// Hermitian unit-trace estimate; positivity is not guaranteed.
struct ReconstructedState {
  ComplexMatrix matrix;
  FactorList factors;
  double min_eigenvalue = 0.0;

  bool nonphysical() const { return min_eigenvalue < -kStructureTolerance; }
};

/// Linear inversion rho = (1/4) sum c_ij sigma_i (x) sigma_j.
inline ReconstructedState reconstruct(const PauliCoefficients& c, FactorList factors = qubits({"A", "B"})) {
  require_two_qubits(factors, total_dimension(factors));
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m += c[i][j] * tensor_product(pauli::by_index(i), pauli::by_index(j));
  m /= 4.0;
  m = 0.5 * (m + m.adjoint()).eval();
  const double lo = eigh(m).values(0);
  return {std::move(m), std::move(factors), lo};
}

/// Euclidean projection onto the probability simplex (sorted water-filling).
inline RealVector project_to_simplex(const RealVector& v) {
  std::vector<double> u(v.data(), v.data() + v.size());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0, threshold = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    cumulative += u[j];
    const double t = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) threshold = t;
  }
  RealVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = std::max(v(i) - threshold, 0.0);
  return out;
}

/// Nearest density operator in the eigenvalue sense: keep the eigenvectors,
/// project the spectrum onto the probability simplex.
inline DensityOperator project_physical(const ComplexMatrix& raw, FactorList factors) {
  const Eigensystem es = eigh(raw);
  const RealVector p = project_to_simplex(es.values);
  ComplexMatrix m = es.vectors * p.cast<cplx>().asDiagonal() * es.vectors.adjoint();
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityOperator(std::move(m), std::move(factors));
}

inline DensityOperator project_physical(const ReconstructedState& raw) {
  return project_physical(raw.matrix, raw.factors);
}

/// Mean and sample standard deviation with compensated sums.
class Accumulator {
 public:
  void add(double x) {
    values_.push_back(x);
  }

  double mean() const { return kahan_sum(values_) / static_cast<double>(values_.size()); }

  double stddev() const {
    if (values_.size() < 2) return 0.0;
    const double m = mean();
    std::vector<double> sq;
    sq.reserve(values_.size());
    for (double x : values_) sq.push_back((x - m) * (x - m));
    return std::sqrt(kahan_sum(sq) / static_cast<double>(values_.size() - 1));
  }

  std::size_t count() const { return values_.size(); }

 private:
  static double kahan_sum(const std::vector<double>& xs) {
    double sum = 0.0, carry = 0.0;
    for (double x : xs) {
      const double y = x - carry;
      const double t = sum + y;
      carry = (t - sum) - y;
      sum = t;
    }
    return sum;
  }

  std::vector<double> values_;
};

struct Estimate {
  double mean = 0.0;
  double std = 0.0;
};

struct MonteCarloReport {
  Estimate wave_realism;
  Estimate particle_realism;
  Estimate visibility;
  Estimate detection_probability;
  std::size_t samples = 0;
};

/// Gates that follow the phase shifter in each circuit.
inline ComplexMatrix after_phase_unitary(CircuitKind kind, const Devices& devices = {}) {
  return kind == CircuitKind::qdce ? controlled_on_in(devices.superposition) : on_path(devices.superposition);
}

/// Detection pattern of an arbitrary in-interferometer state: p0 at the
/// nominal phase and the visibility of the pattern obtained by sweeping an
/// extra phase offset over `resolution` points.
struct PatternSummary {
  double detection_probability;
  double visibility;
};

inline PatternSummary pattern_from_inside(const ComplexMatrix& inside, CircuitKind kind,
                                          std::size_t resolution = kDefaultVisibilityResolution,
                                          const Devices& devices = {}) {
  const ComplexMatrix after = after_phase_unitary(kind, devices);
  auto p0 = [&](double offset) {
    const ComplexMatrix u = after * on_path(phase_shifter(offset));
    const ComplexMatrix out = u * inside * u.adjoint();
    return out(0, 0).real() + out(1, 1).real();
  };
  double lo = INFINITY, hi = -INFINITY;
  for (std::size_t k = 0; k < resolution; ++k) {
    const double p = p0(2.0 * kPi * static_cast<double>(k) / static_cast<double>(resolution));
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  return {p0(0.0), (hi - lo) / (hi + lo)};
}

/// Perturb -> reconstruct -> project -> quantifiers, `noise.samples` times.
/// Realism, visibility and p0 are clamped to [0, 1] before aggregation.
inline MonteCarloReport monte_carlo_realism(CircuitKind kind, const CircuitParams& params, const NoiseModel& noise,
                                            const Devices& devices = {}) {
  noise.validate();
  const StageState inside = stage_state(kind, params, Stage::inside, devices);
  const PauliCoefficients ideal = pauli_expectations(inside.state);
  const WaveParticleBasis basis = wave_particle_basis(params.theta);

  Accumulator wave, particle, vis, p0;
  for (std::size_t draw = 0; draw < noise.samples; ++draw) {
    const ReconstructedState raw = reconstruct(perturb(ideal, noise, draw), path_controller_factors());
    const DensityOperator estimate = project_physical(raw);
    wave.add(std::clamp(realism(estimate, basis.wave), 0.0, 1.0));
    particle.add(std::clamp(realism(estimate, basis.particle), 0.0, 1.0));
    const PatternSummary pattern = pattern_from_inside(estimate.matrix(), kind, kDefaultVisibilityResolution, devices);
    vis.add(std::clamp(pattern.visibility, 0.0, 1.0));
    p0.add(std::clamp(pattern.detection_probability, 0.0, 1.0));
  }
  MonteCarloReport report;
  report.wave_realism = {wave.mean(), wave.stddev()};
  report.particle_realism = {particle.mean(), particle.stddev()};
  report.visibility = {vis.mean(), vis.stddev()};
  report.detection_probability = {p0.mean(), p0.stddev()};
  report.samples = noise.samples;
  return report;
}

}  // namespace qreal

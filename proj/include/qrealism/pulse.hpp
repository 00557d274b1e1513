// Two-spin NMR pulse algebra: hard rf rotations on 1H or 13C and free
// evolution under the scalar coupling H_J = (J h / 4) sZ (x) sZ.
//
// The hydrogen spin carries the interferometer path and the carbon spin the
// controller, so the two-qubit ordering is (H, C) = (path, controller).
// Rotations are instantaneous unitaries exp(-i angle sigma/2) with a fixed
// wall-clock cost; the coupling is neglected while a pulse is on.
#pragma once

#include "qrealism/linalg.hpp"

#include <variant>
#include <vector>

namespace qreal::pulse {

enum class Nucleus { hydrogen, carbon };
enum class Axis { x, y };

inline constexpr double kCouplingHz = 215.1;
inline constexpr double kHydrogenPulseSeconds = 10.55e-6;
inline constexpr double kCarbonPulseSeconds = 9.45e-6;
inline constexpr double kProtocolBudgetSeconds = 14e-3;

struct Rotation {
  Nucleus target;
  Axis axis;
  double angle;  // radians
};

struct FreeEvolution {
  double duration;  // seconds
};

using PulseOp = std::variant<Rotation, FreeEvolution>;

struct PulseSequence {
  std::vector<PulseOp> ops;
  double coupling_hz = kCouplingHz;
};

struct SequenceBudget {
  double total_duration = 0.0;  // seconds
  std::size_t rotation_count = 0;
};

inline double rotation_duration(Nucleus n) {
  return n == Nucleus::hydrogen ? kHydrogenPulseSeconds : kCarbonPulseSeconds;
}

/// exp(-i angle sigma_axis / 2) on `target`, identity on the other spin.
inline ComplexMatrix rotation_unitary(Nucleus target, Axis axis, double angle) {
  if (!std::isfinite(angle)) throw std::invalid_argument("rotation angle must be finite");
  const ComplexMatrix sigma = axis == Axis::x ? pauli::x() : pauli::y();
  const ComplexMatrix local = std::cos(angle / 2) * pauli::i2() - cplx(0.0, std::sin(angle / 2)) * sigma;
  return target == Nucleus::hydrogen ? tensor_product(local, pauli::i2()) : tensor_product(pauli::i2(), local);
}

/// exp(-i 2 pi (J/4) t sZ (x) sZ); diagonal with sign pattern (+, -, -, +).
inline ComplexMatrix j_evolution_unitary(double duration, double coupling_hz = kCouplingHz) {
  if (!(duration >= 0.0)) throw std::invalid_argument("free evolution duration must be >= 0");
  const double phase = 2.0 * kPi * coupling_hz / 4.0 * duration;
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  u(0, 0) = std::polar(1.0, -phase);
  u(1, 1) = std::polar(1.0, phase);
  u(2, 2) = std::polar(1.0, phase);
  u(3, 3) = std::polar(1.0, -phase);
  return u;
}

inline ComplexMatrix op_unitary(const PulseOp& op, double coupling_hz) {
  if (const auto* r = std::get_if<Rotation>(&op)) return rotation_unitary(r->target, r->axis, r->angle);
  return j_evolution_unitary(std::get<FreeEvolution>(op).duration, coupling_hz);
}

struct CompiledSequence {
  ComplexMatrix unitary;
  SequenceBudget budget;
};

/// Ordered product of op unitaries, first op applied first. Throws on an
/// empty sequence or a non-positive coupling.
inline CompiledSequence compile(const PulseSequence& seq) {
  if (seq.ops.empty()) throw std::invalid_argument("cannot compile an empty pulse sequence");
  if (!(seq.coupling_hz > 0.0)) throw std::invalid_argument("coupling constant must be positive");
  CompiledSequence out{identity(4), {}};
  for (const auto& op : seq.ops) {
    out.unitary = op_unitary(op, seq.coupling_hz) * out.unitary;
    if (const auto* r = std::get_if<Rotation>(&op)) {
      out.budget.total_duration += rotation_duration(r->target);
      ++out.budget.rotation_count;
    } else {
      out.budget.total_duration += std::get<FreeEvolution>(op).duration;
    }
  }
  return out;
}

struct PhaseEquivalence {
  bool equal = false;
  double phase = 0.0;     // U ~ e^{i phase} V, in (-pi, pi]
  double residual = 0.0;  // max |U - e^{i phase} V|
};

/// Whether U = e^{i phi} V within `tol` (entrywise max norm). phi is read off
/// the largest-magnitude entry of V.
inline PhaseEquivalence equivalent_up_to_phase(const ComplexMatrix& u, const ComplexMatrix& v, double tol = 1e-9) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) return {false, 0.0, INFINITY};
  Eigen::Index r = 0, c = 0;
  v.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(v(r, c)) == 0.0) return {false, 0.0, INFINITY};
  const double phase = std::arg(u(r, c) / v(r, c));
  const double residual = max_abs(u - std::polar(1.0, phase) * v);
  return {residual <= tol, phase, residual};
}

}  // namespace qreal::pulse

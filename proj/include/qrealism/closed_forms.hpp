// Closed-form predictions for both interferometers, written directly from
// the state kets rather than from gate products. Used as oracles by the
// verification command and the test suites.
#pragma once

#include "qrealism/interferometer.hpp"

namespace qreal::closed_form {

inline ComplexVector ket_wave_plus(double theta) {
  ComplexVector v(2);
  v << std::polar(1.0, theta), 1.0;
  return v / std::sqrt(2.0);
}

/// e^{i theta/2}(cos(theta/2)|0> + i sin(theta/2)|1>).
inline ComplexVector ket_wave_output(double theta) {
  ComplexVector v(2);
  v << std::cos(theta / 2), cplx(0.0, std::sin(theta / 2));
  return std::polar(1.0, theta / 2) * v;
}

inline ComplexVector ket_controller(double alpha) {
  ComplexVector v(2);
  v << std::cos(alpha / 2), std::sin(alpha / 2);
  return v;
}

inline ComplexVector input(const CircuitParams& p) {
  return tensor_product(basis_ket(2, 0), ket_controller(p.alpha));
}

/// |W+>(cos|in> + sin|out>) and cos|W+>|in> + e^{i theta} sin|P+>|out>.
inline ComplexVector inside(CircuitKind kind, const CircuitParams& p) {
  const ComplexVector in = basis_ket(2, 0), out = basis_ket(2, 1);
  if (kind == CircuitKind::qdce) return tensor_product(ket_wave_plus(p.theta), ket_controller(p.alpha));
  return std::cos(p.alpha / 2) * tensor_product(ket_wave_plus(p.theta), in) +
         std::polar(1.0, p.theta) * std::sin(p.alpha / 2) * tensor_product(basis_ket(2, 0), out);
}

/// psi_a = cos|w_theta>|in> + sin|W+_theta>|out>;
/// psi_b = cos|w_theta>|in> + e^{i theta} sin|W+_0>|out>.
inline ComplexVector output(CircuitKind kind, const CircuitParams& p) {
  const ComplexVector in = basis_ket(2, 0), out = basis_ket(2, 1);
  const ComplexVector wave_branch = std::cos(p.alpha / 2) * tensor_product(ket_wave_output(p.theta), in);
  if (kind == CircuitKind::qdce)
    return wave_branch + std::sin(p.alpha / 2) * tensor_product(ket_wave_plus(p.theta), out);
  return wave_branch + std::polar(1.0, p.theta) * std::sin(p.alpha / 2) * tensor_product(ket_wave_plus(0.0), out);
}

inline double visibility(double alpha) { return std::pow(std::cos(alpha / 2), 2); }

inline double detection_probability(const CircuitParams& p) {
  return 0.5 * (1.0 + visibility(p.alpha) * std::cos(p.theta));
}

/// (R_W, R_P) inside each circuit.
inline std::pair<double, double> inside_realism(CircuitKind kind, double alpha) {
  if (kind == CircuitKind::qdce) return {1.0, 0.0};
  const double v = visibility(alpha);
  return {1.0 - binary_entropy(0.5 * (1.0 - v)), 1.0 - binary_entropy(0.5 * v)};
}

}  // namespace qreal::closed_form

// Von Neumann measurement model for the open delayed-choice interferometer:
// two detectors with internal states ready (|0>) and activated (|1>) couple to
// the path, and the accessible detector state is what remains after tracing
// out controller and path.
#pragma once

#include "qrealism/interferometer.hpp"

namespace qreal {

inline const std::string kDetector0 = "D0";
inline const std::string kDetector1 = "D1";

inline FactorList detector_factors() { return {{kController, 2}, {kPath, 2}, {kDetector0, 2}, {kDetector1, 2}}; }

struct DetectorModel {
  DensityOperator initial;    // before the detectors interact
  DensityOperator final;      // after the path-detector coupling
  DensityOperator detectors;  // final state reduced to (D0, D1)
};

/// Flips detector k exactly when the path is k.
inline ComplexMatrix detector_coupling() {
  const ComplexMatrix p0 = outer(basis_ket(2, 0));
  const ComplexMatrix p1 = outer(basis_ket(2, 1));
  const ComplexMatrix i2 = pauli::i2();
  const ComplexMatrix x = pauli::x();
  return tensor_product({i2, p0, x, i2}) + tensor_product({i2, p1, i2, x});
}

inline DetectorModel detector_model(double theta) {
  const ComplexVector out = basis_ket(2, 1);
  ComplexVector wave(2);
  wave << std::polar(1.0, theta), 1.0;
  wave /= std::sqrt(2.0);
  const ComplexVector ready = basis_ket(2, 0);

  const ComplexVector initial = tensor_product({out, wave, ready, ready});
  const ComplexVector final = detector_coupling() * initial;
  DensityOperator final_state = DensityOperator::pure(final, detector_factors());
  DensityOperator detectors = partial_trace(final_state, {kDetector0, kDetector1});
  return {DensityOperator::pure(initial, detector_factors()), std::move(final_state), std::move(detectors)};
}

/// Particle observable of detector k: P+ = activated, P- = ready.
inline ProjectiveObservable detector_particle_observable(const std::string& detector) {
  return ProjectiveObservable::from_basis(detector, {basis_ket(2, 1), basis_ket(2, 0)}, {"activated", "ready"});
}

/// Wave observable of detector k: (|activated> +- |ready>)/sqrt2.
inline ProjectiveObservable detector_wave_observable(const std::string& detector) {
  const ComplexVector a = basis_ket(2, 1);
  const ComplexVector r = basis_ket(2, 0);
  return ProjectiveObservable::from_basis(detector, {(a + r) / std::sqrt(2.0), (a - r) / std::sqrt(2.0)},
                                          {"W+", "W-"});
}

}  // namespace qreal

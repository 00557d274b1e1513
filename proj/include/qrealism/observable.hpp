// Projective (rank-1, complete) observables on one subsystem.
#pragma once

#include "qrealism/density.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qreal {

class ProjectiveObservable {
 public:
  /// Validates idempotence, rank one, mutual orthogonality and completeness
  /// (all within 1e-10).
  ProjectiveObservable(std::string subsystem, std::vector<ComplexMatrix> projectors,
                       std::vector<std::string> eigenlabels)
      : subsystem_(std::move(subsystem)),
        projectors_(std::move(projectors)),
        labels_(std::move(eigenlabels)) {
    validate();
  }

  /// Builds projectors |v_k><v_k| from an orthonormal basis.
  static ProjectiveObservable from_basis(std::string subsystem, const std::vector<ComplexVector>& basis,
                                         std::vector<std::string> eigenlabels) {
    std::vector<ComplexMatrix> projectors;
    projectors.reserve(basis.size());
    for (const auto& v : basis) projectors.push_back(outer(v));
    return ProjectiveObservable(std::move(subsystem), std::move(projectors), std::move(eigenlabels));
  }

  const std::string& subsystem() const noexcept { return subsystem_; }
  const std::vector<ComplexMatrix>& projectors() const noexcept { return projectors_; }
  const std::vector<std::string>& eigenlabels() const noexcept { return labels_; }
  std::size_t local_dim() const noexcept { return static_cast<std::size_t>(projectors_.front().rows()); }

 private:
  void validate() const {
    if (projectors_.empty()) throw std::invalid_argument("observable needs at least one projector");
    if (labels_.size() != projectors_.size())
      throw std::invalid_argument("observable: one eigenlabel per projector required");
    const auto d = projectors_.front().rows();
    if (static_cast<std::size_t>(d) != projectors_.size())
      throw std::invalid_argument("observable: rank-1 projectors must number the local dimension");
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (std::size_t a = 0; a < projectors_.size(); ++a) {
      const ComplexMatrix& p = projectors_[a];
      if (p.rows() != d || p.cols() != d) throw std::invalid_argument("observable: projector shape mismatch");
      if (max_abs(p * p - p) > kStructureTolerance || hermiticity_defect(p) > kStructureTolerance)
        throw std::invalid_argument("observable: projector is not an orthogonal projector");
      if (std::abs(p.trace().real() - 1.0) > kStructureTolerance)
        throw std::invalid_argument("observable: projector is not rank one");
      for (std::size_t b = a + 1; b < projectors_.size(); ++b)
        if (max_abs(p * projectors_[b]) > kStructureTolerance)
          throw std::invalid_argument("observable: projectors are not mutually orthogonal");
      sum += p;
    }
    if (max_abs(sum - ComplexMatrix::Identity(d, d)) > kStructureTolerance)
      throw std::invalid_argument("observable: projectors do not resolve the identity");
  }

  std::string subsystem_;
  std::vector<ComplexMatrix> projectors_;
  std::vector<std::string> labels_;
};

/// Computational-basis observable on `subsystem`.
inline ProjectiveObservable computational_observable(std::string subsystem, std::size_t dim = 2) {
  std::vector<ComplexVector> basis;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < dim; ++k) {
    basis.push_back(basis_ket(dim, k));
    labels.push_back(std::to_string(k));
  }
  return ProjectiveObservable::from_basis(std::move(subsystem), basis, std::move(labels));
}

/// Qubit observable whose "+" eigenvector has Bloch angles (polar, azimuth).
inline ProjectiveObservable bloch_observable(std::string subsystem, double polar, double azimuth) {
  ComplexVector up(2), down(2);
  up << std::cos(polar / 2), std::polar(1.0, azimuth) * std::sin(polar / 2);
  down << -std::polar(1.0, -azimuth) * std::sin(polar / 2), std::cos(polar / 2);
  return ProjectiveObservable::from_basis(std::move(subsystem), {up, down}, {"+", "-"});
}

/// True when |<a|b>|^2 = 1/d for every pair of eigenvectors (within tol).
inline bool mutually_unbiased(const ProjectiveObservable& a, const ProjectiveObservable& b, double tol = 1e-9) {
  if (a.local_dim() != b.local_dim()) return false;
  const double target = 1.0 / static_cast<double>(a.local_dim());
  for (const auto& pa : a.projectors())
    for (const auto& pb : b.projectors())
      if (std::abs((pa * pb).trace().real() - target) > tol) return false;
  return true;
}

}  // namespace qreal

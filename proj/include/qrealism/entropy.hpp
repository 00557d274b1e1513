// Entropic functionals in bits.
#pragma once

#include "qrealism/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qreal {

/// Eigenvalues at or below this contribute nothing to an entropy (covers the
/// [-1e-10, 1e-12] PSD slack as well).
inline constexpr double kEigenvalueFloor = 1e-12;

/// Support threshold on sigma's spectrum for the relative entropy.
inline constexpr double kSupportThreshold = 1e-10;

/// -lambda log2 lambda with the floor applied.
inline double entropy_term(double lambda) {
  return lambda <= kEigenvalueFloor ? 0.0 : -lambda * std::log2(lambda);
}

/// Shannon entropy of a spectrum. Works on unnormalized blocks too.
inline double spectrum_entropy(const RealVector& spectrum) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) s += entropy_term(spectrum(i));
  return s;
}

inline double von_neumann_entropy(const DensityOperator& rho) {
  const double s = spectrum_entropy(rho.eigenvalues());
  return std::clamp(s, 0.0, std::log2(static_cast<double>(rho.dim())));
}

/// h(u) = -u log2 u - (1-u) log2 (1-u). Throws std::domain_error outside [0, 1].
inline double binary_entropy(double u) {
  if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("binary_entropy: argument outside [0, 1]");
  if (u == 0.0 || u == 1.0) return 0.0;
  return -u * std::log2(u) - (1.0 - u) * std::log2(1.0 - u);
}

/// S(rho || sigma) = Tr[rho (log2 rho - log2 sigma)], evaluated in the two
/// eigenbases. Returns +infinity when rho has weight outside the support of
/// sigma (sigma eigenvalues <= 1e-10 carrying more than 1e-10 of rho).
inline double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("relative_entropy: dimension mismatch");
  const Eigensystem r = eigh(rho.matrix());
  const Eigensystem s = eigh(sigma.matrix());

  // overlap(i, j) = |<r_i|s_j>|^2
  const Eigen::MatrixXd overlap = (r.vectors.adjoint() * s.vectors).cwiseAbs2();

  double value = 0.0;
  for (Eigen::Index i = 0; i < r.values.size(); ++i) {
    const double p = r.values(i);
    if (p <= kEigenvalueFloor) continue;
    value += p * std::log2(p);
    for (Eigen::Index j = 0; j < s.values.size(); ++j) {
      const double weight = p * overlap(i, j);
      const double q = s.values(j);
      if (q <= kSupportThreshold) {
        if (weight > kSupportThreshold) return std::numeric_limits<double>::infinity();
        continue;
      }
      value -= weight * std::log2(q);
    }
  }
  return value;
}

/// Principal square root of a PSD matrix (negative rounding slack clipped).
inline ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  return hermitian_function(m, [](double x) { return std::sqrt(std::max(x, 0.0)); });
}

/// Uhlmann fidelity, computed as the squared trace norm of sqrt(rho) sqrt(sigma)
/// (avoids square roots of round-off eigenvalues). Clamped to [0, 1].
inline double fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  const ComplexMatrix product = psd_sqrt(rho.matrix()) * psd_sqrt(sigma.matrix());
  const double tr = Eigen::JacobiSVD<ComplexMatrix>(product).singularValues().sum();
  return std::clamp(tr * tr, 0.0, 1.0);
}

/// |<psi|phi>|^2 for normalized kets; the global-phase-blind state comparison.
inline double pure_fidelity(const ComplexVector& psi, const ComplexVector& phi) {
  return std::norm(psi.normalized().dot(phi.normalized()));
}

}  // namespace qreal

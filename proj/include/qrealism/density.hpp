// Density operators over a labeled tensor factorization.
#pragma once

#include "qrealism/linalg.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qreal {

/// One tensor factor: a subsystem name and its local dimension.
struct Factor {
  std::string label;
  std::size_t dim = 2;

  friend bool operator==(const Factor&, const Factor&) = default;
};

using FactorList = std::vector<Factor>;

inline FactorList qubits(std::initializer_list<std::string> labels) {
  FactorList out;
  for (const auto& l : labels) out.push_back({l, 2});
  return out;
}

inline std::size_t total_dimension(const FactorList& factors) {
  std::size_t d = 1;
  for (const auto& f : factors) d *= f.dim;
  return d;
}

/// Raised when a matrix fails the density-operator invariants.
class InvalidState : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Hermitian, unit-trace, positive semidefinite matrix with named factors.
///
/// Construction validates every invariant (Hermiticity and trace within 1e-10,
/// smallest eigenvalue >= -1e-10, product of local dimensions equal to the
/// matrix dimension, power-of-two total dimension). Instances are immutable.
class DensityOperator {
 public:
  DensityOperator(ComplexMatrix matrix, FactorList factors)
      : matrix_(std::move(matrix)), factors_(std::move(factors)) {
    validate();
  }

  /// |psi><psi| after normalizing psi.
  static DensityOperator pure(const ComplexVector& psi, FactorList factors) {
    const double n = psi.norm();
    if (!(n > 0.0)) throw InvalidState("pure: zero state vector");
    const ComplexVector unit = psi / n;
    return DensityOperator(outer(unit), std::move(factors));
  }

  static DensityOperator maximally_mixed(FactorList factors) {
    const std::size_t d = total_dimension(factors);
    return DensityOperator(identity(d) / static_cast<double>(d), std::move(factors));
  }

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const FactorList& factors() const noexcept { return factors_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }

  bool has_factor(std::string_view label) const {
    return std::any_of(factors_.begin(), factors_.end(),
                       [&](const Factor& f) { return f.label == label; });
  }

  std::size_t factor_index(std::string_view label) const {
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (factors_[i].label == label) return i;
    throw std::invalid_argument("unknown factor label '" + std::string(label) + "'");
  }

  std::size_t local_dim(std::string_view label) const { return factors_[factor_index(label)].dim; }

  double purity() const { return (matrix_ * matrix_).trace().real(); }

  bool is_pure(double tol = kStructureTolerance) const { return std::abs(1.0 - purity()) <= tol; }

  /// Spectrum in ascending order.
  RealVector eigenvalues() const { return eigh(matrix_).values; }

 private:
  void validate() const {
    if (factors_.empty()) throw InvalidState("density operator needs at least one factor");
    if (matrix_.rows() != matrix_.cols()) throw InvalidState("density matrix is not square");
    const std::size_t d = dim();
    if (d == 0 || d > kMaxDimension || (d & (d - 1)) != 0)
      throw InvalidState("density matrix dimension must be a power of two <= 16, got " +
                         std::to_string(d));
    if (total_dimension(factors_) != d)
      throw InvalidState("factor dimensions do not multiply to the matrix dimension");
    for (std::size_t i = 0; i < factors_.size(); ++i)
      for (std::size_t j = i + 1; j < factors_.size(); ++j)
        if (factors_[i].label == factors_[j].label)
          throw InvalidState("duplicate factor label '" + factors_[i].label + "'");
    if (!all_finite(matrix_)) throw InvalidState("density matrix has non-finite entries");
    if (hermiticity_defect(matrix_) > kStructureTolerance)
      throw InvalidState("density matrix is not Hermitian");
    const cplx tr = matrix_.trace();
    if (std::abs(tr.real() - 1.0) > kStructureTolerance || std::abs(tr.imag()) > kStructureTolerance)
      throw InvalidState("density matrix trace is not 1");
    if (eigh(matrix_).values(0) < -kStructureTolerance)
      throw InvalidState("density matrix has a negative eigenvalue");
  }

  ComplexMatrix matrix_;
  FactorList factors_;
};

namespace detail {

/// Mixed-radix digits of a flat index, first factor most significant.
inline void split_index(std::size_t index, const FactorList& factors, std::vector<std::size_t>& digits) {
  digits.resize(factors.size());
  for (std::size_t k = factors.size(); k-- > 0;) {
    digits[k] = index % factors[k].dim;
    index /= factors[k].dim;
  }
}

}  // namespace detail

/// Partial trace over a raw matrix; `keep[k]` marks retained factors.
inline ComplexMatrix partial_trace_matrix(const ComplexMatrix& m, const FactorList& factors,
                                          const std::vector<bool>& keep) {
  std::size_t kept_dim = 1;
  for (std::size_t k = 0; k < factors.size(); ++k)
    if (keep[k]) kept_dim *= factors[k].dim;

  const auto d = static_cast<std::size_t>(m.rows());
  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(kept_dim),
                                          static_cast<Eigen::Index>(kept_dim));
  std::vector<std::size_t> ri, ci;
  for (std::size_t r = 0; r < d; ++r) {
    detail::split_index(r, factors, ri);
    for (std::size_t c = 0; c < d; ++c) {
      detail::split_index(c, factors, ci);
      bool diagonal_in_traced = true;
      std::size_t kr = 0, kc = 0;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        if (keep[k]) {
          kr = kr * factors[k].dim + ri[k];
          kc = kc * factors[k].dim + ci[k];
        } else if (ri[k] != ci[k]) {
          diagonal_in_traced = false;
          break;
        }
      }
      if (diagonal_in_traced)
        out(static_cast<Eigen::Index>(kr), static_cast<Eigen::Index>(kc)) +=
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

/// Reduced state over the factors named in `keep`. Retained factors stay in the
/// order they have in `rho`. Unknown or empty label sets throw
/// std::invalid_argument.
inline DensityOperator partial_trace(const DensityOperator& rho, const std::vector<std::string>& keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: nothing to keep");
  std::vector<bool> mask(rho.factors().size(), false);
  for (const auto& label : keep) mask[rho.factor_index(label)] = true;

  FactorList kept;
  for (std::size_t k = 0; k < mask.size(); ++k)
    if (mask[k]) kept.push_back(rho.factors()[k]);
  ComplexMatrix reduced = partial_trace_matrix(rho.matrix(), rho.factors(), mask);
  // Re-symmetrize so rounding never breaks the Hermiticity invariant.
  reduced = 0.5 * (reduced + reduced.adjoint()).eval();
  return DensityOperator(std::move(reduced), std::move(kept));
}

/// Labels of every factor except `exclude`.
inline std::vector<std::string> complement_labels(const DensityOperator& rho,
                                                  const std::vector<std::string>& exclude) {
  std::vector<std::string> out;
  for (const auto& f : rho.factors())
    if (std::find(exclude.begin(), exclude.end(), f.label) == exclude.end()) out.push_back(f.label);
  return out;
}

/// Embeds a single-factor operator acting on `label` into the full space of `factors`.
inline ComplexMatrix embed_local(const ComplexMatrix& local, const FactorList& factors,
                                 std::string_view label) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  bool found = false;
  for (const auto& f : factors) {
    if (f.label == label) {
      if (static_cast<std::size_t>(local.rows()) != f.dim)
        throw std::invalid_argument("embed_local: operator dimension does not match factor '" +
                                    f.label + "'");
      out = tensor_product(out, local);
      found = true;
    } else {
      out = tensor_product(out, identity(f.dim));
    }
  }
  if (!found) throw std::invalid_argument("unknown factor label '" + std::string(label) + "'");
  return out;
}

/// rho_a (x) rho_b with concatenated factor lists.
inline DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b) {
  FactorList factors = a.factors();
  factors.insert(factors.end(), b.factors().begin(), b.factors().end());
  return DensityOperator(tensor_product(a.matrix(), b.matrix()), std::move(factors));
}

/// U rho U^dagger.
inline DensityOperator evolve(const DensityOperator& rho, const ComplexMatrix& u) {
  ComplexMatrix m = u * rho.matrix() * u.adjoint();
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityOperator(std::move(m), rho.factors());
}

}  // namespace qreal

// Realism and irrealism of a context {A, rho}, plus mutual information.
//
// A context pairs a state with a projective observable on one of its factors.
// The dephasing map Phi_A(rho) = sum_a (A_a (x) 1) rho (A_a (x) 1) defines the
// A-reality state; irrealism is the entropy it creates and realism is its
// complement to log2 d_A.
#pragma once

#include "qrealism/entropy.hpp"
#include "qrealism/observable.hpp"

#include <utility>

namespace qreal {

class RealismContext {
 public:
  RealismContext(DensityOperator state, ProjectiveObservable observable)
      : state_(std::move(state)), observable_(std::move(observable)) {
    const std::size_t d = state_.local_dim(observable_.subsystem());
    if (d != observable_.local_dim())
      throw std::invalid_argument("observable dimension does not match subsystem '" +
                                  observable_.subsystem() + "'");
  }

  const DensityOperator& state() const noexcept { return state_; }
  const ProjectiveObservable& observable() const noexcept { return observable_; }
  double log_local_dim() const { return std::log2(static_cast<double>(observable_.local_dim())); }

 private:
  DensityOperator state_;
  ProjectiveObservable observable_;
};

/// Phi_A on a raw matrix with the given factorization.
inline ComplexMatrix dephase_matrix(const ComplexMatrix& m, const FactorList& factors,
                                    const ProjectiveObservable& obs) {
  ComplexMatrix out = ComplexMatrix::Zero(m.rows(), m.cols());
  for (const auto& p : obs.projectors()) {
    const ComplexMatrix e = embed_local(p, factors, obs.subsystem());
    out += e * m * e;
  }
  return 0.5 * (out + out.adjoint());
}

inline DensityOperator dephase(const RealismContext& ctx) {
  return DensityOperator(dephase_matrix(ctx.state().matrix(), ctx.state().factors(), ctx.observable()),
                         ctx.state().factors());
}

/// I_A(rho) = S(Phi_A(rho)) - S(rho), in bits.
inline double irrealism(const RealismContext& ctx) {
  return von_neumann_entropy(dephase(ctx)) - von_neumann_entropy(ctx.state());
}

/// R_A(rho) = log2 d_A - I_A(rho), in bits.
inline double realism(const RealismContext& ctx) { return ctx.log_local_dim() - irrealism(ctx); }

inline DensityOperator dephase(const DensityOperator& rho, const ProjectiveObservable& obs) {
  return dephase(RealismContext(rho, obs));
}
inline double irrealism(const DensityOperator& rho, const ProjectiveObservable& obs) {
  return irrealism(RealismContext(rho, obs));
}
inline double realism(const DensityOperator& rho, const ProjectiveObservable& obs) {
  return realism(RealismContext(rho, obs));
}

/// Two disjoint label sets that together cover every factor.
struct Bipartition {
  std::vector<std::string> first;
  std::vector<std::string> second;
};

inline void check_bipartition(const DensityOperator& rho, const Bipartition& parts) {
  std::vector<int> seen(rho.factors().size(), 0);
  for (const auto& l : parts.first) ++seen[rho.factor_index(l)];
  for (const auto& l : parts.second) ++seen[rho.factor_index(l)];
  for (int s : seen)
    if (s != 1) throw std::invalid_argument("bipartition must cover every factor exactly once");
  if (parts.first.empty() || parts.second.empty())
    throw std::invalid_argument("bipartition sides must be nonempty");
}

/// I_{A:B} = S(rho_A) + S(rho_B) - S(rho).
inline double mutual_information(const DensityOperator& rho, const Bipartition& parts) {
  check_bipartition(rho, parts);
  return von_neumann_entropy(partial_trace(rho, parts.first)) +
         von_neumann_entropy(partial_trace(rho, parts.second)) - von_neumann_entropy(rho);
}

/// Mutual information between `label` and the rest of the system.
inline double mutual_information(const DensityOperator& rho, const std::string& label) {
  return mutual_information(rho, Bipartition{{label}, complement_labels(rho, {label})});
}

}  // namespace qreal

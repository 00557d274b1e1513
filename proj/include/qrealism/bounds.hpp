// Complementarity bounds, the non-separability inequality and correlation
// summaries built on the realism quantifiers.
#pragma once

#include "qrealism/discord.hpp"

#include <optional>

namespace qreal {

struct CorrelationSummary {
  double mutual_information = 0.0;
  double discord = 0.0;
  double conditional_information = 0.0;       // log2 d_A - S(rho) + S(rho_B)
  std::optional<double> entanglement_entropy;  // pure states only
  double purity_information = 0.0;             // log2 d_A - S(rho_A)
};

/// Correlations of subsystem `label` with the rest of `rho`.
inline CorrelationSummary correlation_summary(const DensityOperator& rho, const std::string& label,
                                              const DiscordOptions& options = {}) {
  const auto rest = complement_labels(rho, {label});
  const double s = von_neumann_entropy(rho);
  const double s_a = von_neumann_entropy(partial_trace(rho, {label}));
  const double s_b = von_neumann_entropy(partial_trace(rho, rest));
  const double log_d = std::log2(static_cast<double>(rho.local_dim(label)));

  CorrelationSummary out;
  out.mutual_information = s_a + s_b - s;
  out.discord = discord(rho, label, options).value;
  out.conditional_information = log_d - (s - s_b);
  out.purity_information = log_d - s_a;
  if (rho.is_pure()) out.entanglement_entropy = s_a;
  return out;
}

struct NonseparabilityCheck {
  double gap = 0.0;      // I_A(rho) - I_A(rho_A)
  double discord = 0.0;  // D_A(rho)
  double margin() const { return gap - discord; }
};

/// Compares the irrealism excess of the whole over the part with the discord
/// of the observable's subsystem.
inline NonseparabilityCheck nonseparability_gap(const DensityOperator& rho, const ProjectiveObservable& obs,
                                                const DiscordOptions& options = {}) {
  const DensityOperator part = partial_trace(rho, {obs.subsystem()});
  NonseparabilityCheck out;
  out.gap = irrealism(rho, obs) - irrealism(part, obs);
  out.discord = discord(rho, obs.subsystem(), options).value;
  return out;
}

struct IncompatibilityBound {
  double lhs = 0.0;              // R_A + R_A'
  double rhs = 0.0;              // log2 d_A + S(rho_A) - I_{A:B}
  double rhs_conditional = 0.0;  // 2 log2 d_A - I_{A|B}
  double margin() const { return rhs - lhs; }
};

/// R_A + R_A' against its correlation-dependent ceiling, for a mutually
/// unbiased pair on the same subsystem. Throws std::invalid_argument otherwise.
inline IncompatibilityBound bound_incompatible(const DensityOperator& rho, const ProjectiveObservable& a,
                                               const ProjectiveObservable& a_prime) {
  if (a.subsystem() != a_prime.subsystem())
    throw std::invalid_argument("bound_incompatible: observables act on different subsystems");
  if (!mutually_unbiased(a, a_prime))
    throw std::invalid_argument("bound_incompatible: observables are not mutually unbiased");

  const std::string& label = a.subsystem();
  const double log_d = std::log2(static_cast<double>(a.local_dim()));
  const double s = von_neumann_entropy(rho);
  const double s_a = von_neumann_entropy(partial_trace(rho, {label}));
  const auto rest = complement_labels(rho, {label});
  const double s_b = rest.empty() ? 0.0 : von_neumann_entropy(partial_trace(rho, rest));
  const double mutual = s_a + s_b - s;
  const double conditional_information = log_d - (s - s_b);

  IncompatibilityBound out;
  out.lhs = realism(rho, a) + realism(rho, a_prime);
  out.rhs = log_d + s_a - mutual;
  out.rhs_conditional = 2.0 * log_d - conditional_information;
  return out;
}

/// Ceiling on R_W + R_P inside the reality-controlled interferometer at
/// visibility V: 1 - h((1 + lambda_V)/2), lambda_V = sqrt(2V^2 - 2V + 1).
inline double qcre_bound(double visibility) {
  if (!(visibility >= 0.0 && visibility <= 1.0)) throw std::domain_error("qcre_bound: visibility outside [0, 1]");
  const double lambda = std::sqrt(2.0 * visibility * visibility - 2.0 * visibility + 1.0);
  return 1.0 - binary_entropy(std::min(1.0, 0.5 * (1.0 + lambda)));
}

}  // namespace qreal

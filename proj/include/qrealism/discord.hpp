// Quantum discord of a qubit subsystem under projective measurements.
//
// D_A(rho) = min over qubit bases n of [I_{A:B}(rho) - I_{A:B}(Phi_n(rho))].
// Only the terms depending on n are re-evaluated inside the optimizer:
//   I(rho) - I(Phi_n rho) = S(rho_A) - S(rho) + S(Phi_n rho) - H(p_n)
// where Phi_n rho = sum_a |a><a| (x) M_a, M_a = <a|rho|a>_A, so the spectrum of
// Phi_n rho is the union of the spectra of the blocks M_a.
#pragma once

#include "qrealism/realism.hpp"

#include <array>
#include <functional>
#include <limits>

namespace qreal {

/// Raised for inputs outside what an operation implements (e.g. a qudit
/// measured subsystem in the discord optimizer).
class Unsupported : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct DiscordOptions {
  int polar_points = 64;
  int azimuth_points = 128;
  double objective_tolerance = 1e-7;
  int max_refinement_iterations = 400;
};

struct DiscordResult {
  double value = 0.0;
  double polar = 0.0;    // Bloch angles of the minimizing "+" direction
  double azimuth = 0.0;
  ProjectiveObservable basis;
};

namespace detail {

/// Matrix of `m` with factor `index` permuted to the front.
inline ComplexMatrix move_factor_first(const ComplexMatrix& m, const FactorList& factors, std::size_t index) {
  const auto d = static_cast<std::size_t>(m.rows());
  std::vector<std::size_t> perm(d);
  std::vector<std::size_t> digits;
  for (std::size_t i = 0; i < d; ++i) {
    split_index(i, factors, digits);
    std::size_t j = digits[index];
    for (std::size_t k = 0; k < factors.size(); ++k)
      if (k != index) j = j * factors[k].dim + digits[k];
    perm[i] = j;
  }
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      out(static_cast<Eigen::Index>(perm[r]), static_cast<Eigen::Index>(perm[c])) =
          m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  return out;
}

/// Measurement-dependent part of the mutual-information drop for a qubit
/// placed first in `blocks` (B_ij = <i|rho|j>_A).
class DiscordObjective {
 public:
  DiscordObjective(const DensityOperator& rho, const std::string& measured) {
    const std::size_t index = rho.factor_index(measured);
    const ComplexMatrix m = move_factor_first(rho.matrix(), rho.factors(), index);
    const Eigen::Index db = m.rows() / 2;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) blocks_[2 * i + j] = m.block(i * db, j * db, db, db);
    constant_ = von_neumann_entropy(partial_trace(rho, {measured})) - von_neumann_entropy(rho);
  }

  double operator()(double polar, double azimuth) const {
    const cplx up0(std::cos(polar / 2), 0.0);
    const cplx up1 = std::polar(std::sin(polar / 2), azimuth);
    // Orthogonal partner: (-conj(up1), conj(up0)).
    const std::array<std::array<cplx, 2>, 2> kets{{{up0, up1}, {-std::conj(up1), std::conj(up0)}}};
    double value = constant_;
    std::array<double, 2> weights{};
    for (int a = 0; a < 2; ++a) {
      const auto& n = kets[a];
      ComplexMatrix block = std::norm(n[0]) * blocks_[0] + std::conj(n[0]) * n[1] * blocks_[1] +
                            std::conj(n[1]) * n[0] * blocks_[2] + std::norm(n[1]) * blocks_[3];
      weights[a] = block.trace().real();
      value += spectrum_entropy(hermitian_eigenvalues(block));
    }
    const double p = std::clamp(weights[0] / (weights[0] + weights[1]), 0.0, 1.0);
    return value - binary_entropy(p);
  }

 private:
  std::array<ComplexMatrix, 4> blocks_;
  double constant_ = 0.0;
};

/// Nelder-Mead on two variables; stops when the simplex values agree within
/// `tolerance` (or after `max_iterations`).
inline std::array<double, 3> nelder_mead_2d(const std::function<double(double, double)>& f,
                                            std::array<double, 2> start, std::array<double, 2> step,
                                            double tolerance, int max_iterations) {
  struct Vertex {
    double x, y, value;
  };
  std::array<Vertex, 3> s{{{start[0], start[1], 0.0},
                           {start[0] + step[0], start[1], 0.0},
                           {start[0], start[1] + step[1], 0.0}}};
  for (auto& v : s) v.value = f(v.x, v.y);

  auto eval = [&](double x, double y) { return Vertex{x, y, f(x, y)}; };
  for (int it = 0; it < max_iterations; ++it) {
    std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.value < b.value; });
    const double size = std::max(std::abs(s[1].x - s[0].x) + std::abs(s[1].y - s[0].y),
                                 std::abs(s[2].x - s[0].x) + std::abs(s[2].y - s[0].y));
    if (s[2].value - s[0].value <= tolerance && size < 1e-6) break;
    const double cx = 0.5 * (s[0].x + s[1].x);
    const double cy = 0.5 * (s[0].y + s[1].y);
    const Vertex reflected = eval(cx + (cx - s[2].x), cy + (cy - s[2].y));
    if (reflected.value < s[0].value) {
      const Vertex expanded = eval(cx + 2.0 * (cx - s[2].x), cy + 2.0 * (cy - s[2].y));
      s[2] = expanded.value < reflected.value ? expanded : reflected;
    } else if (reflected.value < s[1].value) {
      s[2] = reflected;
    } else {
      const bool outside = reflected.value < s[2].value;
      const Vertex contracted = outside ? eval(cx + 0.5 * (reflected.x - cx), cy + 0.5 * (reflected.y - cy))
                                        : eval(cx + 0.5 * (s[2].x - cx), cy + 0.5 * (s[2].y - cy));
      if (contracted.value < std::min(reflected.value, s[2].value)) {
        s[2] = contracted;
      } else {
        for (int k = 1; k < 3; ++k) s[k] = eval(s[0].x + 0.5 * (s[k].x - s[0].x), s[0].y + 0.5 * (s[k].y - s[0].y));
      }
    }
  }
  const auto best = *std::min_element(s.begin(), s.end(),
                                      [](const Vertex& a, const Vertex& b) { return a.value < b.value; });
  return {best.x, best.y, best.value};
}

}  // namespace detail

/// Discord with the qubit `measured` as the probed subsystem. Grid search over
/// Bloch angles followed by a Nelder-Mead polish from the best grid point.
/// Throws Unsupported if `measured` is not a qubit.
inline DiscordResult discord(const DensityOperator& rho, const std::string& measured,
                             const DiscordOptions& options = {}) {
  if (rho.local_dim(measured) != 2) throw Unsupported("discord: measured subsystem must be a qubit");
  if (rho.factors().size() < 2) throw std::invalid_argument("discord: state has no complementary subsystem");

  const detail::DiscordObjective objective(rho, measured);
  double best = std::numeric_limits<double>::infinity();
  double best_polar = 0.0, best_azimuth = 0.0;
  const double polar_step = kPi / (options.polar_points - 1);
  const double azimuth_step = 2.0 * kPi / options.azimuth_points;
  for (int i = 0; i < options.polar_points; ++i) {
    const double polar = i * polar_step;
    for (int j = 0; j < options.azimuth_points; ++j) {
      const double azimuth = j * azimuth_step;
      const double v = objective(polar, azimuth);
      if (v < best) {
        best = v;
        best_polar = polar;
        best_azimuth = azimuth;
      }
    }
  }

  const auto refined = detail::nelder_mead_2d(
      [&](double p, double a) { return objective(p, a); }, {best_polar, best_azimuth},
      {0.5 * polar_step, 0.5 * azimuth_step}, options.objective_tolerance,
      options.max_refinement_iterations);
  if (refined[2] < best) {
    best = refined[2];
    best_polar = refined[0];
    best_azimuth = refined[1];
  }
  return {best, best_polar, best_azimuth, bloch_observable(measured, best_polar, best_azimuth)};
}

/// Mutual-information drop for one fixed measurement on `obs.subsystem()`.
inline double measurement_induced_drop(const DensityOperator& rho, const ProjectiveObservable& obs) {
  return mutual_information(rho, obs.subsystem()) - mutual_information(dephase(rho, obs), obs.subsystem());
}

}  // namespace qreal

// Plot-ready CSV tables. Numbers are written with std::to_chars at 12
// significant digits, so output is locale independent and byte stable.
#pragma once

#include "qrealism/tomography.hpp"

#include <charconv>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qreal {

inline std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

/// n points spanning [0, pi] inclusive.
inline std::vector<double> alpha_grid(std::size_t n) {
  if (n < 2) return {0.0};
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = kPi * static_cast<double>(i) / static_cast<double>(n - 1);
  g.back() = kPi;
  return g;
}

/// n points spanning [0, 2 pi) with step 2 pi / n.
inline std::vector<double> theta_grid(std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t j = 0; j < n; ++j) g[j] = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
  return g;
}

namespace detail {

inline void write_row(std::ostream& out, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const auto& c : cells) {
    if (!first) out << ',';
    out << c;
    first = false;
  }
  out << '\n';
}

}  // namespace detail

struct Figure2Options {
  std::size_t points = 65;
  double theta = 0.0;
  std::optional<NoiseModel> noise;
};

/// Wave and particle realism against visibility for both circuits.
inline void write_figure2(std::ostream& out, const Figure2Options& opts) {
  using detail::write_row;
  const bool noisy = opts.noise.has_value();
  if (noisy)
    write_row(out, {"kind", "alpha", "V", "R_W", "R_P", "V_std", "R_W_std", "R_P_std"});
  else
    write_row(out, {"kind", "alpha", "V", "R_W", "R_P"});

  RealismOptions ropts;
  ropts.with_discord = false;
  for (CircuitKind kind : {CircuitKind::qdce, CircuitKind::qcre}) {
    for (double alpha : alpha_grid(opts.points)) {
      const CircuitParams params{alpha, opts.theta};
      const std::string k(to_string(kind));
      if (noisy) {
        const MonteCarloReport mc = monte_carlo_realism(kind, params, *opts.noise);
        write_row(out, {k, format_number(alpha), format_number(mc.visibility.mean),
                        format_number(mc.wave_realism.mean), format_number(mc.particle_realism.mean),
                        format_number(mc.visibility.std), format_number(mc.wave_realism.std),
                        format_number(mc.particle_realism.std)});
      } else {
        const RealismReport r = realism_inside(kind, params, ropts);
        write_row(out, {k, format_number(alpha), format_number(r.visibility), format_number(r.wave_realism),
                        format_number(r.particle_realism)});
      }
    }
  }
}

struct Figure3Options {
  CircuitKind kind = CircuitKind::qcre;
  std::size_t alpha_points = 33;
  std::size_t theta_points = 33;
  std::size_t visibility_resolution = kDefaultVisibilityResolution;
};

/// Detection-probability surface p0(alpha, theta) followed by the visibility
/// table V(alpha). Columns: section,alpha,theta,value (theta empty for V rows).
inline void write_figure3(std::ostream& out, const Figure3Options& opts) {
  using detail::write_row;
  write_row(out, {"section", "alpha", "theta", "value"});
  const auto alphas = alpha_grid(opts.alpha_points);
  for (double alpha : alphas)
    for (double theta : theta_grid(opts.theta_points))
      write_row(out, {"p0", format_number(alpha), format_number(theta),
                      format_number(detection_probability(opts.kind, {alpha, theta}))});
  for (double alpha : alphas)
    write_row(out, {"visibility", format_number(alpha), "",
                    format_number(visibility(opts.kind, alpha, opts.visibility_resolution))});
}

/// Monte Carlo report rows: alpha,theta,quantity,mean,std,samples,seed.
inline void write_monte_carlo_rows(std::ostream& out, const CircuitParams& params, const MonteCarloReport& report,
                                   const NoiseModel& noise) {
  const std::pair<const char*, const Estimate*> rows[] = {{"R_W", &report.wave_realism},
                                                          {"R_P", &report.particle_realism},
                                                          {"V", &report.visibility},
                                                          {"p0", &report.detection_probability}};
  for (const auto& [name, est] : rows)
    detail::write_row(out, {format_number(params.alpha), format_number(params.theta), name, format_number(est->mean),
                            format_number(est->std), std::to_string(report.samples), std::to_string(noise.seed)});
}

inline void write_monte_carlo_header(std::ostream& out) {
  detail::write_row(out, {"alpha", "theta", "quantity", "mean", "std", "samples", "seed"});
}

struct SweepGrid {
  CircuitKind kind = CircuitKind::qcre;
  std::vector<double> alphas;
  std::vector<double> thetas;
  std::optional<NoiseModel> noise;

  void validate() const {
    if (alphas.empty() || thetas.empty()) throw std::invalid_argument("sweep grids must be nonempty");
    for (double a : alphas)
      for (double t : thetas) CircuitParams{a, t}.validate();
  }
};

/// Full quantifier table over an (alpha, theta) grid; with noise, the Monte
/// Carlo report format instead.
inline void write_sweep(std::ostream& out, const SweepGrid& grid) {
  using detail::write_row;
  grid.validate();
  if (grid.noise) {
    write_monte_carlo_header(out);
    for (double alpha : grid.alphas)
      for (double theta : grid.thetas) {
        const CircuitParams params{alpha, theta};
        write_monte_carlo_rows(out, params, monte_carlo_realism(grid.kind, params, *grid.noise), *grid.noise);
      }
    return;
  }
  write_row(out, {"alpha", "theta", "R_W", "R_P", "V", "p0", "bound_rhs", "discord", "mutual_information"});
  for (double alpha : grid.alphas)
    for (double theta : grid.thetas) {
      const CircuitParams params{alpha, theta};
      const RealismReport r = realism_inside(grid.kind, params);
      write_row(out, {format_number(alpha), format_number(theta), format_number(r.wave_realism),
                      format_number(r.particle_realism), format_number(r.visibility),
                      format_number(detection_probability(grid.kind, params)), format_number(r.bound_rhs),
                      format_number(r.discord), format_number(r.mutual_information)});
    }
}

}  // namespace qreal

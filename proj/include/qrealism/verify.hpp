// Self-verification suite behind `qrealism verify`: closed-form oracles,
// bounds on random states, the detector model and pulse equivalence. Every
// check reports a margin that is >= 0 exactly when it passes.
#pragma once

#include "qrealism/closed_forms.hpp"
#include "qrealism/detector.hpp"
#include "qrealism/figures.hpp"
#include "qrealism/pulse_io.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qreal {

struct CheckResult {
  std::string name;
  double margin = 0.0;
  std::string detail;
  bool passed() const { return margin >= 0.0; }
};

struct VerifyOptions {
  Devices devices{};
  std::string pulse_dir;
  std::size_t random_states = 1000;
  std::uint64_t seed = 2021;
};

namespace detail {

inline CheckResult guarded(const std::string& name, const std::function<CheckResult()>& body) {
  try {
    CheckResult r = body();
    r.name = name;
    return r;
  } catch (const std::exception& e) {
    return {name, -INFINITY, std::string("exception: ") + e.what()};
  }
}

}  // namespace detail

inline std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  using detail::guarded;
  std::vector<CheckResult> out;
  const auto kinds = {CircuitKind::qdce, CircuitKind::qcre};
  const auto alphas17 = alpha_grid(17);
  const auto thetas17 = theta_grid(17);

  out.push_back(guarded("stage states match closed-form kets", [&] {
    double worst = 1.0;
    for (auto kind : kinds)
      for (double a : alphas17)
        for (double t : thetas17) {
          const CircuitParams p{a, t};
          worst = std::min({worst,
                            pure_fidelity(stage_ket(kind, p, Stage::input, opts.devices), closed_form::input(p)),
                            pure_fidelity(stage_ket(kind, p, Stage::inside, opts.devices), closed_form::inside(kind, p)),
                            pure_fidelity(stage_ket(kind, p, Stage::output, opts.devices), closed_form::output(kind, p))});
        }
    return CheckResult{"", worst - (1.0 - 1e-10), "min fidelity " + format_number(worst)};
  }));

  out.push_back(guarded("detection pattern identical for both circuits", [&] {
    double diff = 0.0, formula = 0.0;
    for (double a : alpha_grid(33))
      for (double t : theta_grid(33)) {
        const double pa = detection_probability(CircuitKind::qdce, {a, t}, opts.devices);
        const double pb = detection_probability(CircuitKind::qcre, {a, t}, opts.devices);
        diff = std::max(diff, std::abs(pa - pb));
        formula = std::max({formula, std::abs(pa - closed_form::detection_probability({a, t})),
                            std::abs(pb - closed_form::detection_probability({a, t}))});
      }
    return CheckResult{"", 1e-12 - std::max(diff, formula),
                       "max |p0a - p0b| " + format_number(diff) + ", max formula error " + format_number(formula)};
  }));

  out.push_back(guarded("visibility equals cos^2(alpha/2)", [&] {
    double err = 0.0;
    for (auto kind : kinds)
      for (double a : alphas17)
        err = std::max(err, std::abs(visibility(kind, a, kDefaultVisibilityResolution, opts.devices) -
                                     closed_form::visibility(a)));
    return CheckResult{"", 1e-6 - err, "max error " + format_number(err)};
  }));

  out.push_back(guarded("inside realism matches closed forms", [&] {
    double err = 0.0;
    RealismOptions ro;
    ro.with_discord = false;
    ro.devices = opts.devices;
    for (auto kind : kinds)
      for (double a : alpha_grid(kind == CircuitKind::qdce ? 17 : 65))
        for (double t : kind == CircuitKind::qdce ? thetas17 : std::vector<double>{0.0, 1.0}) {
          const RealismReport r = realism_inside(kind, {a, t}, ro);
          const auto [w, p] = closed_form::inside_realism(kind, a);
          err = std::max({err, std::abs(r.wave_realism - w), std::abs(r.particle_realism - p)});
        }
    return CheckResult{"", 1e-9 - err, "max error " + format_number(err)};
  }));

  out.push_back(guarded("reality-controlled complementarity bound", [&] {
    double gap = INFINITY, rhs_err = 0.0;
    RealismOptions ro;
    ro.with_discord = false;
    ro.devices = opts.devices;
    for (double a : alpha_grid(65)) {
      const RealismReport r = realism_inside(CircuitKind::qcre, {a, 0.0}, ro);
      const double bound = qcre_bound(closed_form::visibility(a));
      gap = std::min(gap, bound - (r.wave_realism + r.particle_realism));
      rhs_err = std::max(rhs_err, std::abs(bound - r.bound_rhs));
    }
    return CheckResult{"", std::min(gap + 1e-9, 1e-9 - rhs_err),
                       "min slack " + format_number(gap) + ", state-bound vs closed form " + format_number(rhs_err)};
  }));

  Rng rng(opts.seed);
  std::vector<DensityOperator> states;
  std::vector<double> thetas;
  for (std::size_t i = 0; i < opts.random_states; ++i) {
    states.push_back(random_density(rng, qubits({kPath, kController})));
    thetas.push_back(2.0 * kPi * rng.uniform());
  }

  out.push_back(guarded("incompatibility bound on random states", [&] {
    double slack = INFINITY, forms = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) {
      const auto wp = wave_particle_basis(thetas[i]);
      const IncompatibilityBound b = bound_incompatible(states[i], wp.wave, wp.particle);
      slack = std::min(slack, b.margin());
      forms = std::max(forms, std::abs(b.rhs - b.rhs_conditional));
    }
    return CheckResult{"", std::min(slack + 1e-6, 1e-9 - forms),
                       std::to_string(states.size()) + " states, min slack " + format_number(slack) +
                           ", max form mismatch " + format_number(forms)};
  }));

  out.push_back(guarded("bound saturates at maximally mixed marginal", [&] {
    double err = 0.0;
    Rng local(opts.seed + 1);
    for (int i = 0; i < 20; ++i) {
      const DensityOperator rho = tensor_product(DensityOperator::maximally_mixed({{kPath, 2}}),
                                                 random_density(local, {{kController, 2}}));
      const auto wp = wave_particle_basis(2.0 * kPi * local.uniform());
      const IncompatibilityBound b = bound_incompatible(rho, wp.wave, wp.particle);
      err = std::max({err, std::abs(b.lhs - 2.0), std::abs(b.rhs - 2.0)});
    }
    return CheckResult{"", 1e-9 - err, "max |side - 2| " + format_number(err)};
  }));

  out.push_back(guarded("non-separability inequality on random states", [&] {
    double slack = INFINITY;
    for (std::size_t i = 0; i < states.size(); ++i) {
      const auto obs = i % 2 == 0 ? wave_observable(thetas[i]) : particle_observable();
      slack = std::min(slack, nonseparability_gap(states[i], obs).margin());
    }
    return CheckResult{"", slack + 1e-6, "min gap - discord " + format_number(slack)};
  }));

  out.push_back(guarded("Bell-state discord", [&] {
    ComplexVector bell = ComplexVector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    const DensityOperator rho = DensityOperator::pure(bell, qubits({"A", "B"}));
    const double d = discord(rho, "A").value;
    return CheckResult{"", 1e-6 - std::abs(d - 1.0), "discord " + format_number(d)};
  }));

  out.push_back(guarded("detector model realism", [&] {
    double err = 0.0;
    for (double t : {0.0, 1.0, kPi}) {
      const DetectorModel m = detector_model(t);
      const auto wp = wave_particle_basis(t);
      err = std::max({err, std::abs(realism(m.initial, wp.particle)), std::abs(realism(m.initial, wp.wave) - 1.0)});
      for (const auto& k : {kDetector0, kDetector1}) {
        err = std::max({err, std::abs(realism(m.detectors, detector_particle_observable(k)) - 1.0),
                        std::abs(realism(m.detectors, detector_wave_observable(k)))});
      }
    }
    return CheckResult{"", 1e-9 - err, "max error " + format_number(err)};
  }));

  out.push_back(guarded("pulse sequences reproduce circuit unitaries", [&] {
    double residual = 0.0, budget = 0.0, out_fid = 1.0;
    for (auto kind : kinds) {
      const auto tmpl = pulse::load_sequence(opts.pulse_dir + "/" + std::string(to_string(kind)) + ".seq");
      for (double a : {0.0, kPi / 2, kPi})
        for (double t : {0.0, 2.0 * kPi / 3, 4.0 * kPi / 3}) {
          const auto compiled = pulse::compile(pulse::bind(tmpl, a, t));
          const auto eq = pulse::equivalent_up_to_phase(compiled.unitary, circuit_unitary(kind, {a, t}, opts.devices));
          residual = std::max(residual, eq.residual);
          budget = std::max(budget, compiled.budget.total_duration);
          out_fid = std::min(out_fid, pure_fidelity(compiled.unitary * basis_ket(4, 0), closed_form::output(kind, {a, t})));
        }
    }
    return CheckResult{"", std::min({1e-9 - residual, pulse::kProtocolBudgetSeconds - budget, out_fid - 0.99}),
                       "max residual " + format_number(residual) + ", max duration " + format_number(budget) +
                           " s, min output fidelity " + format_number(out_fid)};
  }));

  out.push_back(guarded("tomography round trip", [&] {
    double err = 0.0;
    for (std::size_t i = 0; i < std::min<std::size_t>(states.size(), 100); ++i) {
      const auto raw = reconstruct(pauli_expectations(states[i]), states[i].factors());
      err = std::max(err, max_abs(raw.matrix - states[i].matrix()));
    }
    return CheckResult{"", 1e-12 - err, "max entry error " + format_number(err)};
  }));

  return out;
}

}  // namespace qreal

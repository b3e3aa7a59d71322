#include "protocols.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "errors.hpp"

namespace ghzsim {

namespace {
constexpr double pi = std::numbers::pi;

Branch opposite(Branch b) {
  return b == Branch::PLUS ? Branch::MINUS : Branch::PLUS;
}
} // namespace

const char* protocol_name(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::CONVENTIONAL: return "conventional";
    case ProtocolKind::COMPOSITE: return "composite";
    case ProtocolKind::APPENDIX: return "appendix";
  }
  return "?";
}

bool protocol_from_name(const std::string& name, ProtocolKind& kind) {
  if (name == "conventional") kind = ProtocolKind::CONVENTIONAL;
  else if (name == "composite") kind = ProtocolKind::COMPOSITE;
  else if (name == "appendix") kind = ProtocolKind::APPENDIX;
  else return false;
  return true;
}

double budget_defect(const ProtocolSpec& spec) {
  double total = spec.exposure_time;
  for (const PulseStep& s : spec.prep) total += s.duration;
  for (const PulseStep& s : spec.readout) total += s.duration;
  return std::abs(total - spec.tau);
}

double lambda_used(const ProtocolSpec& spec) {
  double lambda = 1.0;
  for (const PulseStep& s : spec.prep) lambda = std::min(lambda, s.strength);
  for (const PulseStep& s : spec.readout) lambda = std::min(lambda, s.strength);
  return lambda;
}

ProtocolSpec conventional_protocol(double tau, uint32_t n_spins) {
  if (n_spins == 0)
    throw std::invalid_argument("conventional_protocol: n_spins must be >= 1");
  if (!(tau > 4.0 * pi))
    throw InfeasibleBudget("conventional_protocol: requires tau > 4 pi");
  ProtocolSpec spec;
  spec.label = ProtocolKind::CONVENTIONAL;
  spec.n_spins = n_spins;
  spec.tau = tau;
  spec.prep = {PulseStep{Branch::PLUS, -0.5 * pi, 1.0, 2.0 * pi}};
  spec.exposure_time = tau - 4.0 * pi;
  spec.readout = {PulseStep{Branch::MINUS, -0.5 * pi, 1.0, 2.0 * pi}};
  return spec;
}

double composite_weak_angle(double t_norm) {
  if (!(t_norm >= 0.0))
    throw std::invalid_argument("composite_sequence: t_norm must be >= 0");
  const double arg = (pi + 0.5 * t_norm) / 8.0;
  if (arg > 1.0)
    throw std::domain_error(
        "composite_sequence: t_norm above 2(8-pi), asin argument exceeds 1");
  // The weak arcs must overshoot through the inverted pole: only with the
  // third-quadrant angle pi + asin(.) is the detuning phase accumulated by
  // the driven branch negative (8 sin a per arc), which is what cancels the
  // 2 pi + t_norm picked up during the center pulse and the exposure.
  return pi + std::asin(arg);
}

std::vector<PulseStep> composite_sequence(double t_norm, double phi1,
                                          Branch branch) {
  const double a = composite_weak_angle(t_norm);
  const Branch outer = opposite(branch);
  const PulseStep single{outer, phi1, 1.0, 2.0 * a};
  const PulseStep twice{outer, phi1 + pi, 1.0, 4.0 * a};
  const PulseStep center{branch, -0.5 * pi, 1.0, 2.0 * pi};
  return {single, twice, single, center, single, twice, single};
}

ProtocolSpec composite_protocol_general(double tau, uint32_t n_spins,
                                        double phi1, double t_norm) {
  if (n_spins == 0)
    throw std::invalid_argument("composite_protocol: n_spins must be >= 1");
  if (!(tau > 0.0))
    throw InfeasibleBudget("composite_protocol: tau must be positive");
  const double a = composite_weak_angle(t_norm);
  std::vector<PulseStep> prep = composite_sequence(t_norm, phi1, Branch::PLUS);
  std::vector<PulseStep> readout =
      composite_sequence(t_norm, phi1, Branch::MINUS);
  const double lambda = (32.0 * a + 4.0 * pi + t_norm) / tau;
  if (lambda > 1.0)
    throw InfeasibleBudget(
        "composite_protocol: tau below the sequence length 32a + 4 pi + t "
        "at unit strength");
  ProtocolSpec spec;
  spec.label = ProtocolKind::COMPOSITE;
  spec.n_spins = n_spins;
  spec.tau = tau;
  for (PulseStep& s : prep) {
    s.strength = lambda;
    s.duration /= lambda;
  }
  for (PulseStep& s : readout) {
    s.strength = lambda;
    s.duration /= lambda;
  }
  spec.prep = std::move(prep);
  spec.exposure_time = t_norm / lambda;
  spec.readout = std::move(readout);
  return spec;
}

ProtocolSpec composite_protocol(double tau, uint32_t n_spins, double phi1) {
  return composite_protocol_general(tau, n_spins, phi1, 2.0 * (8.0 - pi));
}

ProtocolSpec appendix_protocol(double tau, uint32_t n_spins) {
  if (n_spins == 0)
    throw std::invalid_argument("appendix_protocol: n_spins must be >= 1");
  if (!(tau >= 14.0 * pi))
    throw InfeasibleBudget(
        "appendix_protocol: requires tau >= 14 pi so the weak strength stays "
        "at or below lambda_max");
  const double t_ex = (tau - 8.0 * pi) / 3.0;
  const double lambda_w = 4.0 * pi / (t_ex + 2.0 * pi);
  const double weak_duration = 0.5 * (t_ex + 2.0 * pi);
  ProtocolSpec spec;
  spec.label = ProtocolKind::APPENDIX;
  spec.n_spins = n_spins;
  spec.tau = tau;
  spec.prep = {PulseStep{Branch::MINUS, -0.5 * pi, lambda_w, weak_duration},
               PulseStep{Branch::PLUS, -0.5 * pi, lambda_w, weak_duration},
               PulseStep{Branch::MINUS, -0.5 * pi, 1.0, 2.0 * pi}};
  spec.exposure_time = t_ex;
  spec.readout = {PulseStep{Branch::MINUS, -0.5 * pi, 1.0, 2.0 * pi},
                  PulseStep{Branch::PLUS, 0.5 * pi, lambda_w, weak_duration},
                  PulseStep{Branch::MINUS, -0.5 * pi, lambda_w, weak_duration}};
  return spec;
}

double run_protocol(const ProtocolSpec& spec, const SpinEnvironment& env) {
  if (env.detunings.size() != spec.n_spins)
    throw std::invalid_argument("run_protocol: detuning count != n_spins");
  BranchProductState state = initial_state(spec.n_spins);
  for (const PulseStep& step : spec.prep) state = apply_pulse(state, step, env);
  if (spec.exposure_time > 0.0) {
    std::vector<Mat2> u(spec.n_spins);
    for (uint32_t i = 0; i < spec.n_spins; ++i)
      u[i] = exposure_unitary(spec.exposure_time, env.field, env.detunings[i]);
    state = apply_branch_unitaries(state, u, u);
  }
  for (const PulseStep& step : spec.readout)
    state = apply_pulse(state, step, env);
  return measure_plus_y(state);
}

} // namespace ghzsim

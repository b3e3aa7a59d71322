#include "pulses.hpp"

#include <cmath>
#include <stdexcept>

namespace ghzsim {

void validate_step(const PulseStep& step) {
  if (!(step.strength > 0.0) || step.strength > 1.0)
    throw std::invalid_argument("pulse strength must be in (0, 1]");
  if (!(step.duration > 0.0))
    throw std::invalid_argument("pulse duration must be positive");
  if (!std::isfinite(step.phase))
    throw std::invalid_argument("pulse phase must be finite");
}

Mat2 su2_exp(double n_x, double n_y, double n_z, double s) {
  if (!std::isfinite(n_x) || !std::isfinite(n_y) || !std::isfinite(n_z) ||
      !std::isfinite(s))
    throw std::invalid_argument("su2_exp: inputs must be finite");
  const double r = std::sqrt(n_x * n_x + n_y * n_y + n_z * n_z);
  if (r == 0.0) return Mat2{};
  const double co = std::cos(r * s);
  const double k = std::sin(r * s) / r;
  // n.sigma = [[-n_z, n_x - i n_y], [n_x + i n_y, n_z]] in the (g, e) basis
  return Mat2{cplx{co, n_z * k}, cplx{0.0, -1.0} * cplx{n_x, -n_y} * k,
              cplx{0.0, -1.0} * cplx{n_x, n_y} * k, cplx{co, -n_z * k}};
}

std::pair<Mat2, Mat2> pulse_unitaries(const PulseStep& step, double delta) {
  validate_step(step);
  const double amp = 0.25 * step.strength;
  Mat2 resonant = su2_exp(amp * std::cos(step.phase), amp * std::sin(step.phase),
                          0.5 * delta, step.duration);
  Mat2 offresonant = su2_exp(0.0, 0.0, 0.5 * delta, step.duration);
  return {resonant, offresonant};
}

Mat2 exposure_unitary(double t, double omega, double delta) {
  if (t < 0.0)
    throw std::invalid_argument("exposure_unitary: negative duration");
  return su2_exp(0.0, 0.0, 0.5 * (omega + delta), t);
}

BranchProductState apply_pulse(const BranchProductState& state,
                               const PulseStep& step,
                               const SpinEnvironment& env) {
  if (env.detunings.size() != state.n_spins)
    throw std::invalid_argument("apply_pulse: detuning count != n_spins");
  std::vector<Mat2> u_g(state.n_spins), u_e(state.n_spins);
  for (uint32_t i = 0; i < state.n_spins; ++i) {
    auto [resonant, offresonant] = pulse_unitaries(step, env.detunings[i]);
    if (step.branch == Branch::PLUS) {
      u_e[i] = resonant;
      u_g[i] = offresonant;
    } else {
      u_g[i] = resonant;
      u_e[i] = offresonant;
    }
  }
  return apply_branch_unitaries(state, u_g, u_e);
}

} // namespace ghzsim

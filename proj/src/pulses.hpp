#pragma once

#include <utility>
#include <vector>

#include "qstate.hpp"

namespace ghzsim {

// Frequency-selective pulse addressing one controllable-spin branch:
// PLUS drives the memory spins in the |e>_c branch, MINUS the |g>_c branch.
enum class Branch { PLUS, MINUS };

// One rectangular pulse. strength is in units of the maximum drive strength
// (lambda_max = 1); duration is the physical duration in normalized time, so
// the resonant rotation angle is strength * duration / 2.
struct PulseStep {
  Branch branch = Branch::PLUS;
  double phase = 0.0;
  double strength = 1.0;
  double duration = 0.0;
};

void validate_step(const PulseStep& step);

// Fixed per-run environment: one detuning per memory spin plus the target
// field. Detunings are constant for the whole pulse/exposure sequence.
struct SpinEnvironment {
  std::vector<double> detunings;
  double field = 0.0;
};

// exp(-i s (n_x sigma_x + n_y sigma_y + n_z sigma_z)) via the closed form
// cos(rs) I - i sin(rs) (n.sigma)/r with r = |n|; r = 0 returns I exactly.
Mat2 su2_exp(double n_x, double n_y, double n_z, double s);

// Unitaries a pulse applies to one memory spin with detuning delta:
// resonant branch  exp(-i s [(lambda/4)(sx cos phi + sy sin phi) + (delta/2) sz])
// other branch     exp(-i s (delta/2) sz)
std::pair<Mat2, Mat2> pulse_unitaries(const PulseStep& step, double delta);

// Free evolution under the target field plus detuning:
// diag(e^{+i(omega+delta)t/2}, e^{-i(omega+delta)t/2})
Mat2 exposure_unitary(double t, double omega, double delta);

// Applies one pulse to every memory spin, pairing the resonant unitary with
// the branch the pulse addresses and the pure detuning phase with the other.
BranchProductState apply_pulse(const BranchProductState& state,
                               const PulseStep& step,
                               const SpinEnvironment& env);

} // namespace ghzsim

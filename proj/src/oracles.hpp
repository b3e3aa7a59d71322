#pragma once

#include <functional>
#include <vector>

#include "protocols.hpp"

namespace ghzsim {

// --- dense full-Hilbert-space oracle (independent of the branch-product path)

// P(+y) read directly off a 2^(N+1) statevector in to_dense ordering
double dense_measure_plus_y(const std::vector<cplx>& psi, uint32_t n_spins);

// Runs the protocol on an explicit 2^(N+1) statevector: every pulse becomes a
// per-spin unitary controlled on the controllable spin. Guarded at N <= 12.
double dense_rwa_run(const ProtocolSpec& spec, const SpinEnvironment& env);

// --- lab-frame oracle (no rotating-wave approximation on the drive)

struct LabFrameParams {
  double omega_m = 0.0; // memory-spin frequency
  double omega_c = 0.0; // controllable-spin frequency; never enters dynamics
  double coupling = 0.0;
  double step = 0.0; // integrator time step
};

// Enforces the validation regime: coupling >= 10, omega_m >= 10 * coupling,
// 0 < step <= 0.01/(omega_m + coupling).
void validate_labframe_params(const LabFrameParams& params);

// Propagator of one memory spin over [t0, t0 + duration] under the full
// rotating-frame drive with counter-rotating terms retained,
//   H(t) = (lambda/2) cos(omega_carrier t - phi)
//              [sigma_x cos(omega_frame t) + sigma_y sin(omega_frame t)]
//        + (delta/2) sigma_z,
// integrated with fixed-step RK4 (step rounded down to land on the endpoint).
Mat2 integrate_drive(double lambda, double phi, double omega_carrier,
                     double omega_frame, double delta, double t0,
                     double duration, double step);

// Runs the protocol with every pulse integrated at its exact carrier
// omega_m +- coupling/2 against each branch's frame frequency; the carrier
// phase is continuous in absolute time across the whole program and exposure
// is applied as exact phases. Guarded at N <= 3.
double lab_frame_run(const ProtocolSpec& spec, const SpinEnvironment& env,
                     const LabFrameParams& params);

// --- numerical derivative

using ProtocolBuilder = std::function<ProtocolSpec(double tau, uint32_t n)>;

// dP/d(delta) at delta = 0 for a uniform detuning, central difference with
// step h in [1e-9, 1e-4].
double probability_slope(const ProtocolBuilder& builder, double tau,
                         uint32_t n_spins, double omega, double h);

} // namespace ghzsim

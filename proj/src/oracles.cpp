#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace ghzsim {

namespace {

// applies u to memory spin `spin` (1-based) on the amplitudes whose
// controllable-spin bit equals control (0 = g, 1 = e)
void apply_controlled(std::vector<cplx>& psi, uint32_t n_spins, uint32_t spin,
                      unsigned control, const Mat2& u) {
  const size_t dim = psi.size();
  const uint32_t bit = n_spins - spin; // spin 1 sits just below the c bit
  const size_t stride = size_t{1} << bit;
  for (size_t idx = 0; idx < dim; ++idx) {
    if (((idx >> n_spins) & 1u) != control) continue;
    if ((idx >> bit) & 1u) continue; // visit each (g, e) pair once, from g
    const cplx g = psi[idx];
    const cplx e = psi[idx + stride];
    psi[idx] = u.a * g + u.b * e;
    psi[idx + stride] = u.c * g + u.d * e;
  }
}

void apply_pulse_dense(std::vector<cplx>& psi, uint32_t n_spins,
                       const PulseStep& step, const SpinEnvironment& env) {
  for (uint32_t i = 0; i < n_spins; ++i) {
    auto [resonant, offresonant] = pulse_unitaries(step, env.detunings[i]);
    const unsigned resonant_on = step.branch == Branch::PLUS ? 1u : 0u;
    apply_controlled(psi, n_spins, i + 1, resonant_on, resonant);
    apply_controlled(psi, n_spins, i + 1, 1u - resonant_on, offresonant);
  }
}

} // namespace

double dense_measure_plus_y(const std::vector<cplx>& psi, uint32_t n_spins) {
  // |+y>_c = (|e>_c + i|g>_c)/sqrt(2), so the projected amplitude per memory
  // configuration is (a_e - i a_g)/sqrt(2)
  const size_t half = size_t{1} << n_spins;
  double p = 0.0;
  for (size_t m = 0; m < half; ++m) {
    const cplx a_g = psi[m];
    const cplx a_e = psi[m + half];
    p += 0.5 * std::norm(a_e - cplx{0.0, 1.0} * a_g);
  }
  return p;
}

double dense_rwa_run(const ProtocolSpec& spec, const SpinEnvironment& env) {
  if (spec.n_spins > 12)
    throw CapacityError("dense_rwa_run: n_spins above the 12-spin limit");
  if (env.detunings.size() != spec.n_spins)
    throw std::invalid_argument("dense_rwa_run: detuning count != n_spins");
  const uint32_t n = spec.n_spins;
  std::vector<cplx> psi(size_t{1} << (n + 1), cplx{0.0, 0.0});
  const double amp = 1.0 / std::sqrt(2.0);
  psi[0] = amp;                  // |g>_c |g...g>
  psi[size_t{1} << n] = amp;     // |e>_c |g...g>
  for (const PulseStep& step : spec.prep)
    apply_pulse_dense(psi, n, step, env);
  if (spec.exposure_time > 0.0) {
    for (uint32_t i = 0; i < n; ++i) {
      const Mat2 u =
          exposure_unitary(spec.exposure_time, env.field, env.detunings[i]);
      apply_controlled(psi, n, i + 1, 0u, u);
      apply_controlled(psi, n, i + 1, 1u, u);
    }
  }
  for (const PulseStep& step : spec.readout)
    apply_pulse_dense(psi, n, step, env);
  return dense_measure_plus_y(psi, n);
}

void validate_labframe_params(const LabFrameParams& params) {
  if (!(params.coupling >= 10.0))
    throw std::invalid_argument("lab frame: coupling must be >= 10");
  if (!(params.omega_m >= 10.0 * params.coupling))
    throw std::invalid_argument("lab frame: omega_m must be >= 10 * coupling");
  const double max_step = 0.01 / (params.omega_m + params.coupling);
  if (!(params.step > 0.0) || params.step > max_step)
    throw std::invalid_argument(
        "lab frame: step must be in (0, 0.01/(omega_m + coupling)]");
}

Mat2 integrate_drive(double lambda, double phi, double omega_carrier,
                     double omega_frame, double delta, double t0,
                     double duration, double step) {
  const auto n_steps =
      static_cast<uint64_t>(std::ceil(duration / step - 1e-12));
  const double h = duration / double(n_steps);
  const double half_lambda = 0.5 * lambda;
  const double half_delta = 0.5 * delta;

  // dU/dt = -i H(t) U with H = [[-delta/2, w(t)], [conj(w(t)), delta/2]],
  // w(t) = (lambda/2) cos(omega_carrier t - phi) e^{-i omega_frame t}
  auto rhs = [&](double t, const Mat2& u) {
    const double envelope = half_lambda * std::cos(omega_carrier * t - phi);
    const cplx w =
        envelope * cplx{std::cos(omega_frame * t), -std::sin(omega_frame * t)};
    const cplx mi{0.0, -1.0};
    return Mat2{mi * (-half_delta * u.a + w * u.c),
                mi * (-half_delta * u.b + w * u.d),
                mi * (std::conj(w) * u.a + half_delta * u.c),
                mi * (std::conj(w) * u.b + half_delta * u.d)};
  };
  auto axpy = [](const Mat2& u, double c, const Mat2& k) {
    return Mat2{u.a + c * k.a, u.b + c * k.b, u.c + c * k.c, u.d + c * k.d};
  };

  Mat2 u;
  double t = t0;
  for (uint64_t i = 0; i < n_steps; ++i) {
    const Mat2 k1 = rhs(t, u);
    const Mat2 k2 = rhs(t + 0.5 * h, axpy(u, 0.5 * h, k1));
    const Mat2 k3 = rhs(t + 0.5 * h, axpy(u, 0.5 * h, k2));
    const Mat2 k4 = rhs(t + h, axpy(u, h, k3));
    u = Mat2{u.a + (h / 6.0) * (k1.a + 2.0 * k2.a + 2.0 * k3.a + k4.a),
             u.b + (h / 6.0) * (k1.b + 2.0 * k2.b + 2.0 * k3.b + k4.b),
             u.c + (h / 6.0) * (k1.c + 2.0 * k2.c + 2.0 * k3.c + k4.c),
             u.d + (h / 6.0) * (k1.d + 2.0 * k2.d + 2.0 * k3.d + k4.d)};
    t = t0 + double(i + 1) * h;
  }
  return u;
}

double lab_frame_run(const ProtocolSpec& spec, const SpinEnvironment& env,
                     const LabFrameParams& params) {
  if (spec.n_spins > 3)
    throw CapacityError("lab_frame_run: n_spins above the 3-spin limit");
  if (env.detunings.size() != spec.n_spins)
    throw std::invalid_argument("lab_frame_run: detuning count != n_spins");
  validate_labframe_params(params);

  const uint32_t n = spec.n_spins;
  const double omega_plus = params.omega_m + 0.5 * params.coupling;
  const double omega_minus = params.omega_m - 0.5 * params.coupling;

  BranchProductState state = initial_state(n);
  double t_abs = 0.0;
  auto run_steps = [&](const std::vector<PulseStep>& steps) {
    for (const PulseStep& step : steps) {
      validate_step(step);
      const double carrier =
          step.branch == Branch::PLUS ? omega_plus : omega_minus;
      std::vector<Mat2> u_g(n), u_e(n);
      for (uint32_t i = 0; i < n; ++i) {
        // e branch precesses at omega_m + g/2, g branch at omega_m - g/2
        u_e[i] = integrate_drive(step.strength, step.phase, carrier,
                                 omega_plus, env.detunings[i], t_abs,
                                 step.duration, params.step);
        u_g[i] = integrate_drive(step.strength, step.phase, carrier,
                                 omega_minus, env.detunings[i], t_abs,
                                 step.duration, params.step);
      }
      state = apply_branch_unitaries(state, u_g, u_e);
      t_abs += step.duration;
    }
  };

  run_steps(spec.prep);
  if (spec.exposure_time > 0.0) {
    std::vector<Mat2> u(n);
    for (uint32_t i = 0; i < n; ++i)
      u[i] = exposure_unitary(spec.exposure_time, env.field, env.detunings[i]);
    state = apply_branch_unitaries(state, u, u);
    t_abs += spec.exposure_time;
  }
  run_steps(spec.readout);
  return measure_plus_y(state);
}

double probability_slope(const ProtocolBuilder& builder, double tau,
                         uint32_t n_spins, double omega, double h) {
  if (!(h >= 1e-9) || !(h <= 1e-4))
    throw std::invalid_argument(
        "probability_slope: h must be in [1e-9, 1e-4]");
  const ProtocolSpec spec = builder(tau, n_spins);
  SpinEnvironment env;
  env.field = omega;
  env.detunings.assign(n_spins, h);
  const double p_plus = run_protocol(spec, env);
  env.detunings.assign(n_spins, -h);
  const double p_minus = run_protocol(spec, env);
  return (p_plus - p_minus) / (2.0 * h);
}

} // namespace ghzsim

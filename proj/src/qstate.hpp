#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace ghzsim {

using cplx = std::complex<double>;

// 2x2 complex matrix, row-major [a b; c d], acting on (amp_g, amp_e).
struct Mat2 {
  cplx a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};
};

Mat2 matmul(const Mat2& l, const Mat2& r);
Mat2 adjoint(const Mat2& m);
// Frobenius norm of m^dag * m - I
double unitarity_defect(const Mat2& m);

// per-spin state; basis order is (g, e) with sigma_z|g> = -|g>
struct SpinVector {
  cplx amp_g{1.0, 0.0};
  cplx amp_e{0.0, 0.0};

  double norm2() const;
};

SpinVector apply(const Mat2& u, const SpinVector& v);
// <x|y>
cplx overlap(const SpinVector& x, const SpinVector& y);

// Entangled state of 1 controllable spin and N memory spins, stored as two
// product branches keyed by the controllable spin: O(N) amplitudes total.
// Values are immutable after construction; operations return new states.
struct BranchProductState {
  uint32_t n_spins = 0;
  cplx c_g{0.0, 0.0}, c_e{0.0, 0.0};
  std::vector<SpinVector> v_g, v_e;
};

// (|g>_c + |e>_c)/sqrt(2) with every memory spin in |g>; the controllable
// spin's own pi/2 rotation is treated as ideal and instantaneous.
BranchProductState initial_state(uint32_t n_spins);

// |c_g|^2 prod ||v_g,i||^2 + |c_e|^2 prod ||v_e,i||^2
double state_norm2(const BranchProductState& state);

// Applies u_g[i] to v_g[i] and u_e[i] to v_e[i]. Rejects non-unitary input
// (defect above 1e-8); never renormalizes.
BranchProductState apply_branch_unitaries(const BranchProductState& state,
                                          const std::vector<Mat2>& u_g,
                                          const std::vector<Mat2>& u_e);

// Probability of the +y outcome on the controllable spin,
// |+y>_c = (|e>_c + i|g>_c)/sqrt(2):
//   P = 1/2 (|c_g|^2 prod ||v_g,i||^2 + |c_e|^2 prod ||v_e,i||^2)
//       - Im(c_g^* c_e prod <v_g,i|v_e,i>)
double measure_plus_y(const BranchProductState& state);

// Full 2^(N+1) statevector; controllable spin is the most significant
// two-level index, then memory spin 1, ..., memory spin N; g before e.
// Guarded at N <= 14.
std::vector<cplx> to_dense(const BranchProductState& state);

} // namespace ghzsim

#pragma once

#include <cstdint>
#include <string>

namespace ghzsim {

struct CheckReport {
  bool ok = true;
  std::string detail;
};

// Branch-product path vs dense statevector on random protocol/detuning
// cases; fails if any |P_fast - P_dense| exceeds tol.
CheckReport check_dense_oracle(uint64_t seed, int cases, uint32_t max_n,
                               double tol);

// Lab-frame integrator vs the rotating-wave result for the conventional
// protocol: |P_lab - P_rwa| <= 5/g for g in {50, 100} and N in {1, 2}, the
// error must not grow when g doubles, and halving the integrator step must
// move P by <= 1e-8.
CheckReport check_labframe_oracle();

// First-order detuning response: conventional slope equals N(2 pi + t_ex)/2
// to 0.1% for N in {1, 5, 20}; composite and appendix slopes stay below
// 1e-5 * N for N <= 50 and their residual scales quadratically in delta.
CheckReport check_slope_oracle(double phi1);

} // namespace ghzsim

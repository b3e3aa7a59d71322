#include "qstate.hpp"

#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace ghzsim {

Mat2 matmul(const Mat2& l, const Mat2& r) {
  return Mat2{l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
              l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

Mat2 adjoint(const Mat2& m) {
  return Mat2{std::conj(m.a), std::conj(m.c), std::conj(m.b), std::conj(m.d)};
}

double unitarity_defect(const Mat2& m) {
  Mat2 p = matmul(adjoint(m), m);
  p.a -= 1.0;
  p.d -= 1.0;
  return std::sqrt(std::norm(p.a) + std::norm(p.b) + std::norm(p.c) +
                   std::norm(p.d));
}

double SpinVector::norm2() const { return std::norm(amp_g) + std::norm(amp_e); }

SpinVector apply(const Mat2& u, const SpinVector& v) {
  return SpinVector{u.a * v.amp_g + u.b * v.amp_e,
                    u.c * v.amp_g + u.d * v.amp_e};
}

cplx overlap(const SpinVector& x, const SpinVector& y) {
  return std::conj(x.amp_g) * y.amp_g + std::conj(x.amp_e) * y.amp_e;
}

BranchProductState initial_state(uint32_t n_spins) {
  if (n_spins == 0)
    throw std::invalid_argument("initial_state: n_spins must be at least 1");
  BranchProductState s;
  s.n_spins = n_spins;
  s.c_g = s.c_e = cplx{1.0 / std::sqrt(2.0), 0.0};
  s.v_g.assign(n_spins, SpinVector{});
  s.v_e.assign(n_spins, SpinVector{});
  return s;
}

double state_norm2(const BranchProductState& state) {
  double pg = 1.0, pe = 1.0;
  for (uint32_t i = 0; i < state.n_spins; ++i) {
    pg *= state.v_g[i].norm2();
    pe *= state.v_e[i].norm2();
  }
  return std::norm(state.c_g) * pg + std::norm(state.c_e) * pe;
}

BranchProductState apply_branch_unitaries(const BranchProductState& state,
                                          const std::vector<Mat2>& u_g,
                                          const std::vector<Mat2>& u_e) {
  if (u_g.size() != state.n_spins || u_e.size() != state.n_spins)
    throw std::invalid_argument(
        "apply_branch_unitaries: need one unitary per spin and branch");
  for (uint32_t i = 0; i < state.n_spins; ++i) {
    if (unitarity_defect(u_g[i]) > 1e-8 || unitarity_defect(u_e[i]) > 1e-8)
      throw std::invalid_argument("apply_branch_unitaries: non-unitary input");
  }
  BranchProductState out = state;
  for (uint32_t i = 0; i < state.n_spins; ++i) {
    out.v_g[i] = apply(u_g[i], state.v_g[i]);
    out.v_e[i] = apply(u_e[i], state.v_e[i]);
  }
  return out;
}

double measure_plus_y(const BranchProductState& state) {
  if (std::abs(state_norm2(state) - 1.0) > 1e-6)
    throw std::invalid_argument("measure_plus_y: state is not normalized");
  double pg = 1.0, pe = 1.0;
  cplx cross{1.0, 0.0};
  for (uint32_t i = 0; i < state.n_spins; ++i) {
    pg *= state.v_g[i].norm2();
    pe *= state.v_e[i].norm2();
    cross *= overlap(state.v_g[i], state.v_e[i]);
  }
  return 0.5 * (std::norm(state.c_g) * pg + std::norm(state.c_e) * pe) -
         std::imag(std::conj(state.c_g) * state.c_e * cross);
}

std::vector<cplx> to_dense(const BranchProductState& state) {
  if (state.n_spins > 14)
    throw CapacityError("to_dense: n_spins above the 14-spin limit");
  const uint32_t n = state.n_spins;
  const size_t dim = size_t{1} << (n + 1);
  std::vector<cplx> psi(dim);
  for (size_t idx = 0; idx < dim; ++idx) {
    const bool excited_c = (idx >> n) & 1u;
    cplx amp = excited_c ? state.c_e : state.c_g;
    const std::vector<SpinVector>& v = excited_c ? state.v_e : state.v_g;
    for (uint32_t i = 0; i < n; ++i) {
      // memory spin i+1 sits at bit (n - 1 - i)
      const bool excited_m = (idx >> (n - 1 - i)) & 1u;
      amp *= excited_m ? v[i].amp_e : v[i].amp_g;
    }
    psi[idx] = amp;
  }
  return psi;
}

} // namespace ghzsim

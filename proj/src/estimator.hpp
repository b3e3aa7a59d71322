#pragma once

#include <cstdint>
#include <utility>

namespace ghzsim {

// Error statistics of the linear-inversion field estimator. All quantities
// are analytic in the outcome probability; rmse^2 = std^2 + bias^2 and
// rsd = rmse / |true field|.
struct EstimatorStats {
  double mean = 0.0;
  double bias = 0.0;
  double std_dev = 0.0;
  double rmse = 0.0;
  double rsd = 0.0;
};

// Estimator omega_hat = (2p - 1)/(N t_ex) evaluated at the actual outcome
// probability p, with binomial counting noise over `trials` repetitions:
//   mean = (2p - 1)/(N t_ex)
//   std  = (2/(N t_ex)) sqrt(p(1-p)/trials)
EstimatorStats estimator_stats(double p_actual, double omega_true,
                               uint32_t n_spins, double t_ex, uint64_t trials);

// One sampled estimate: draws k ~ Binomial(trials, p) and returns
// (2k/trials - 1)/(N t_ex). Deterministic for a given seed; inverse-CDF
// sampling for trials <= 1e4, normal approximation above.
double monte_carlo_estimate(double p_actual, uint32_t n_spins, double t_ex,
                            uint64_t trials, uint64_t seed);

// Statistics of an estimator built from an assumed linear response
// p = x + y omega when the true response is p = x' + y' omega:
//   mean = (y' omega + x' - x)/y
// limit_rmse is the trials -> infinity root-mean-square error
// |omega (y' - y) + (x' - x)| / y, which bounds rsd * omega from below.
struct BiasedModelStats {
  EstimatorStats stats;
  double limit_rmse = 0.0;
};

BiasedModelStats biased_linear_model(double x, double y, double x_actual,
                                     double y_actual, double omega,
                                     uint64_t trials);

// Idealized reference curves at p = 1/2:
//   heisenberg_rsd = 1/(sqrt(M) N t_ex omega)   entangled probe
//   sql_rsd        = 1/(sqrt(M N) t_ex omega)   N independent spins
std::pair<double, double> reference_curves(uint32_t n_spins, double omega,
                                           double t_ex, uint64_t trials);

} // namespace ghzsim

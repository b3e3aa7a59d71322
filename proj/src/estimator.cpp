#include "estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rng.hpp"

namespace ghzsim {

namespace {

double checked_probability(double p, const char* who) {
  if (!(p >= -1e-12) || !(p <= 1.0 + 1e-12))
    throw std::invalid_argument(std::string(who) +
                                ": probability outside [0, 1]");
  return std::clamp(p, 0.0, 1.0);
}

// Binomial draw by inverse CDF. The pmf table is anchored at the mode and
// extended by the term recurrence, so far tails underflow harmlessly to zero
// instead of poisoning the whole table.
uint64_t binomial_inverse_cdf(uint64_t m, double p, Rng& rng) {
  const double q = 1.0 - p;
  const auto md = static_cast<uint64_t>(
      std::min(static_cast<double>(m), std::floor((double(m) + 1.0) * p)));
  const double log_pmf_mode = std::lgamma(double(m) + 1.0) -
                              std::lgamma(double(md) + 1.0) -
                              std::lgamma(double(m - md) + 1.0) +
                              double(md) * std::log(p) +
                              double(m - md) * std::log(q);
  std::vector<double> pmf(m + 1, 0.0);
  pmf[md] = std::exp(log_pmf_mode);
  for (uint64_t k = md; k > 0; --k)
    pmf[k - 1] = pmf[k] * (double(k) / double(m - k + 1)) * (q / p);
  for (uint64_t k = md; k < m; ++k)
    pmf[k + 1] = pmf[k] * (double(m - k) / double(k + 1)) * (p / q);
  const double u = rng.uniform01();
  double cdf = 0.0;
  for (uint64_t k = 0; k <= m; ++k) {
    cdf += pmf[k];
    if (u < cdf) return k;
  }
  return m;
}

uint64_t binomial_normal_approx(uint64_t m, double p, Rng& rng) {
  double u = rng.uniform01();
  if (u <= 0.0) u = 0x1.0p-53;
  const double z = inverse_normal_cdf(u);
  const double md = double(m);
  double k = std::round(md * p + z * std::sqrt(md * p * (1.0 - p)));
  k = std::clamp(k, 0.0, md);
  return static_cast<uint64_t>(k);
}

} // namespace

EstimatorStats estimator_stats(double p_actual, double omega_true,
                               uint32_t n_spins, double t_ex, uint64_t trials) {
  const double p = checked_probability(p_actual, "estimator_stats");
  if (trials < 1)
    throw std::invalid_argument("estimator_stats: trials must be >= 1");
  const double nt = double(n_spins) * t_ex;
  if (!(nt > 0.0))
    throw std::invalid_argument("estimator_stats: N * t_ex must be positive");
  EstimatorStats s;
  s.mean = (2.0 * p - 1.0) / nt;
  s.bias = s.mean - omega_true;
  s.std_dev = (2.0 / nt) * std::sqrt(p * (1.0 - p) / double(trials));
  s.rmse = std::sqrt(s.std_dev * s.std_dev + s.bias * s.bias);
  s.rsd = s.rmse / std::abs(omega_true);
  return s;
}

double monte_carlo_estimate(double p_actual, uint32_t n_spins, double t_ex,
                            uint64_t trials, uint64_t seed) {
  const double p = checked_probability(p_actual, "monte_carlo_estimate");
  if (trials < 1)
    throw std::invalid_argument("monte_carlo_estimate: trials must be >= 1");
  const double nt = double(n_spins) * t_ex;
  if (!(nt > 0.0))
    throw std::invalid_argument(
        "monte_carlo_estimate: N * t_ex must be positive");
  Rng rng(seed);
  uint64_t k;
  if (p <= 0.0) k = 0;
  else if (p >= 1.0) k = trials;
  else if (trials <= 10000) k = binomial_inverse_cdf(trials, p, rng);
  else k = binomial_normal_approx(trials, p, rng);
  return (2.0 * (double(k) / double(trials)) - 1.0) / nt;
}

BiasedModelStats biased_linear_model(double x, double y, double x_actual,
                                     double y_actual, double omega,
                                     uint64_t trials) {
  if (y == 0.0)
    throw std::invalid_argument("biased_linear_model: y must be nonzero");
  if (trials < 1)
    throw std::invalid_argument("biased_linear_model: trials must be >= 1");
  const double p_actual = x_actual + y_actual * omega;
  if (!(p_actual >= 0.0) || !(p_actual <= 1.0))
    throw std::domain_error(
        "biased_linear_model: actual probability outside [0, 1]");
  BiasedModelStats out;
  out.stats.mean = (y_actual * omega + x_actual - x) / y;
  out.stats.bias = out.stats.mean - omega;
  out.stats.std_dev =
      std::sqrt(p_actual * (1.0 - p_actual) / double(trials)) / std::abs(y);
  out.stats.rmse = std::sqrt(out.stats.std_dev * out.stats.std_dev +
                             out.stats.bias * out.stats.bias);
  out.stats.rsd = out.stats.rmse / std::abs(omega);
  out.limit_rmse =
      std::abs(omega * (y_actual - y) + (x_actual - x)) / std::abs(y);
  return out;
}

std::pair<double, double> reference_curves(uint32_t n_spins, double omega,
                                           double t_ex, uint64_t trials) {
  const double root_m = std::sqrt(double(trials));
  const double heisenberg =
      1.0 / (root_m * double(n_spins) * t_ex * std::abs(omega));
  const double sql = heisenberg * std::sqrt(double(n_spins));
  return {heisenberg, sql};
}

} // namespace ghzsim

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "estimator.hpp"
#include "rng.hpp"

using namespace ghzsim;

namespace {
constexpr double pi = std::numbers::pi;
} // namespace

TEST_CASE("estimator statistics at the reference operating point") {
  // p produced by the ideal exposure sin(N omega t_ex) at N = 10,
  // omega = 1e-5, t_ex = 96 pi
  const double p = 0.5150773588104283;
  const EstimatorStats s = estimator_stats(p, 1e-5, 10, 96.0 * pi, 1000000);
  CHECK(s.mean ==
        doctest::Approx(9.99848409770749e-06).epsilon(1e-12).scale(0.0));
  CHECK(s.bias == doctest::Approx(s.mean - 1e-5).epsilon(1e-12).scale(0.0));
  CHECK(s.std_dev ==
        doctest::Approx(3.314220130905503e-07).epsilon(1e-12).scale(0.0));
  CHECK(s.rmse == doctest::Approx(std::sqrt(s.std_dev * s.std_dev +
                                            s.bias * s.bias)).epsilon(1e-12));
  CHECK(s.rsd == doctest::Approx(0.03314254798906585).epsilon(1e-12));
}

TEST_CASE("estimator edge and error cases") {
  CHECK_THROWS_AS(estimator_stats(1.2, 1e-5, 1, 1.0, 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(estimator_stats(-0.1, 1e-5, 1, 1.0, 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(estimator_stats(0.5, 1e-5, 1, 1.0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(estimator_stats(0.5, 1e-5, 0, 1.0, 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(estimator_stats(0.5, 1e-5, 1, 0.0, 100),
                  std::invalid_argument);

  // tiny probability tolerance outside [0, 1] is clamped, not rejected
  const EstimatorStats s = estimator_stats(1.0 + 1e-13, 1e-5, 1, 1.0, 100);
  CHECK(s.mean == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.std_dev == 0.0);
}

TEST_CASE("infinite-trial limit reduces the error to the bias") {
  const double p = 0.5160882352941176;
  const double omega = 1e-5;
  const EstimatorStats s =
      estimator_stats(p, omega, 10, 96.0 * pi, 1000000000000000000ull);
  CHECK(s.std_dev < 1e-6 * std::abs(s.bias));
  CHECK(s.rsd == doctest::Approx(std::abs(s.bias) / omega).epsilon(1e-6));
}

TEST_CASE("monte_carlo_estimate is deterministic and unbiased") {
  const double p = 0.5150773588104283;
  const uint32_t n = 10;
  const double t_ex = 96.0 * pi;

  CHECK(monte_carlo_estimate(p, n, t_ex, 1000, 17) ==
        monte_carlo_estimate(p, n, t_ex, 1000, 17));
  CHECK(monte_carlo_estimate(p, n, t_ex, 1000, 17) !=
        monte_carlo_estimate(p, n, t_ex, 1000, 18));

  const EstimatorStats ref = estimator_stats(p, 1e-5, n, t_ex, 1000);
  SUBCASE("inverse-CDF sampler (trials <= 1e4)") {
    const int reps = 4000;
    double sum = 0.0;
    for (int i = 0; i < reps; ++i)
      sum += monte_carlo_estimate(p, n, t_ex, 1000, derive_seed(123, i));
    const double avg = sum / reps;
    const double se = ref.std_dev / std::sqrt(double(reps));
    CHECK(std::abs(avg - ref.mean) < 4.0 * se);
  }
  SUBCASE("normal-approximation sampler (trials > 1e4)") {
    const EstimatorStats wide = estimator_stats(p, 1e-5, n, t_ex, 1000000);
    const int reps = 4000;
    double sum = 0.0;
    for (int i = 0; i < reps; ++i)
      sum += monte_carlo_estimate(p, n, t_ex, 1000000, derive_seed(77, i));
    const double avg = sum / reps;
    const double se = wide.std_dev / std::sqrt(double(reps));
    CHECK(std::abs(avg - wide.mean) < 4.0 * se);
  }
  SUBCASE("degenerate probabilities") {
    CHECK(monte_carlo_estimate(0.0, 1, 1.0, 100, 5) ==
          doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(monte_carlo_estimate(1.0, 1, 1.0, 100, 5) ==
          doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("biased linear model quantifies a miscalibrated response") {
  // assumed p = 0.5 + 0.5 omega, actual intercept shifted by 0.01
  const BiasedModelStats out =
      biased_linear_model(0.5, 0.5, 0.51, 0.5, 1e-5, 1000000);
  CHECK(out.limit_rmse == doctest::Approx(0.02).epsilon(1e-12));
  CHECK(out.stats.mean == doctest::Approx(1e-5 + 0.02).epsilon(1e-9));
  CHECK(out.stats.bias == doctest::Approx(0.02).epsilon(1e-9));
  // rsd * omega never drops below the infinite-trial floor
  CHECK(out.stats.rsd * 1e-5 >= out.limit_rmse);

  // a matched model is unbiased and noise-limited
  const BiasedModelStats match =
      biased_linear_model(0.5, 0.5, 0.5, 0.5, 1e-5, 1000000);
  CHECK(match.limit_rmse == 0.0);
  CHECK(std::abs(match.stats.bias) < 1e-15);

  CHECK_THROWS_AS(biased_linear_model(0.5, 0.0, 0.5, 0.5, 1e-5, 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(biased_linear_model(0.5, 0.5, 1.2, 0.5, 1e-5, 100),
                  std::domain_error);
}

TEST_CASE("reference curves") {
  const auto [heisenberg, sql] = reference_curves(10, 1e-5, 96.0 * pi,
                                                  1000000);
  CHECK(heisenberg == doctest::Approx(0.03315727981081153).epsilon(1e-12));
  CHECK(sql == doctest::Approx(heisenberg * std::sqrt(10.0)).epsilon(1e-12));
  // the entangled reference improves as 1/N, the independent one as 1/sqrt(N)
  const auto [h1, s1] = reference_curves(1, 1e-5, 96.0 * pi, 1000000);
  CHECK(h1 == doctest::Approx(10.0 * heisenberg).epsilon(1e-12));
  CHECK(s1 == doctest::Approx(std::sqrt(10.0) * sql).epsilon(1e-12));
}

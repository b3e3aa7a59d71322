#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "csv.hpp"
#include "errors.hpp"
#include "estimator.hpp"
#include "rng.hpp"

namespace ghzsim {

namespace {
constexpr double pi = std::numbers::pi;

ProtocolSpec build_spec(const SweepConfig& config, ProtocolKind kind,
                        uint32_t n) {
  switch (kind) {
    case ProtocolKind::CONVENTIONAL:
      return conventional_protocol(config.tau, n);
    case ProtocolKind::COMPOSITE:
      return composite_protocol(config.tau, n, config.phi1);
    case ProtocolKind::APPENDIX:
      return appendix_protocol(config.tau, n);
  }
  throw std::invalid_argument("unknown protocol kind");
}

unsigned worker_count(size_t jobs) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("GHZSIM_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1)
      hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  return static_cast<unsigned>(std::min<size_t>(hw, jobs));
}
} // namespace

SweepConfig default_sweep_config() {
  SweepConfig config;
  config.tau = 100.0 * pi;
  config.n_values.resize(1000);
  for (uint32_t i = 0; i < 1000; ++i) config.n_values[i] = i + 1;
  return config;
}

std::vector<double> realize_detunings(const DetuningModel& model,
                                      uint32_t n_spins, uint64_t master_seed) {
  if (n_spins == 0)
    throw std::invalid_argument("realize_detunings: n_spins must be >= 1");
  switch (model.kind) {
    case DetuningKind::UNIFORM:
      return std::vector<double>(n_spins, model.value);
    case DetuningKind::IID_UNIFORM: {
      if (model.lo > model.hi)
        throw std::invalid_argument("realize_detunings: lo > hi");
      Rng rng(derive_seed(master_seed, n_spins));
      std::vector<double> out(n_spins);
      for (double& d : out) d = rng.uniform(model.lo, model.hi);
      return out;
    }
    case DetuningKind::EXPLICIT:
      if (model.values.size() != n_spins)
        throw std::invalid_argument(
            "realize_detunings: explicit list length != n_spins");
      return model.values;
  }
  throw std::invalid_argument("realize_detunings: unknown model kind");
}

SweepRow run_row(const SweepConfig& config, ProtocolKind kind,
                 uint32_t n_spins) {
  const ProtocolSpec spec = build_spec(config, kind, n_spins);
  SpinEnvironment env;
  env.field = config.omega;
  env.detunings = realize_detunings(config.detuning, n_spins,
                                    config.master_seed);
  SweepRow row;
  row.protocol = kind;
  row.n_spins = n_spins;
  row.tau = config.tau;
  row.omega = config.omega;
  row.trials = config.trials;
  row.t_ex = spec.exposure_time;
  row.lambda = lambda_used(spec);
  row.p_plus_y = run_protocol(spec, env);
  const EstimatorStats stats = estimator_stats(
      row.p_plus_y, config.omega, n_spins, spec.exposure_time, config.trials);
  row.est_mean = stats.mean;
  row.est_bias = stats.bias;
  row.est_std = stats.std_dev;
  row.rsd = stats.rsd;
  row.heisenberg_ref =
      reference_curves(n_spins, config.omega, spec.exposure_time,
                       config.trials)
          .first;
  row.delta_min = *std::min_element(env.detunings.begin(),
                                    env.detunings.end());
  row.delta_max = *std::max_element(env.detunings.begin(),
                                    env.detunings.end());
  row.delta_sum = 0.0;
  for (double d : env.detunings) row.delta_sum += d;
  row.seed = derive_seed(config.master_seed, n_spins);
  return row;
}

SweepResult run_sweep(const SweepConfig& config) {
  if (config.n_values.empty())
    throw std::invalid_argument("run_sweep: n_values must be nonempty");
  for (size_t i = 0; i < config.n_values.size(); ++i) {
    if (config.n_values[i] == 0)
      throw std::invalid_argument("run_sweep: n_values must be positive");
    if (i > 0 && config.n_values[i] <= config.n_values[i - 1])
      throw std::invalid_argument(
          "run_sweep: n_values must be strictly increasing");
  }
  if (config.trials < 1)
    throw std::invalid_argument("run_sweep: trials must be >= 1");

  SweepResult result;
  std::vector<ProtocolKind> feasible;
  for (ProtocolKind kind : config.protocols) {
    try {
      build_spec(config, kind, 1);
      feasible.push_back(kind);
    } catch (const InfeasibleBudget& e) {
      result.errors.push_back(std::string(protocol_name(kind)) + ": " +
                              e.what());
    }
  }
  // protocol order in the output is fixed by the enum, not the request order
  std::sort(feasible.begin(), feasible.end());

  struct Job {
    ProtocolKind kind;
    uint32_t n;
  };
  std::vector<Job> jobs;
  jobs.reserve(feasible.size() * config.n_values.size());
  for (ProtocolKind kind : feasible)
    for (uint32_t n : config.n_values) jobs.push_back({kind, n});

  result.rows.resize(jobs.size());
  const unsigned workers = worker_count(jobs.size());
  if (workers <= 1) {
    for (size_t i = 0; i < jobs.size(); ++i)
      result.rows[i] = run_row(config, jobs[i].kind, jobs[i].n);
  } else {
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&]() {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= jobs.size()) return;
        try {
          result.rows[i] = run_row(config, jobs[i].kind, jobs[i].n);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }
  return result;
}

std::vector<std::string> reproduce_figure(const SweepConfig& config, int which,
                                          const std::string& out_base,
                                          char sep) {
  if (which != 1 && which != 2)
    throw std::invalid_argument("reproduce_figure: which must be 1 or 2");
  SweepConfig panel = config;
  panel.protocols = {ProtocolKind::CONVENTIONAL, ProtocolKind::COMPOSITE,
                     ProtocolKind::APPENDIX};
  std::vector<std::string> paths;
  const char* suffixes[2] = {"_a.csv", "_b.csv"};
  for (int p = 0; p < 2; ++p) {
    const double scale = p == 0 ? 1.0 : 0.1;
    DetuningModel model;
    if (which == 1) {
      model.kind = DetuningKind::UNIFORM;
      model.value = scale * config.omega;
    } else {
      model.kind = DetuningKind::IID_UNIFORM;
      model.lo = 0.0;
      model.hi = scale * config.omega;
    }
    panel.detuning = model;
    const SweepResult result = run_sweep(panel);
    const std::string path = out_base + suffixes[p];
    write_rows(path, result.rows, sep);
    paths.push_back(path);
  }
  return paths;
}

} // namespace ghzsim

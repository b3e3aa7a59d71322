#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "protocols.hpp"

namespace ghzsim {

enum class DetuningKind { UNIFORM, IID_UNIFORM, EXPLICIT };

// Per-spin detuning model. A realized list is drawn once per (N, seed) and
// shared by every protocol at that N, so curves see identical environments.
struct DetuningModel {
  DetuningKind kind = DetuningKind::UNIFORM;
  double value = 0.0;          // UNIFORM: every spin gets this detuning
  double lo = 0.0, hi = 0.0;   // IID_UNIFORM: independent draws from [lo, hi)
  std::vector<double> values;  // EXPLICIT: verbatim per-spin list
};

std::vector<double> realize_detunings(const DetuningModel& model,
                                      uint32_t n_spins, uint64_t master_seed);

struct SweepConfig {
  std::vector<ProtocolKind> protocols = {ProtocolKind::CONVENTIONAL,
                                         ProtocolKind::COMPOSITE,
                                         ProtocolKind::APPENDIX};
  std::vector<uint32_t> n_values; // strictly increasing; default 1..1000
  double tau = 0.0;               // default_sweep_config() fills 100 pi
  double omega = 1e-5;
  uint64_t trials = 1000000;
  DetuningModel detuning;
  uint64_t master_seed = 42;
  double phi1 = 0.0;
};

SweepConfig default_sweep_config();

struct SweepRow {
  ProtocolKind protocol = ProtocolKind::CONVENTIONAL;
  uint32_t n_spins = 0;
  double tau = 0.0;
  double omega = 0.0;
  uint64_t trials = 0;
  double t_ex = 0.0;
  double lambda = 1.0; // weakest pulse strength in the sequence
  double p_plus_y = 0.0;
  double est_mean = 0.0;
  double est_bias = 0.0;
  double est_std = 0.0;
  double rsd = 0.0;
  double heisenberg_ref = 0.0;
  double delta_min = 0.0, delta_max = 0.0, delta_sum = 0.0;
  uint64_t seed = 0; // detuning stream seed for this row's N
};

struct SweepResult {
  std::vector<SweepRow> rows; // ordered by (protocol, N)
  std::vector<std::string> errors; // protocols skipped for infeasible budgets
};

// One (protocol, N) evaluation with the config's detuning realization.
SweepRow run_row(const SweepConfig& config, ProtocolKind kind,
                 uint32_t n_spins);

// Runs every requested (protocol, N) pair. Rows are independent and may be
// evaluated on worker threads (capped by the GHZSIM_THREADS environment
// variable); assembly restores (protocol, N) order, so output is identical
// to a sequential run.
SweepResult run_sweep(const SweepConfig& config);

// Figure datasets: two panels per figure, written to <out_base>_a.csv and
// <out_base>_b.csv with all three protocols. Figure 1 uses uniform detuning
// (omega, 0.1 omega); figure 2 draws i.i.d. detunings from [0, omega) and
// [0, 0.1 omega). Returns the written paths.
std::vector<std::string> reproduce_figure(const SweepConfig& config, int which,
                                          const std::string& out_base,
                                          char sep);

} // namespace ghzsim

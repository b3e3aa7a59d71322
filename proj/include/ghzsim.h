#ifndef GHZSIM_H
#define GHZSIM_H

/* C interface to the GHZ-state magnetometry simulator.
 *
 * All simulation options live in an opaque ghzsim_config handle. Every entry
 * point reports failures through a ghzsim_status code and, when a report
 * buffer is supplied, a human-readable message (always NUL-terminated,
 * truncated if the buffer is too small).
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ghzsim_status {
  GHZSIM_OK = 0,
  GHZSIM_ERR_INVALID_ARGUMENT = 1, /* bad parameter value or combination */
  GHZSIM_ERR_INFEASIBLE_BUDGET = 2, /* time budget too small for protocol */
  GHZSIM_ERR_CAPACITY = 3,          /* spin count beyond a hard size limit */
  GHZSIM_ERR_DOMAIN = 4,            /* value outside a formula's domain */
  GHZSIM_ERR_PARSE = 5,             /* config text could not be parsed */
  GHZSIM_ERR_IO = 6,                /* output file could not be written */
  GHZSIM_ERR_CHECK_FAILED = 7,      /* an oracle cross-check found a violation */
  GHZSIM_ERR_INTERNAL = 99
} ghzsim_status;

const char* ghzsim_status_name(ghzsim_status status);

/* Opaque configuration handle. Defaults: tau = 100*pi, omega = 1e-5,
 * trials = 1e6, phi1 = 0, master_seed = 42, detuning = uniform 0,
 * protocols = conventional,composite,appendix, n_values = 1:1000,
 * format = csv. */
typedef struct ghzsim_config ghzsim_config;

ghzsim_config* ghzsim_config_new(void);
void ghzsim_config_free(ghzsim_config* cfg);

/* Parse `key = value` lines ('#' starts a comment). Unknown keys are errors. */
ghzsim_status ghzsim_config_parse_text(ghzsim_config* cfg, const char* text,
                                       char* report, size_t report_len);
ghzsim_status ghzsim_config_parse_file(ghzsim_config* cfg, const char* path,
                                       char* report, size_t report_len);
/* Set a single key, same keys and value syntax as the config file. */
ghzsim_status ghzsim_config_set(ghzsim_config* cfg, const char* key,
                                const char* value, char* report,
                                size_t report_len);

/* One result row; fields mirror the CSV schema in order. */
typedef struct ghzsim_row {
  char protocol[16];
  uint32_t n_spins;
  double tau;
  double omega;
  uint64_t trials;
  double t_ex;
  double lambda_used; /* weakest pulse strength in the sequence */
  double p_plus_y;
  double est_mean;
  double est_bias;
  double est_std;
  double rsd;
  double heisenberg_ref;
  double delta_sum;
  uint64_t seed; /* per-row detuning stream seed */
} ghzsim_row;

/* Run one protocol instance ("conventional", "composite" or "appendix"). */
ghzsim_status ghzsim_run_row(const ghzsim_config* cfg, const char* protocol,
                             uint32_t n_spins, ghzsim_row* out, char* report,
                             size_t report_len);

/* Run the configured sweep and write CSV rows. out_path NULL defers to the
 * config 'output' key; an empty path means stdout. Protocols whose budget is
 * infeasible are skipped; the report lists them. */
ghzsim_status ghzsim_sweep_csv(const ghzsim_config* cfg, const char* out_path,
                               char* report, size_t report_len);

/* Reproduce figure dataset 1 or 2: writes <out_base>_a.csv and
 * <out_base>_b.csv with all three protocols plus the Heisenberg reference. */
ghzsim_status ghzsim_figures_csv(const ghzsim_config* cfg, int which,
                                 const char* out_base, char* report,
                                 size_t report_len);

/* Run an oracle cross-check suite: "dense", "labframe" or "slope".
 * Returns GHZSIM_OK and a summary, or GHZSIM_ERR_CHECK_FAILED and details. */
ghzsim_status ghzsim_check(const ghzsim_config* cfg, const char* oracle,
                           char* report, size_t report_len);

/* CSV formatting helpers (sep is ',' or '\t'). Both return the number of
 * characters that were (or would have been) written, excluding the NUL, with
 * snprintf truncation semantics. Doubles use shortest round-trip form. */
size_t ghzsim_csv_header(char sep, char* buf, size_t len);
size_t ghzsim_row_format(const ghzsim_row* row, char sep, char* buf,
                         size_t len);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GHZSIM_H */

#include "ghzsim.h"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "checks.hpp"
#include "config.hpp"
#include "csv.hpp"
#include "errors.hpp"
#include "sweep.hpp"

struct ghzsim_config {
  ghzsim::RunConfig cfg;
};

namespace {

void fill_report(char* report, size_t report_len, const std::string& msg) {
  if (!report || report_len == 0) return;
  const size_t n = std::min(msg.size(), report_len - 1);
  std::memcpy(report, msg.data(), n);
  report[n] = '\0';
}

template <typename Fn>
ghzsim_status guarded(char* report, size_t report_len, Fn&& fn) {
  try {
    return fn();
  } catch (const ghzsim::InfeasibleBudget& e) {
    fill_report(report, report_len, e.what());
    return GHZSIM_ERR_INFEASIBLE_BUDGET;
  } catch (const ghzsim::CapacityError& e) {
    fill_report(report, report_len, e.what());
    return GHZSIM_ERR_CAPACITY;
  } catch (const ghzsim::ParseError& e) {
    fill_report(report, report_len, e.what());
    return GHZSIM_ERR_PARSE;
  } catch (const ghzsim::IoError& e) {
    fill_report(report, report_len, e.what());
    return GHZSIM_ERR_IO;
  } catch (const std::domain_error& e) {
    fill_report(report, report_len, e.what());
    return GHZSIM_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    fill_report(report, report_len, e.what());
    return GHZSIM_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    fill_report(report, report_len, e.what());
    return GHZSIM_ERR_INTERNAL;
  }
}

void to_c_row(const ghzsim::SweepRow& row, ghzsim_row* out) {
  std::memset(out, 0, sizeof(*out));
  std::snprintf(out->protocol, sizeof(out->protocol), "%s",
                ghzsim::protocol_name(row.protocol));
  out->n_spins = row.n_spins;
  out->tau = row.tau;
  out->omega = row.omega;
  out->trials = row.trials;
  out->t_ex = row.t_ex;
  out->lambda_used = row.lambda;
  out->p_plus_y = row.p_plus_y;
  out->est_mean = row.est_mean;
  out->est_bias = row.est_bias;
  out->est_std = row.est_std;
  out->rsd = row.rsd;
  out->heisenberg_ref = row.heisenberg_ref;
  out->delta_sum = row.delta_sum;
  out->seed = row.seed;
}

} // namespace

extern "C" {

const char* ghzsim_status_name(ghzsim_status status) {
  switch (status) {
    case GHZSIM_OK: return "ok";
    case GHZSIM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GHZSIM_ERR_INFEASIBLE_BUDGET: return "infeasible budget";
    case GHZSIM_ERR_CAPACITY: return "capacity exceeded";
    case GHZSIM_ERR_DOMAIN: return "domain error";
    case GHZSIM_ERR_PARSE: return "parse error";
    case GHZSIM_ERR_IO: return "io error";
    case GHZSIM_ERR_CHECK_FAILED: return "check failed";
    case GHZSIM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

ghzsim_config* ghzsim_config_new(void) {
  return new (std::nothrow) ghzsim_config{};
}

void ghzsim_config_free(ghzsim_config* cfg) { delete cfg; }

ghzsim_status ghzsim_config_parse_text(ghzsim_config* cfg, const char* text,
                                       char* report, size_t report_len) {
  if (!cfg || !text) {
    fill_report(report, report_len, "null argument");
    return GHZSIM_ERR_INVALID_ARGUMENT;
  }
  return guarded(report, report_len, [&] {
    ghzsim::parse_config_text(cfg->cfg, text);
    return GHZSIM_OK;
  });
}

ghzsim_status ghzsim_config_parse_file(ghzsim_config* cfg, const char* path,
                                       char* report, size_t report_len) {
  if (!cfg || !path) {
    fill_report(report, report_len, "null argument");
    return GHZSIM_ERR_INVALID_ARGUMENT;
  }
  return guarded(report, report_len, [&] {
    ghzsim::parse_config_file(cfg->cfg, path);
    return GHZSIM_OK;
  });
}

ghzsim_status ghzsim_config_set(ghzsim_config* cfg, const char* key,
                                const char* value, char* report,
                                size_t report_len) {
  if (!cfg || !key || !value) {
    fill_report(report, report_len, "null argument");
    return GHZSIM_ERR_INVALID_ARGUMENT;
  }
  return guarded(report, report_len, [&] {
    ghzsim::config_apply(cfg->cfg, key, value, 0);
    return GHZSIM_OK;
  });
}

ghzsim_status ghzsim_run_row(const ghzsim_config* cfg, const char* protocol,
                             uint32_t n_spins, ghzsim_row* out, char* report,
                             size_t report_len) {
  if (!cfg || !protocol || !out) {
    fill_report(report, report_len, "null argument");
    return GHZSIM_ERR_INVALID_ARGUMENT;
  }
  return guarded(report, report_len, [&] {
    ghzsim::ProtocolKind kind;
    if (!ghzsim::protocol_from_name(protocol, kind))
      throw std::invalid_argument(
          "unknown protocol '" + std::string(protocol) +
          "': expected conventional, composite or appendix");
    const ghzsim::SweepRow row = ghzsim::run_row(cfg->cfg.sweep, kind, n_spins);
    to_c_row(row, out);
    return GHZSIM_OK;
  });
}

ghzsim_status ghzsim_sweep_csv(const ghzsim_config* cfg, const char* out_path,
                               char* report, size_t report_len) {
  if (!cfg) {
    fill_report(report, report_len, "null argument");
    return GHZSIM_ERR_INVALID_ARGUMENT;
  }
  return guarded(report, report_len, [&] {
    const ghzsim::SweepResult result = ghzsim::run_sweep(cfg->cfg.sweep);
    std::string notes;
    for (const std::string& e : result.errors) {
      if (!notes.empty()) notes += "; ";
      notes += "skipped " + e;
    }
    if (result.rows.empty() && !result.errors.empty())
      throw ghzsim::InfeasibleBudget(notes);
    const std::string path = out_path ? std::string(out_path) : cfg->cfg.output;
    ghzsim::write_rows(path, result.rows, cfg->cfg.sep);
    fill_report(report, report_len, notes);
    return GHZSIM_OK;
  });
}

ghzsim_status ghzsim_figures_csv(const ghzsim_config* cfg, int which,
                                 const char* out_base, char* report,
                                 size_t report_len) {
  if (!cfg) {
    fill_report(report, report_len, "null argument");
    return GHZSIM_ERR_INVALID_ARGUMENT;
  }
  return guarded(report, report_len, [&] {
    const std::string base =
        out_base ? std::string(out_base) : "figure" + std::to_string(which);
    const std::vector<std::string> paths =
        ghzsim::reproduce_figure(cfg->cfg.sweep, which, base, cfg->cfg.sep);
    std::string msg = "wrote";
    for (size_t i = 0; i < paths.size(); ++i)
      msg += (i ? ", " : " ") + paths[i];
    fill_report(report, report_len, msg);
    return GHZSIM_OK;
  });
}

ghzsim_status ghzsim_check(const ghzsim_config* cfg, const char* oracle,
                           char* report, size_t report_len) {
  if (!cfg || !oracle) {
    fill_report(report, report_len, "null argument");
    return GHZSIM_ERR_INVALID_ARGUMENT;
  }
  return guarded(report, report_len, [&] {
    const std::string which(oracle);
    ghzsim::CheckReport result;
    if (which == "dense")
      result = ghzsim::check_dense_oracle(cfg->cfg.sweep.master_seed, 100, 8,
                                          1e-10);
    else if (which == "labframe")
      result = ghzsim::check_labframe_oracle();
    else if (which == "slope")
      result = ghzsim::check_slope_oracle(cfg->cfg.sweep.phi1);
    else
      throw std::invalid_argument("unknown oracle '" + which +
                                  "': expected dense, labframe or slope");
    fill_report(report, report_len, result.detail);
    return result.ok ? GHZSIM_OK : GHZSIM_ERR_CHECK_FAILED;
  });
}

size_t ghzsim_csv_header(char sep, char* buf, size_t len) {
  const std::string header = ghzsim::csv_header(sep);
  fill_report(buf, len, header);
  return header.size();
}

size_t ghzsim_row_format(const ghzsim_row* row, char sep, char* buf,
                         size_t len) {
  if (!row) {
    fill_report(buf, len, "");
    return 0;
  }
  const std::string line = ghzsim::format_fields(
      row->protocol, row->n_spins, row->tau, row->omega, row->trials,
      row->t_ex, row->lambda_used, row->p_plus_y, row->est_mean, row->est_bias,
      row->est_std, row->rsd, row->heisenberg_ref, row->delta_sum, row->seed,
      sep);
  fill_report(buf, len, line);
  return line.size();
}

} // extern "C"

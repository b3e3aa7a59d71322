// Command-line front end. Everything below talks to the simulator through
// the C API in ghzsim.h only.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ghzsim.h"

namespace {

constexpr size_t kReportLen = 16384;

int exit_code_for(ghzsim_status status) {
  switch (status) {
    case GHZSIM_OK: return 0;
    case GHZSIM_ERR_INVALID_ARGUMENT:
    case GHZSIM_ERR_PARSE: return 2; // usage error
    default: return 1;               // computation, check or io failure
  }
}

struct ConfigHandle {
  ghzsim_config* cfg = ghzsim_config_new();
  ~ConfigHandle() { ghzsim_config_free(cfg); }
};

// applies --key value overrides collected as (key, value) pairs
int apply_overrides(ghzsim_config* cfg,
                    const std::vector<std::pair<std::string, std::string>>&
                        overrides) {
  char report[kReportLen];
  for (const auto& [key, value] : overrides) {
    const ghzsim_status status =
        ghzsim_config_set(cfg, key.c_str(), value.c_str(), report,
                          sizeof(report));
    if (status != GHZSIM_OK) {
      std::fprintf(stderr, "error: %s\n", report);
      return exit_code_for(status);
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"GHZ-state magnetometry simulator"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "config file with key = value lines")
      ->check(CLI::ExistingFile);

  // options shared by the run/sweep/figures subcommands, applied as
  // config-key overrides after the config file is read
  std::vector<std::pair<std::string, std::string>> overrides;
  auto add_override = [&overrides](CLI::App* cmd, const char* flag,
                                   const char* key, const char* help) {
    cmd->add_option_function<std::string>(
        flag,
        [&overrides, key = std::string(key)](const std::string& value) {
          overrides.emplace_back(key, value);
        },
        help);
  };

  auto* run = app.add_subcommand("run", "run one protocol instance");
  std::string run_protocol;
  uint32_t run_n = 0;
  run->add_option("--protocol", run_protocol,
                  "conventional, composite or appendix")
      ->required();
  run->add_option("--n", run_n, "number of memory spins")->required();

  auto* sweep = app.add_subcommand("sweep", "run the configured N sweep");
  auto* figures =
      app.add_subcommand("figures", "write figure datasets (two panels)");
  int figures_which = 0;
  figures->add_option("--which", figures_which, "figure number, 1 or 2")
      ->required();
  std::string figures_base;
  figures->add_option("--out", figures_base,
                      "output base path (default figure<which>)");

  auto* check = app.add_subcommand("check", "run an oracle cross-check");
  std::string check_oracle;
  check->add_option("--oracle", check_oracle, "dense, labframe or slope")
      ->required();

  for (CLI::App* cmd : {run, sweep, figures}) {
    add_override(cmd, "--tau", "tau", "total time budget per trial");
    add_override(cmd, "--omega", "omega", "true field strength");
    add_override(cmd, "--trials", "trials", "repetitions M");
    add_override(cmd, "--phi1", "phi1", "composite base phase");
    add_override(cmd, "--seed", "master_seed", "master seed");
    add_override(cmd, "--detuning", "detuning",
                 "'uniform X', 'iid LO HI' or 'explicit A,B,...'");
    add_override(cmd, "--format", "format", "csv or tsv");
  }
  add_override(sweep, "--protocols", "protocols", "comma-separated protocols");
  add_override(sweep, "--n-values", "n_values", "N list, e.g. 1:1000 or 1,2,4");
  add_override(sweep, "--out", "output", "output file (default stdout)");
  add_override(check, "--seed", "master_seed", "master seed");
  add_override(check, "--phi1", "phi1", "composite base phase");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  ConfigHandle handle;
  if (!handle.cfg) {
    std::fprintf(stderr, "error: out of memory\n");
    return 1;
  }
  char report[kReportLen];
  if (!config_path.empty()) {
    const ghzsim_status status = ghzsim_config_parse_file(
        handle.cfg, config_path.c_str(), report, sizeof(report));
    if (status != GHZSIM_OK) {
      std::fprintf(stderr, "error: %s\n", report);
      return exit_code_for(status);
    }
  }
  if (const int rc = apply_overrides(handle.cfg, overrides); rc != 0)
    return rc;

  if (run->parsed()) {
    ghzsim_row row;
    const ghzsim_status status = ghzsim_run_row(
        handle.cfg, run_protocol.c_str(), run_n, &row, report, sizeof(report));
    if (status != GHZSIM_OK) {
      std::fprintf(stderr, "error: %s\n", report);
      return exit_code_for(status);
    }
    char line[kReportLen];
    ghzsim_csv_header(',', line, sizeof(line));
    std::printf("%s\n", line);
    ghzsim_row_format(&row, ',', line, sizeof(line));
    std::printf("%s\n", line);
    return 0;
  }

  if (sweep->parsed()) {
    // NULL path defers to the 'output' config key (stdout when unset)
    const ghzsim_status status =
        ghzsim_sweep_csv(handle.cfg, nullptr, report, sizeof(report));
    if (status != GHZSIM_OK) {
      std::fprintf(stderr, "error: %s\n", report);
      return exit_code_for(status);
    }
    if (report[0] != '\0') std::fprintf(stderr, "warning: %s\n", report);
    return 0;
  }

  if (figures->parsed()) {
    const std::string base = figures_base.empty()
                                 ? "figure" + std::to_string(figures_which)
                                 : figures_base;
    const ghzsim_status status = ghzsim_figures_csv(
        handle.cfg, figures_which, base.c_str(), report, sizeof(report));
    if (status != GHZSIM_OK) {
      std::fprintf(stderr, "error: %s\n", report);
      return exit_code_for(status);
    }
    std::printf("%s\n", report);
    return 0;
  }

  if (check->parsed()) {
    const ghzsim_status status = ghzsim_check(handle.cfg, check_oracle.c_str(),
                                              report, sizeof(report));
    std::printf("%s\n", report);
    if (status == GHZSIM_OK) {
      std::printf("check passed\n");
      return 0;
    }
    std::fprintf(stderr, "check failed: %s\n", ghzsim_status_name(status));
    return exit_code_for(status);
  }

  return 2;
}

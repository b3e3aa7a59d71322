#pragma once

#include <string>

#include "sweep.hpp"

namespace ghzsim {

// Full front-end configuration: sweep parameters plus output options.
// Every key has a default, so an empty config file is valid.
struct RunConfig {
  SweepConfig sweep = default_sweep_config();
  std::string output; // empty means stdout
  char sep = ',';     // ',' for csv, '\t' for tsv
  int verbosity = 0;
};

// Applies one `key = value` pair. line > 0 adds a "(line N)" suffix to
// messages; pass line = 0 for programmatic sets. Unknown keys are errors.
void config_apply(RunConfig& config, const std::string& key,
                  const std::string& value, int line);

// `key = value` lines, '#' starts a comment anywhere on a line.
void parse_config_text(RunConfig& config, const std::string& text);
void parse_config_file(RunConfig& config, const std::string& path);

} // namespace ghzsim

#include "config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

#include "csv.hpp"
#include "errors.hpp"

namespace ghzsim {

namespace {

std::string line_suffix(int line) {
  return line > 0 ? " (line " + std::to_string(line) + ")" : "";
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            int line, const std::string& why) {
  throw ParseError("invalid value '" + value + "' for key '" + key + "'" +
                   line_suffix(line) + ": " + why);
}

std::string trim(const std::string& s) {
  const size_t from = s.find_first_not_of(" \t\r");
  if (from == std::string::npos) return {};
  const size_t to = s.find_last_not_of(" \t\r");
  return s.substr(from, to - from + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (;;) {
    const size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(trim(s.substr(start)));
      return out;
    }
    out.push_back(trim(s.substr(start, pos - start)));
    start = pos + 1;
  }
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

double to_double(const std::string& key, const std::string& value, int line) {
  try {
    return parse_double(value);
  } catch (const std::exception&) {
    bad_value(key, value, line, "expected a number");
  }
}

uint64_t to_uint(const std::string& key, const std::string& value, int line) {
  uint64_t out = 0;
  const char* first = value.data();
  const char* last = first + value.size();
  const auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc{} || res.ptr != last)
    bad_value(key, value, line, "expected a non-negative integer");
  return out;
}

uint64_t to_count(const std::string& key, const std::string& value, int line) {
  // accept integers in scientific notation, e.g. trials = 1e6
  const double d = to_double(key, value, line);
  if (!(d >= 1.0) || d > 1.8e19 || d != std::floor(d))
    bad_value(key, value, line, "expected a positive integer count");
  return static_cast<uint64_t>(d);
}

std::vector<uint32_t> to_n_values(const std::string& key,
                                  const std::string& value, int line) {
  std::vector<uint32_t> out;
  for (const std::string& token : split(value, ',')) {
    if (token.empty()) bad_value(key, value, line, "empty list entry");
    const std::vector<std::string> parts = split(token, ':');
    if (parts.size() == 1) {
      out.push_back(static_cast<uint32_t>(to_count(key, parts[0], line)));
    } else if (parts.size() == 2 || parts.size() == 3) {
      const auto lo = static_cast<uint32_t>(to_count(key, parts[0], line));
      const auto hi = static_cast<uint32_t>(to_count(key, parts[1], line));
      const auto step =
          parts.size() == 3
              ? static_cast<uint32_t>(to_count(key, parts[2], line))
              : 1u;
      if (hi < lo) bad_value(key, value, line, "range end below start");
      for (uint64_t n = lo; n <= hi; n += step)
        out.push_back(static_cast<uint32_t>(n));
    } else {
      bad_value(key, value, line, "expected N, lo:hi or lo:hi:step");
    }
  }
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i] <= out[i - 1])
      bad_value(key, value, line, "values must be strictly increasing");
  return out;
}

std::vector<ProtocolKind> to_protocols(const std::string& key,
                                       const std::string& value, int line) {
  std::vector<ProtocolKind> out;
  for (const std::string& token : split(value, ',')) {
    ProtocolKind kind;
    if (!protocol_from_name(token, kind))
      bad_value(key, value, line,
                "expected conventional, composite or appendix");
    for (ProtocolKind seen : out)
      if (seen == kind) bad_value(key, value, line, "duplicate protocol");
    out.push_back(kind);
  }
  if (out.empty()) bad_value(key, value, line, "empty protocol list");
  return out;
}

DetuningModel to_detuning(const std::string& key, const std::string& value,
                          int line) {
  const std::vector<std::string> tokens = split_ws(value);
  DetuningModel model;
  if (tokens.size() == 2 && tokens[0] == "uniform") {
    model.kind = DetuningKind::UNIFORM;
    model.value = to_double(key, tokens[1], line);
    return model;
  }
  if (tokens.size() == 3 && tokens[0] == "iid") {
    model.kind = DetuningKind::IID_UNIFORM;
    model.lo = to_double(key, tokens[1], line);
    model.hi = to_double(key, tokens[2], line);
    if (model.lo > model.hi) bad_value(key, value, line, "lo above hi");
    return model;
  }
  if (tokens.size() == 2 && tokens[0] == "explicit") {
    model.kind = DetuningKind::EXPLICIT;
    for (const std::string& v : split(tokens[1], ','))
      model.values.push_back(to_double(key, v, line));
    if (model.values.empty()) bad_value(key, value, line, "empty list");
    return model;
  }
  bad_value(key, value, line,
            "expected 'uniform X', 'iid LO HI' or 'explicit A,B,...'");
}

} // namespace

void config_apply(RunConfig& config, const std::string& key,
                  const std::string& value, int line) {
  if (key == "tau") {
    const double tau = to_double(key, value, line);
    if (!(tau > 0.0)) bad_value(key, value, line, "must be positive");
    config.sweep.tau = tau;
  } else if (key == "omega") {
    config.sweep.omega = to_double(key, value, line);
  } else if (key == "trials") {
    config.sweep.trials = to_count(key, value, line);
  } else if (key == "phi1") {
    config.sweep.phi1 = to_double(key, value, line);
  } else if (key == "master_seed") {
    config.sweep.master_seed = to_uint(key, value, line);
  } else if (key == "protocols") {
    config.sweep.protocols = to_protocols(key, value, line);
  } else if (key == "n_values") {
    config.sweep.n_values = to_n_values(key, value, line);
  } else if (key == "detuning") {
    config.sweep.detuning = to_detuning(key, value, line);
  } else if (key == "output") {
    config.output = value;
  } else if (key == "format") {
    if (value == "csv") config.sep = ',';
    else if (value == "tsv") config.sep = '\t';
    else bad_value(key, value, line, "expected csv or tsv");
  } else if (key == "verbosity") {
    const uint64_t v = to_uint(key, value, line);
    if (v > 2) bad_value(key, value, line, "expected 0, 1 or 2");
    config.verbosity = static_cast<int>(v);
  } else {
    throw ParseError("unknown key '" + key + "'" + line_suffix(line));
  }
}

void parse_config_text(RunConfig& config, const std::string& text) {
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t end = text.find('\n', start);
    std::string line = end == std::string::npos
                           ? text.substr(start)
                           : text.substr(start, end - start);
    ++line_no;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (!line.empty()) {
      const size_t eq = line.find('=');
      if (eq == std::string::npos)
        throw ParseError("expected 'key = value'" + line_suffix(line_no));
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty())
        throw ParseError("missing key" + line_suffix(line_no));
      config_apply(config, key, value, line_no);
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
}

void parse_config_file(RunConfig& config, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw IoError("cannot open config file '" + path + "'");
  std::string text;
  char buf[4096];
  size_t got;
  while ((got = std::fread(buf, 1, sizeof(buf), f)) > 0) text.append(buf, got);
  std::fclose(f);
  parse_config_text(config, text);
}

} // namespace ghzsim

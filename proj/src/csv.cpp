#include "csv.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <system_error>

#include "errors.hpp"

namespace ghzsim {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last)
    throw std::invalid_argument("not a number: '" + text + "'");
  return value;
}

const char* const kCsvColumns[15] = {
    "protocol", "N",        "tau",      "omega",   "M",
    "t_ex",     "lambda",   "p_plus_y", "est_mean", "est_bias",
    "est_std",  "rsd",      "heisenberg_ref", "delta_sum", "seed"};

std::string csv_header(char sep) {
  std::string out;
  for (int i = 0; i < 15; ++i) {
    if (i) out.push_back(sep);
    out += kCsvColumns[i];
  }
  return out;
}

std::string format_fields(const char* protocol, uint32_t n_spins, double tau,
                          double omega, uint64_t trials, double t_ex,
                          double lambda, double p_plus_y, double est_mean,
                          double est_bias, double est_std, double rsd,
                          double heisenberg_ref, double delta_sum,
                          uint64_t seed, char sep) {
  std::string out;
  out += protocol;
  out.push_back(sep);
  out += std::to_string(n_spins);
  out.push_back(sep);
  out += format_double(tau);
  out.push_back(sep);
  out += format_double(omega);
  out.push_back(sep);
  out += std::to_string(trials);
  out.push_back(sep);
  out += format_double(t_ex);
  out.push_back(sep);
  out += format_double(lambda);
  out.push_back(sep);
  out += format_double(p_plus_y);
  out.push_back(sep);
  out += format_double(est_mean);
  out.push_back(sep);
  out += format_double(est_bias);
  out.push_back(sep);
  out += format_double(est_std);
  out.push_back(sep);
  out += format_double(rsd);
  out.push_back(sep);
  out += format_double(heisenberg_ref);
  out.push_back(sep);
  out += format_double(delta_sum);
  out.push_back(sep);
  out += std::to_string(seed);
  return out;
}

std::string format_row(const SweepRow& row, char sep) {
  return format_fields(protocol_name(row.protocol), row.n_spins, row.tau,
                       row.omega, row.trials, row.t_ex, row.lambda,
                       row.p_plus_y, row.est_mean, row.est_bias, row.est_std,
                       row.rsd, row.heisenberg_ref, row.delta_sum, row.seed,
                       sep);
}

void write_rows(const std::string& path, const std::vector<SweepRow>& rows,
                char sep) {
  std::string text = csv_header(sep);
  text.push_back('\n');
  for (const SweepRow& row : rows) {
    text += format_row(row, sep);
    text.push_back('\n');
  }
  if (path.empty()) {
    if (std::fwrite(text.data(), 1, text.size(), stdout) != text.size())
      throw IoError("write failed on stdout");
    std::fflush(stdout);
    return;
  }
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  const size_t written = std::fwrite(text.data(), 1, text.size(), f);
  const bool close_ok = std::fclose(f) == 0;
  if (written != text.size() || !close_ok)
    throw IoError("write failed on '" + path + "'");
}

} // namespace ghzsim

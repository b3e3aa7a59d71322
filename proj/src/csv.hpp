#pragma once

#include <string>
#include <vector>

#include "sweep.hpp"

namespace ghzsim {

// shortest decimal form that round-trips to the identical double
std::string format_double(double value);
double parse_double(const std::string& text); // throws on trailing garbage

extern const char* const kCsvColumns[15];

std::string csv_header(char sep);

// one line in schema order; shared by the row writer and the C API formatter
std::string format_fields(const char* protocol, uint32_t n_spins, double tau,
                          double omega, uint64_t trials, double t_ex,
                          double lambda, double p_plus_y, double est_mean,
                          double est_bias, double est_std, double rsd,
                          double heisenberg_ref, double delta_sum,
                          uint64_t seed, char sep);

std::string format_row(const SweepRow& row, char sep);

// writes header + rows; empty path means stdout
void write_rows(const std::string& path, const std::vector<SweepRow>& rows,
                char sep);

} // namespace ghzsim

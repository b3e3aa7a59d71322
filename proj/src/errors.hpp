#pragma once

#include <stdexcept>

namespace ghzsim {

// Typed failures that the C API maps onto distinct status codes.
struct InfeasibleBudget : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace ghzsim

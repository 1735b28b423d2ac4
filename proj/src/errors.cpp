#include "gpssvs/errors.hpp"

#include <cstdio>

namespace gpssvs {

namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

}  // namespace

TruncationError::TruncationError(std::size_t required_n, std::size_t table_length)
    : Error("custom f(n) table exhausted: f(" + std::to_string(required_n) +
            ") required, table has " + std::to_string(table_length) + " entries"),
      required_n_(required_n) {}

ConvergenceError::ConvergenceError(const std::string& what, double achieved_tail)
    : Error(what + " (achieved tail " + format_double(achieved_tail) + ")"),
      achieved_tail_(achieved_tail) {}

DimensionError::DimensionError(std::size_t dim, double tail_weight)
    : Error("oracle dimension " + std::to_string(dim) + " too small: tail weight " +
            format_double(tail_weight)),
      tail_weight_(tail_weight) {}

}  // namespace gpssvs

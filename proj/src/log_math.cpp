#include "gpssvs/log_math.hpp"

#include <algorithm>

namespace gpssvs {

double log_sum_exp(std::span<const double> values) {
  double mx = kNegInf;
  for (double v : values) mx = std::max(mx, v);
  if (mx == kNegInf) return kNegInf;
  CompensatedSum s;
  for (double v : values) s.add(std::exp(v - mx));
  return mx + std::log(s.value());
}

void LogAccumulator::add(double log_term) {
  if (log_term == kNegInf) return;
  if (log_term > max_) {
    scaled_ = scaled_ * std::exp(max_ - log_term) + 1.0;
    max_ = log_term;
  } else {
    scaled_ += std::exp(log_term - max_);
  }
}

double LogAccumulator::log_value() const {
  return max_ == kNegInf ? kNegInf : max_ + std::log(scaled_);
}

double log_tanh(double r) {
  // tanh r = (1 - e^{-2r}) / (1 + e^{-2r})
  const double e = std::exp(-2.0 * r);
  if (r < 0.5) return std::log(std::tanh(r));
  return std::log1p(-e) - std::log1p(e);
}

}  // namespace gpssvs

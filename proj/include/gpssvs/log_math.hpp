#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace gpssvs {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// Real number held as sign and log-magnitude. Zero is (0, -inf).
struct SignedLog {
  double sign = 0.0;
  double log_abs = kNegInf;

  double value() const { return sign == 0.0 ? 0.0 : sign * std::exp(log_abs); }
};

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// log(sum_i exp(v_i)), summed low-to-high index with compensation.
double log_sum_exp(std::span<const double> values);

/// Running log-sum-exp. Rescales when a new maximum arrives.
class LogAccumulator {
 public:
  void add(double log_term);
  double log_value() const;
  bool empty() const { return max_ == kNegInf; }

 private:
  double max_ = kNegInf;
  double scaled_ = 0.0;
};

/// log(tanh r) for r > 0, accurate for small and large r.
double log_tanh(double r);

inline double log_factorial(double n) { return std::lgamma(n + 1.0); }

}  // namespace gpssvs

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "gpssvs/states.hpp"

namespace gpssvs {

/// Uniform axis [lo, hi] with `count` >= 2 nodes.
struct AxisRange {
  double lo = -3.0;
  double hi = 3.0;
  std::size_t count = 121;

  double at(std::size_t i) const;
  double step() const;
};

struct NegativityMetrics {
  double min_value = 0.0;
  /// Trapezoid integral of (|W| - W) / 2.
  double negative_volume = 0.0;
  /// Trapezoid integral of W.
  double integral = 0.0;
};

/// Wigner function sampled on x = Re z, p = Im z. values[ix * p_count + ip].
struct WignerGrid {
  AxisRange x;
  AxisRange p;
  std::vector<double> values;
  SqueezeSpec spec{0.0, 0.0};
  Nonlinearity nl = Nonlinearity::harmonic();
  NegativityMetrics metrics;

  double at(std::size_t ix, std::size_t ip) const { return values[ix * p.count + ip]; }
};

/// W(z) from the Laguerre closed form of the coefficient double sum.
double wigner_point(const FockExpansion& state, std::complex<double> z);

/// W(z) = (2/pi) sum_k (-1)^k |<k|D(-z)|psi>|^2.
double wigner_point_oracle(const FockExpansion& state, std::complex<double> z);

/// Evaluates wigner_point on every node (in parallel) and fills the metrics.
WignerGrid wigner_grid(const FockExpansion& state, const AxisRange& x, const AxisRange& p);

NegativityMetrics negativity_metrics(const WignerGrid& grid);

}  // namespace gpssvs

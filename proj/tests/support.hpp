#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "gpssvs/deform.hpp"
#include "gpssvs/states.hpp"

namespace gpssvs::testing {

inline Nonlinearity pt() { return Nonlinearity::poschl_teller(1.5, 1.5); }
inline Nonlinearity harm() { return Nonlinearity::harmonic(); }

/// Componentwise max |a_j - b_j| over the union of supports (missing entries are 0).
inline double max_coeff_diff(const FockExpansion& a, const FockExpansion& b) {
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  const std::size_t n = std::max(ca.size(), cb.size());
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::complex<double> x = j < ca.size() ? ca[j] : 0.0;
    const std::complex<double> y = j < cb.size() ? cb[j] : 0.0;
    worst = std::max(worst, std::abs(x - y));
  }
  return worst;
}

}  // namespace gpssvs::testing

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpssvs/states.hpp"

namespace gpssvs {

/// <A^2>, <A^dagger A>, <A A^dagger>. <A^dagger^2> is the conjugate of <A^2>;
/// <A> and <A^dagger> vanish by parity.
struct LadderMoments {
  std::complex<double> exp_A2;
  double exp_AdA = 0.0;
  double exp_AAd = 0.0;
};

struct DistributionMoments {
  double exp_AdA = 0.0;
  double exp_AAd = 0.0;
  double mean_n = 0.0;
  double mean_n2 = 0.0;
};

struct QuadratureReport {
  std::complex<double> exp_A2;
  double exp_AdA = 0.0;
  double exp_AAd = 0.0;
  double var_x = 0.0;
  double var_p = 0.0;
  /// (1/2)|<[X, P]>| in the same state.
  double robertson_rhs = 0.0;
  bool x_squeezed = false;
  bool p_squeezed = false;
};

struct NumberStatsReport {
  double mean_N = 0.0;
  double mean_N2 = 0.0;
  double n_squeeze = 0.0;
  /// Absent when <N> = 0.
  std::optional<double> mandel_q;
  /// Largest relative gap between the factorized and distribution routes for
  /// <N> and <N^2>; zero when only one route exists.
  double route_discrepancy = 0.0;
};

/// Ladder moments from the closed-form series. Needs a state built by
/// `squeezed_vacuum`/`pssvs`: the series are re-derived from its SqueezeSpec
/// and summed over the same retained index set as the state.
LadderMoments expectation_moments(const FockExpansion& state, std::size_t nmax = 100000);

/// Diagonal-operator moments from the photon distribution.
DistributionMoments moments_from_distribution(const FockExpansion& state);

QuadratureReport quadrature_report(const FockExpansion& state);

/// Photon-number statistics. For Poschl-Teller the factorized number operator
/// route is evaluated too and must agree with the distribution to 1e-10.
NumberStatsReport number_stats(const FockExpansion& state);

enum class Quantity { var_x, var_p, robertson_rhs, n_squeeze, mandel_q };

std::string_view to_string(Quantity q);
Quantity parse_quantity(std::string_view name);

struct SweepAxes {
  std::vector<double> r;
  std::vector<double> theta;
  std::vector<unsigned> m;
  std::vector<Parity> parity;
};

struct SweepRow {
  double r = 0.0;
  double theta = 0.0;
  unsigned m = 0;
  Parity parity = Parity::even;
  Quantity quantity = Quantity::var_x;
  std::optional<double> value;
  /// "ok", or the failure class of this point.
  std::string status;
};

/// Evaluates `quantities` over r x theta x m x parity (row order nested in that
/// order, quantities innermost). Failing points are recorded, not thrown.
std::vector<SweepRow> sweep(const Nonlinearity& nl, const SweepAxes& axes,
                            const std::vector<Quantity>& quantities,
                            const SeriesOptions& opts = {});

}  // namespace gpssvs

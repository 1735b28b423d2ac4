#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gpssvs/deform.hpp"

namespace gpssvs {

enum class Parity { even, odd };

std::string_view to_string(Parity parity);

/// Squeezing magnitude r, phase theta, pair-subtraction index m and parity.
/// Even parity subtracts 2m photons, odd parity 2m + 1.
class SqueezeSpec {
 public:
  SqueezeSpec(double r, double theta, unsigned m = 0, Parity parity = Parity::even);

  double r() const { return r_; }
  /// Reduced to [0, 2pi).
  double theta() const { return theta_; }
  unsigned m() const { return m_; }
  Parity parity() const { return parity_; }
  /// Photons removed from the squeezed vacuum: 2m or 2m + 1.
  unsigned subtracted() const { return 2 * m_ + (parity_ == Parity::odd ? 1u : 0u); }

 private:
  double r_;
  double theta_;
  unsigned m_;
  Parity parity_;
};

/// Numeric knobs shared by every series construction.
struct SeriesOptions {
  double tol = 1e-12;
  std::size_t nmax = 100000;
};

/// Normalized single-parity Fock expansion.
///
/// Entry j multiplies |2j> (even) or |2j+1> (odd). Each coefficient is held as
/// a log-magnitude and a phase; the complex view is materialized from those.
/// The global phase is fixed so the leading nonzero coefficient is real and
/// positive.
class FockExpansion {
 public:
  /// Normalizes and gauge-fixes the given log-magnitudes and phases.
  FockExpansion(Parity parity, std::vector<double> log_mag, std::vector<double> phase,
                SqueezeSpec spec, Nonlinearity nl, double tail_bound, double tol);

  /// Builds from plain amplitudes (normalization and gauge applied here).
  static FockExpansion from_amplitudes(Parity parity,
                                       std::span<const std::complex<double>> amplitudes,
                                       SqueezeSpec spec, Nonlinearity nl, double tail_bound,
                                       double tol);

  Parity parity() const { return parity_; }
  std::size_t truncation() const { return log_mag_.size(); }
  double tail_bound() const { return tail_bound_; }
  /// Tolerance the expansion was built with.
  double tol() const { return tol_; }
  const SqueezeSpec& spec() const { return spec_; }
  const Nonlinearity& nl() const { return nl_; }

  std::span<const double> log_magnitudes() const { return log_mag_; }
  std::span<const double> phases() const { return phase_; }
  std::span<const std::complex<double>> coeffs() const { return coeffs_; }

  /// Fock index carried by entry j.
  std::uint64_t photon_number(std::size_t j) const {
    return 2 * static_cast<std::uint64_t>(j) + (parity_ == Parity::odd ? 1 : 0);
  }

 private:
  Parity parity_;
  std::vector<double> log_mag_;
  std::vector<double> phase_;
  std::vector<std::complex<double>> coeffs_;
  SqueezeSpec spec_;
  Nonlinearity nl_;
  double tail_bound_;
  double tol_;
};

/// Generalized squeezed vacuum from its closed-form Fock coefficients.
FockExpansion squeezed_vacuum(const Nonlinearity& nl, double r, double theta,
                              const SeriesOptions& opts = {});

/// Even or odd generalized photon-subtracted squeezed vacuum.
FockExpansion pssvs(const Nonlinearity& nl, const SqueezeSpec& spec,
                    const SeriesOptions& opts = {});

/// Squeezed vacuum by iterating the two-step coefficient recursion from C_0 = 1.
FockExpansion coefficients_by_recursion(const Nonlinearity& nl, double r, double theta,
                                        const SeriesOptions& opts = {});

/// (photon number, probability) for every retained component.
std::vector<std::pair<std::uint64_t, double>> photon_distribution(const FockExpansion& state);

/// Retained-term count the series for `spec` needs to meet opts.tol.
std::size_t choose_truncation(const Nonlinearity& nl, const SqueezeSpec& spec,
                              const SeriesOptions& opts = {});

}  // namespace gpssvs

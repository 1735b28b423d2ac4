#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "gpssvs/states.hpp"

namespace gpssvs {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Truncated-Fock dense ladder operators.
///   A |n>      = sqrt(n) f(n) |n-1>
///   B^dagger|n> = sqrt(n+1) / f(n+1) |n+1>
struct OperatorWorkspace {
  std::size_t dim = 0;
  ComplexMatrix a;
  ComplexMatrix a_dagger;
  ComplexMatrix b_dagger;
  Nonlinearity nl = Nonlinearity::harmonic();
};

OperatorWorkspace build_workspace(const Nonlinearity& nl, std::size_t dim);

/// Weight the exponential route may leak into the top of the Fock range.
inline constexpr double kOracleTailLimit = 1e-10;

/// exp(1/2 (zeta* A^2 - zeta B^dagger^2)) |0>, renormalized.
/// Throws DimensionError when the top tenth of the Fock range holds more than
/// kOracleTailLimit of the weight.
FockExpansion squeeze_by_exponential(const OperatorWorkspace& ws, double r, double theta);

/// || (cosh r A + e^{i theta} sinh r B^dagger) psi ||, top two rows excluded.
double annihilation_residual(const OperatorWorkspace& ws, const FockExpansion& state, double r,
                             double theta);

/// Applies A `count` times, renormalizes and gauge-fixes.
FockExpansion subtract_photons(const OperatorWorkspace& ws, const FockExpansion& state,
                               unsigned count);

/// Places `state` in the dim-dimensional Fock space (components beyond dim dropped).
ComplexVector embed(const FockExpansion& state, std::size_t dim);

}  // namespace gpssvs

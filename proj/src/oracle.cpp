#include "gpssvs/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "gpssvs/errors.hpp"

namespace gpssvs {

OperatorWorkspace build_workspace(const Nonlinearity& nl, std::size_t dim) {
  if (dim < 2) throw std::invalid_argument("oracle dimension must be at least 2");
  const auto d = static_cast<Eigen::Index>(dim);
  OperatorWorkspace ws;
  ws.dim = dim;
  ws.nl = nl;
  ws.a = ComplexMatrix::Zero(d, d);
  ws.b_dagger = ComplexMatrix::Zero(d, d);
  for (Eigen::Index n = 1; n < d; ++n) {
    const auto un = static_cast<std::size_t>(n);
    ws.a(n - 1, n) = std::sqrt(static_cast<double>(n)) * nl.f(un);
    ws.b_dagger(n, n - 1) = std::sqrt(static_cast<double>(n)) / nl.f(un);
  }
  ws.a_dagger = ws.a.adjoint();
  return ws;
}

ComplexVector embed(const FockExpansion& state, std::size_t dim) {
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  const auto c = state.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    const std::size_t n = state.photon_number(j);
    if (n >= dim) break;
    v(static_cast<Eigen::Index>(n)) = c[j];
  }
  return v;
}

namespace {

FockExpansion extract(const ComplexVector& v, Parity parity, SqueezeSpec spec,
                      const Nonlinearity& nl, double tail) {
  const Eigen::Index start = parity == Parity::odd ? 1 : 0;
  std::vector<std::complex<double>> amps;
  for (Eigen::Index n = start; n < v.size(); n += 2) amps.push_back(v(n));
  // Drop trailing exact zeros so truncation() reflects the real support.
  while (amps.size() > 1 && amps.back() == std::complex<double>{}) amps.pop_back();
  return FockExpansion::from_amplitudes(parity, amps, spec, nl, tail, 0.0);
}

}  // namespace

FockExpansion squeeze_by_exponential(const OperatorWorkspace& ws, double r, double theta) {
  const SqueezeSpec spec(r, theta);
  const std::complex<double> zeta = std::polar(r, spec.theta());
  const ComplexMatrix generator =
      0.5 * (std::conj(zeta) * ws.a * ws.a - zeta * ws.b_dagger * ws.b_dagger);
  const ComplexVector v = generator.exp().col(0);

  const double total = v.squaredNorm();
  const auto d = static_cast<Eigen::Index>(ws.dim);
  const Eigen::Index band = std::max<Eigen::Index>(2, d / 10);
  const double tail = v.tail(band).squaredNorm() / total;
  if (!(tail < kOracleTailLimit)) throw DimensionError(ws.dim, tail);
  return extract(v, Parity::even, spec, ws.nl, tail);
}

double annihilation_residual(const OperatorWorkspace& ws, const FockExpansion& state, double r,
                             double theta) {
  const ComplexVector v = embed(state, ws.dim);
  const std::complex<double> lam = std::polar(std::sinh(r), theta);
  const ComplexVector out = std::cosh(r) * (ws.a * v) + lam * (ws.b_dagger * v);
  return out.head(static_cast<Eigen::Index>(ws.dim) - 2).norm();
}

FockExpansion subtract_photons(const OperatorWorkspace& ws, const FockExpansion& state,
                               unsigned count) {
  if (count == 0) return state;
  ComplexVector v = embed(state, ws.dim);
  const double before = v.norm();
  for (unsigned i = 0; i < count; ++i) v = ws.a * v;
  if (!(v.norm() >= 1e-14 * before))
    throw AnnihilatedStateError("photon subtraction annihilated the state");

  const SqueezeSpec& in = state.spec();
  const unsigned total = in.subtracted() + count;
  const Parity parity = (state.parity() == Parity::odd) != (count % 2 == 1) ? Parity::odd
                                                                             : Parity::even;
  const SqueezeSpec spec(in.r(), in.theta(), total / 2,
                         total % 2 ? Parity::odd : Parity::even);
  return extract(v, parity, spec, ws.nl, state.tail_bound());
}

}  // namespace gpssvs

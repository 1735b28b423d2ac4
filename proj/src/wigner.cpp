#include "gpssvs/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gpssvs/errors.hpp"
#include "gpssvs/laguerre.hpp"
#include "gpssvs/log_math.hpp"
#include "gpssvs/parallel.hpp"

namespace gpssvs {

namespace {

constexpr double kImagResidueLimit = 1e-8;
constexpr double kTwoOverPi = 2.0 / std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct ComplexSum {
  CompensatedSum re, im;
  void add(double mag, double phase) {
    re.add(mag * std::cos(phase));
    im.add(mag * std::sin(phase));
  }
};

}  // namespace

double AxisRange::at(std::size_t i) const {
  if (i + 1 == count) return hi;
  return lo + step() * static_cast<double>(i);
}

double AxisRange::step() const { return (hi - lo) / static_cast<double>(count - 1); }

// W(z) = (2/pi) e^{-2|z|^2} sum_{n1,n2} c_{n1} c*_{n2} (-1)^{n1} sqrt(min!/max!)
//        (2z)^{n2-n1} or (2z*)^{n1-n2}  L_min^{|n1-n2|}(4|z|^2)
// The (-1)^{n1} is what the derivative kernel leaves once d/dgamma* acts n2
// times; for even n1 = n2 mod 2 it is +1, for the odd family -1.
double wigner_point(const FockExpansion& state, std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("wigner_point needs a finite z");
  const std::size_t count = state.truncation();
  const auto lm = state.log_magnitudes();
  const auto ph = state.phases();
  const unsigned offset = state.parity() == Parity::odd ? 1 : 0;
  const double sign_n1 = offset ? -1.0 : 1.0;

  const double az = std::abs(z);
  const double arg_z = std::arg(z);
  const double x = 4.0 * az * az;
  const double log_2az = az > 0.0 ? std::log(2.0 * az) : kNegInf;
  const double gauss = -2.0 * az * az;

  std::vector<double> lfact(count);
  for (std::size_t j = 0; j < count; ++j) lfact[j] = log_factorial(2.0 * j + offset);

  ComplexSum sum;
  for (std::size_t d = 0; d < count; ++d) {
    if (az == 0.0 && d > 0) break;
    const unsigned alpha = static_cast<unsigned>(2 * d);
    const unsigned top = static_cast<unsigned>(2 * (count - 1 - d) + offset);
    const std::vector<SignedLog> lag = laguerre_sequence_log(top, alpha, x);
    const double shift = d == 0 ? 0.0 : alpha * log_2az;
    for (std::size_t j1 = 0; j1 + d < count; ++j1) {
      const std::size_t j2 = j1 + d;
      const SignedLog& L = lag[2 * j1 + offset];
      if (L.sign == 0.0 || lm[j1] == kNegInf || lm[j2] == kNegInf) continue;
      const double mag = std::exp(lm[j1] + lm[j2] + 0.5 * (lfact[j1] - lfact[j2]) + shift +
                                  gauss + L.log_abs);
      const double s = L.sign * sign_n1;
      const double phase = ph[j1] - ph[j2] + alpha * arg_z;
      sum.add(s * mag, phase);
      if (d > 0) sum.add(s * mag, -phase);
    }
  }
  const double re = kTwoOverPi * sum.re.value();
  const double im = kTwoOverPi * sum.im.value();
  if (std::abs(im) > kImagResidueLimit)
    throw ConsistencyError("Wigner double sum left an imaginary residue");
  return re;
}

// <k|D(alpha)|n> = sqrt(n!/k!) alpha^{k-n} e^{-|alpha|^2/2} L_n^{(k-n)}(|alpha|^2),   k >= n
//               = sqrt(k!/n!) (-alpha*)^{n-k} e^{-|alpha|^2/2} L_k^{(n-k)}(|alpha|^2), k <  n
double wigner_point_oracle(const FockExpansion& state, std::complex<double> z) {
  const std::complex<double> alpha = -z;
  const double y = std::norm(alpha);
  const double a_abs = std::abs(alpha);
  const auto coeffs = state.coeffs();
  const std::size_t count = coeffs.size();
  const std::size_t n_top = state.photon_number(count - 1);

  if (a_abs == 0.0) {
    CompensatedSum parity;
    for (std::size_t j = 0; j < count; ++j)
      parity.add((state.photon_number(j) % 2 ? -1.0 : 1.0) * std::norm(coeffs[j]));
    return kTwoOverPi * parity.value();
  }

  const double log_a = std::log(a_abs);
  const double arg_up = std::arg(alpha);
  const double arg_down = std::arg(-std::conj(alpha));
  const double reach = std::sqrt(static_cast<double>(n_top)) + a_abs;
  std::size_t k_count = static_cast<std::size_t>(reach * reach + 12.0 * reach + 40.0);

  double last_deficit = 1.0;
  for (;;) {
    std::vector<double> lfact(k_count + n_top + 1);
    for (std::size_t i = 0; i < lfact.size(); ++i) lfact[i] = log_factorial(static_cast<double>(i));
    std::vector<std::complex<double>> b(k_count);
    // k = n + delta
    for (std::size_t delta = 0; delta < k_count; ++delta) {
      const std::vector<SignedLog> lag =
          laguerre_sequence_log(static_cast<unsigned>(n_top), static_cast<unsigned>(delta), y);
      const std::complex<double> turn = std::polar(1.0, delta * arg_up);
      const double base = (delta ? delta * log_a : 0.0) - 0.5 * y;
      for (std::size_t j = 0; j < count; ++j) {
        const std::size_t n = state.photon_number(j);
        const std::size_t k = n + delta;
        if (k >= k_count) break;
        const SignedLog& L = lag[n];
        if (L.sign == 0.0) continue;
        const double mag = std::exp(0.5 * (lfact[n] - lfact[k]) + base + L.log_abs);
        b[k] += coeffs[j] * (L.sign * mag) * turn;
      }
    }
    // k = n - gap
    for (std::size_t gap = 1; gap <= n_top; ++gap) {
      const std::vector<SignedLog> lag = laguerre_sequence_log(
          static_cast<unsigned>(n_top - gap), static_cast<unsigned>(gap), y);
      const std::complex<double> turn = std::polar(1.0, gap * arg_down);
      const double base = gap * log_a - 0.5 * y;
      for (std::size_t j = 0; j < count; ++j) {
        const std::size_t n = state.photon_number(j);
        if (n < gap) continue;
        const std::size_t k = n - gap;
        const SignedLog& L = lag[k];
        if (L.sign == 0.0) continue;
        const double mag = std::exp(0.5 * (lfact[k] - lfact[n]) + base + L.log_abs);
        b[k] += coeffs[j] * (L.sign * mag) * turn;
      }
    }
    CompensatedSum norm, parity;
    for (std::size_t k = 0; k < k_count; ++k) {
      const double w = std::norm(b[k]);
      norm.add(w);
      parity.add(k % 2 ? -w : w);
    }
    // Rounding alone leaves a deficit that grows with the number of terms; once
    // doubling stops shrinking it, the rest is not missing weight.
    const double deficit = 1.0 - norm.value();
    const double floor = 1e-13 + 16.0 * static_cast<double>(count) * kEps;
    if (deficit <= floor || deficit > 0.5 * last_deficit || k_count > 4 * (n_top + 1) + 100000)
      return kTwoOverPi * parity.value();
    last_deficit = deficit;
    k_count *= 2;
  }
}

NegativityMetrics negativity_metrics(const WignerGrid& grid) {
  const double hx = grid.x.step();
  const double hp = grid.p.step();
  CompensatedSum integral, negative;
  double min_value = std::numeric_limits<double>::infinity();
  for (std::size_t ix = 0; ix < grid.x.count; ++ix) {
    const double wx = (ix == 0 || ix + 1 == grid.x.count) ? 0.5 * hx : hx;
    for (std::size_t ip = 0; ip < grid.p.count; ++ip) {
      const double wp = (ip == 0 || ip + 1 == grid.p.count) ? 0.5 * hp : hp;
      const double w = grid.at(ix, ip);
      min_value = std::min(min_value, w);
      integral.add(wx * wp * w);
      negative.add(wx * wp * 0.5 * (std::abs(w) - w));
    }
  }
  return {min_value, negative.value(), integral.value()};
}

WignerGrid wigner_grid(const FockExpansion& state, const AxisRange& x, const AxisRange& p) {
  if (x.count < 2 || p.count < 2) throw std::invalid_argument("grid resolution must be >= 2");
  if (!(x.hi > x.lo) || !(p.hi > p.lo)) throw std::invalid_argument("grid range is empty");
  WignerGrid grid{x, p, std::vector<double>(x.count * p.count), state.spec(), state.nl(), {}};
  parallel_for(grid.values.size(), [&](std::size_t idx) {
    const std::size_t ix = idx / p.count;
    const std::size_t ip = idx % p.count;
    grid.values[idx] = wigner_point(state, {x.at(ix), p.at(ip)});
  });
  grid.metrics = negativity_metrics(grid);
  return grid;
}

}  // namespace gpssvs

#include "gpssvs/laguerre.hpp"

#include <cmath>

namespace gpssvs {

namespace {

constexpr double kBig = 1e200;
constexpr double kSmall = 1e-200;
const double kLogBig = std::log(kBig);

SignedLog to_signed_log(double v, double log_scale) {
  if (v == 0.0) return {};
  return {v > 0.0 ? 1.0 : -1.0, std::log(std::abs(v)) + log_scale};
}

}  // namespace

// (n+1) L_{n+1} = (2n + 1 + alpha - x) L_n - (n + alpha) L_{n-1}
std::vector<SignedLog> laguerre_sequence_log(unsigned nmax, unsigned alpha, double x) {
  std::vector<SignedLog> out;
  out.reserve(nmax + 1);
  out.push_back({1.0, 0.0});
  if (nmax == 0) return out;
  const double a = alpha;
  double prev = 1.0;
  double cur = 1.0 + a - x;
  double log_scale = 0.0;
  out.push_back(to_signed_log(cur, 0.0));
  for (unsigned n = 1; n < nmax; ++n) {
    const double next = ((2.0 * n + 1.0 + a - x) * cur - (n + a) * prev) / (n + 1.0);
    prev = cur;
    cur = next;
    if (std::abs(cur) > kBig) {
      prev /= kBig;
      cur /= kBig;
      log_scale += kLogBig;
    } else if (std::abs(cur) < kSmall && std::abs(prev) < kSmall && cur != 0.0) {
      prev *= kBig;
      cur *= kBig;
      log_scale -= kLogBig;
    }
    out.push_back(to_signed_log(cur, log_scale));
  }
  return out;
}

SignedLog laguerre_assoc_log(unsigned n, unsigned alpha, double x) {
  return laguerre_sequence_log(n, alpha, x).back();
}

double laguerre_assoc(unsigned n, unsigned alpha, double x) {
  if (n == 0) return 1.0;
  const double a = alpha;
  double prev = 1.0;
  double cur = 1.0 + a - x;
  for (unsigned k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
    if (std::abs(cur) > 1e300) return laguerre_assoc_log(n, alpha, x).value();
  }
  return cur;
}

}  // namespace gpssvs

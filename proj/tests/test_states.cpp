#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "gpssvs/errors.hpp"
#include "gpssvs/oracle.hpp"
#include "gpssvs/states.hpp"
#include "support.hpp"

using namespace gpssvs;
using gpssvs::testing::harm;
using gpssvs::testing::max_coeff_diff;
using gpssvs::testing::pt;

namespace {

double norm2(const FockExpansion& s) {
  double sum = 0.0;
  for (auto c : s.coeffs()) sum += std::norm(c);
  return sum;
}

// Unnormalized |c_n|^2 of the even PSSVS by direct long double products.
std::vector<long double> brute_weights(const Nonlinearity& nl, double r, unsigned m,
                                       std::size_t count) {
  const long double t = std::tanh(static_cast<long double>(r));
  std::vector<long double> w;
  for (std::size_t n = 0; n < count; ++n) {
    const std::size_t k = m + n;
    long double v = 1.0L;
    for (std::size_t i = 0; i < k; ++i) v *= t * t / 4.0L;
    for (std::size_t i = 1; i <= 2 * k; ++i) v *= static_cast<long double>(i);  // (2k)!
    for (std::size_t i = 1; i <= 2 * k; ++i) v *= static_cast<long double>(i);
    for (std::size_t i = 1; i <= k; ++i) v /= static_cast<long double>(i) * i;  // (k!)^2
    for (std::size_t i = 1; i <= 2 * n; ++i) {
      const long double f = nl.f(i);
      v /= static_cast<long double>(i) * f * f;  // (2n)! f(2n)!^2
    }
    w.push_back(v);
  }
  return w;
}

}  // namespace

TEST_CASE("squeezed_vacuum: harmonic vacuum amplitude is cosh^{-1/2} r") {
  const auto s = squeezed_vacuum(harm(), 1.0, 0.0);
  CHECK(s.parity() == Parity::even);
  CHECK(s.coeffs()[0].real() == doctest::Approx(0.8050181821945920).epsilon(1e-12));
  CHECK(std::abs(norm2(s) - 1.0) < 1e-12);
}

TEST_CASE("squeezed_vacuum: r = 0 is exactly the vacuum") {
  for (double theta : {0.0, 1.0, 5.0}) {
    for (const auto& nl : {harm(), pt()}) {
      const auto s = squeezed_vacuum(nl, 0.0, theta);
      REQUIRE(s.truncation() == 1);
      CHECK(s.coeffs()[0] == std::complex<double>(1.0, 0.0));
    }
  }
}

TEST_CASE("squeezed_vacuum: Poschl-Teller matches the matrix exponential") {
  const auto ws = build_workspace(pt(), 80);
  const auto closed = squeezed_vacuum(pt(), 1.0, 0.0, {.tol = 1e-20});
  const auto expo = squeeze_by_exponential(ws, 1.0, 0.0);
  CHECK(max_coeff_diff(closed, expo) < 1e-8);
}

TEST_CASE("pssvs: m = 0 even reproduces the squeezed vacuum") {
  const auto a = pssvs(harm(), SqueezeSpec(1.0, 0.0, 0, Parity::even));
  const auto b = squeezed_vacuum(harm(), 1.0, 0.0);
  REQUIRE(a.truncation() == b.truncation());
  CHECK(max_coeff_diff(a, b) < 1e-13);
  const auto c = pssvs(pt(), SqueezeSpec(0.7, 2.5, 0, Parity::even));
  const auto d = squeezed_vacuum(pt(), 0.7, 2.5);
  CHECK(max_coeff_diff(c, d) < 1e-13);
}

TEST_CASE("pssvs: odd family at small r is close to |1>") {
  const auto s = pssvs(pt(), SqueezeSpec(0.01, 0.0, 0, Parity::odd));
  CHECK(s.parity() == Parity::odd);
  CHECK(s.photon_number(0) == 1);
  CHECK(s.coeffs()[0].real() == doctest::Approx(1.0).epsilon(1e-4));
  // Leading correction: |c_1 / c_0| = tanh r / sqrt(20) for f^2(n) = n + 3.
  CHECK(std::abs(s.coeffs()[1] / s.coeffs()[0]) ==
        doctest::Approx(std::tanh(0.01) / std::sqrt(20.0)).epsilon(1e-12));
  for (std::size_t j = 2; j < s.truncation(); ++j) CHECK(std::abs(s.coeffs()[j]) < 1e-3);
}

TEST_CASE("pssvs: two-photon subtraction matches the oracle route") {
  const auto ws = build_workspace(pt(), 80);
  const auto via_oracle = subtract_photons(ws, squeeze_by_exponential(ws, 1.0, 0.0), 2);
  const auto series = pssvs(pt(), SqueezeSpec(1.0, 0.0, 1, Parity::even), {.tol = 1e-20});
  CHECK(via_oracle.parity() == Parity::even);
  CHECK(max_coeff_diff(series, via_oracle) < 1e-8);
}

TEST_CASE("pssvs: subtraction from the vacuum is an error") {
  CHECK_THROWS_AS(pssvs(pt(), SqueezeSpec(0.0, 0.0, 1, Parity::even)), AnnihilatedStateError);
  CHECK_THROWS_AS(pssvs(harm(), SqueezeSpec(0.0, 0.0, 0, Parity::odd)), AnnihilatedStateError);
  CHECK(pssvs(pt(), SqueezeSpec(0.0, 0.0, 0, Parity::even)).truncation() == 1);
}

TEST_CASE("coefficients_by_recursion agrees with the closed form") {
  CHECK(max_coeff_diff(coefficients_by_recursion(harm(), 1.0, 0.0),
                       squeezed_vacuum(harm(), 1.0, 0.0)) < 1e-12);
  CHECK(max_coeff_diff(coefficients_by_recursion(pt(), 2.0, 1.0),
                       squeezed_vacuum(pt(), 2.0, 1.0)) < 1e-12);
  const auto vac = coefficients_by_recursion(pt(), 0.0, 3.0);
  CHECK(vac.truncation() == 1);
  CHECK(vac.coeffs()[0] == std::complex<double>(1.0, 0.0));
}

TEST_CASE("photon_distribution") {
  const auto vac = photon_distribution(squeezed_vacuum(pt(), 0.0, 0.0));
  REQUIRE(vac.size() == 1);
  CHECK(vac[0].first == 0);
  CHECK(vac[0].second == 1.0);

  const auto svs = photon_distribution(squeezed_vacuum(harm(), 1.0, 0.0));
  CHECK(svs[0].second == doctest::Approx(0.6480542736638854).epsilon(1e-12));
  double total = 0.0;
  for (auto [n, p] : svs) {
    CHECK(n % 2 == 0);
    total += p;
  }
  CHECK(std::abs(total - 1.0) < 1e-12);

  for (auto [n, p] : photon_distribution(pssvs(pt(), SqueezeSpec(1.2, 0.3, 2, Parity::odd))))
    CHECK(n % 2 == 1);
}

TEST_CASE("choose_truncation") {
  CHECK(choose_truncation(pt(), SqueezeSpec(0.0, 0.0)) == 1);
  CHECK(choose_truncation(harm(), SqueezeSpec(0.0, 2.0)) == 1);

  // Appending one more term changes the norm by less than tol, checked by brute force.
  const std::size_t n = choose_truncation(pt(), SqueezeSpec(1.0, 0.0), {.tol = 1e-14});
  const auto w = brute_weights(pt(), 1.0, 0, n + 1);
  long double head = 0.0L;
  for (std::size_t j = 0; j < n; ++j) head += w[j];
  CHECK(static_cast<double>(w[n] / head) < 1e-14);
  CHECK(static_cast<double>(w[n - 1] / head) >= 1e-14 * 1e-3);

  const auto s = pssvs(pt(), SqueezeSpec(1.0, 0.0), {.tol = 1e-14});
  CHECK(s.truncation() == n);
  CHECK(s.tail_bound() <= 1e-14);

  try {
    (void)choose_truncation(harm(), SqueezeSpec(5.0, 0.0), {.tol = 1e-14});
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.achieved_tail() > 1e-14);
  }
}

TEST_CASE("brute-force weights match the log-space series") {
  const auto s = pssvs(pt(), SqueezeSpec(1.3, 0.0, 2, Parity::even), {.tol = 1e-18});
  const auto w = brute_weights(pt(), 1.3, 2, s.truncation());
  long double total = 0.0L;
  for (auto x : w) total += x;
  for (std::size_t j = 0; j < w.size(); ++j)
    CHECK(std::norm(s.coeffs()[j]) ==
          doctest::Approx(static_cast<double>(w[j] / total)).epsilon(1e-12));
}

TEST_CASE("SqueezeSpec validation and theta reduction") {
  CHECK_THROWS_AS(SqueezeSpec(-0.1, 0.0), std::invalid_argument);
  CHECK(SqueezeSpec(1.0, -1.0).theta() == doctest::Approx(2.0 * std::numbers::pi - 1.0));
  CHECK(SqueezeSpec(1.0, 7.0).theta() == doctest::Approx(7.0 - 2.0 * std::numbers::pi));
  CHECK(SqueezeSpec(1.0, 0.0, 3, Parity::odd).subtracted() == 7);
  CHECK_THROWS_AS(squeezed_vacuum(pt(), 1.0, 0.0, {.tol = 0.0}), std::invalid_argument);
}

TEST_CASE("property: every expansion is normalized and gauge-fixed") {
  for (const auto& nl : {harm(), pt()})
    for (double r : {0.05, 0.5, 1.0, 2.0})
      for (double theta : {0.0, 1.0, 4.0})
        for (unsigned m : {0u, 1u, 3u, 6u})
          for (Parity par : {Parity::even, Parity::odd}) {
            const auto s = pssvs(nl, SqueezeSpec(r, theta, m, par));
            CHECK(std::abs(norm2(s) - 1.0) < 1e-12);
            CHECK(s.coeffs()[0].imag() == 0.0);
            CHECK(s.coeffs()[0].real() > 0.0);
            CHECK(s.tail_bound() <= s.tol());
          }
}

TEST_CASE("property: theta shifts the phase of c_n by n * delta") {
  for (const auto& nl : {harm(), pt()}) {
    const auto base = squeezed_vacuum(nl, 1.1, 0.0);
    for (double delta = 0.0; delta < 2.0 * std::numbers::pi; delta += 0.37) {
      const auto moved = squeezed_vacuum(nl, 1.1, delta);
      REQUIRE(moved.truncation() == base.truncation());
      for (std::size_t n = 0; n < base.truncation(); ++n) {
        const auto expect = base.coeffs()[n] * std::polar(1.0, n * delta);
        CHECK(std::abs(moved.coeffs()[n] - expect) < 1e-12);
      }
    }
  }
}

TEST_CASE("property: exponential-route state is annihilated by mu A + lambda B^dagger") {
  const auto ws = build_workspace(pt(), 80);
  for (double theta : {0.0, 1.0, 4.0}) {
    const auto s = squeeze_by_exponential(ws, 1.2, theta);
    CHECK(annihilation_residual(ws, s, 1.2, theta) < 1e-8);
  }
  const auto wh = build_workspace(harm(), 80);
  CHECK(annihilation_residual(wh, squeeze_by_exponential(wh, 0.5, 2.0), 0.5, 2.0) < 1e-8);
}

TEST_CASE("property: pssvs(m) is A^2 applied to pssvs(m-1)") {
  for (const auto& nl : {harm(), pt()})
    for (Parity par : {Parity::even, Parity::odd})
      for (unsigned m = 1; m <= 4; ++m) {
        const SeriesOptions opts{.tol = 1e-32};
        const auto prev = pssvs(nl, SqueezeSpec(0.9, 1.0, m - 1, par), opts);
        const auto ws = build_workspace(nl, prev.photon_number(prev.truncation() - 1) + 1);
        const auto stepped = subtract_photons(ws, prev, 2);
        const auto direct = pssvs(nl, SqueezeSpec(0.9, 1.0, m, par), opts);
        CHECK(max_coeff_diff(stepped, direct) < 1e-10);
      }
}

TEST_CASE("property: harmonic mean photon number is sinh^2 r") {
  for (double r = 0.1; r <= 2.0 + 1e-9; r += 0.3) {
    const auto s = squeezed_vacuum(harm(), r, 0.7, {.tol = 1e-17});
    double mean = 0.0;
    for (auto [n, p] : photon_distribution(s)) mean += p * static_cast<double>(n);
    CHECK(std::abs(mean - std::sinh(r) * std::sinh(r)) < 1e-10);
  }
}

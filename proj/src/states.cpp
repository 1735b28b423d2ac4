#include "gpssvs/states.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "gpssvs/errors.hpp"
#include "gpssvs/log_math.hpp"

namespace gpssvs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kLn2 = std::log(2.0);

double wrap_phase(double phase) { return std::remainder(phase, kTwoPi); }

struct Term {
  double log_mag;
  double phase;
};

struct Series {
  std::vector<double> log_mag;
  std::vector<double> phase;
  double tail = 0.0;
};

// Accumulates terms until the geometric tail estimate of the norm series,
// p_last / (1 - rho_last) relative to the running norm, drops below tol.
Series accumulate(const std::function<Term(std::size_t)>& term, const SeriesOptions& opts,
                  const char* what) {
  Series s;
  LogAccumulator norm;
  double tail = std::numeric_limits<double>::infinity();
  double prev = kNegInf;
  for (std::size_t j = 0; j < opts.nmax; ++j) {
    const Term t = term(j);
    s.log_mag.push_back(t.log_mag);
    s.phase.push_back(t.phase);
    const double p = 2.0 * t.log_mag;
    norm.add(p);
    if (j > 0 && prev != kNegInf && p != kNegInf) {
      const double log_rho = p - prev;
      if (log_rho < 0.0) {
        tail = std::exp(p - std::log1p(-std::exp(log_rho)) - norm.log_value());
        if (tail < opts.tol) {
          s.tail = tail;
          return s;
        }
      } else {
        tail = std::numeric_limits<double>::infinity();
      }
    }
    prev = p;
  }
  throw ConvergenceError(std::string(what) + " did not converge within " +
                             std::to_string(opts.nmax) + " terms",
                         tail);
}

void check_options(const SeriesOptions& opts) {
  if (!(opts.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (opts.nmax < 1) throw std::invalid_argument("nmax must be at least 1");
}

void check_r(double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw std::invalid_argument("r must be finite and >= 0");
}

FockExpansion vacuum(const Nonlinearity& nl, double theta, double tol) {
  return FockExpansion(Parity::even, {0.0}, {0.0}, SqueezeSpec(0.0, theta), nl, 0.0, tol);
}

// Even: k = m + j, odd: k' = m + j + 1, with the Fock index 2j or 2j + 1.
Term pssvs_term(const Nonlinearity& nl, const SqueezeSpec& spec, double log_t, std::size_t j) {
  const bool odd = spec.parity() == Parity::odd;
  const double k = static_cast<double>(spec.m() + j + (odd ? 1 : 0));
  const std::size_t n = 2 * j + (odd ? 1 : 0);
  const double lm = k * log_t + log_factorial(2.0 * k) - k * kLn2 - log_factorial(k) -
                    0.5 * log_factorial(static_cast<double>(n)) - nl.log_f_factorial(n);
  return {lm, wrap_phase(k * (spec.theta() + std::numbers::pi))};
}

}  // namespace

std::string_view to_string(Parity parity) { return parity == Parity::even ? "even" : "odd"; }

SqueezeSpec::SqueezeSpec(double r, double theta, unsigned m, Parity parity)
    : r_(r), theta_(0.0), m_(m), parity_(parity) {
  check_r(r);
  if (!std::isfinite(theta)) throw std::invalid_argument("theta must be finite");
  theta_ = std::fmod(theta, kTwoPi);
  if (theta_ < 0.0) theta_ += kTwoPi;
  if (theta_ >= kTwoPi) theta_ = 0.0;
}

FockExpansion::FockExpansion(Parity parity, std::vector<double> log_mag, std::vector<double> phase,
                             SqueezeSpec spec, Nonlinearity nl, double tail_bound, double tol)
    : parity_(parity),
      log_mag_(std::move(log_mag)),
      phase_(std::move(phase)),
      spec_(spec),
      nl_(std::move(nl)),
      tail_bound_(tail_bound),
      tol_(tol) {
  if (log_mag_.size() != phase_.size())
    throw std::invalid_argument("log-magnitude and phase lengths differ");
  std::vector<double> sq(log_mag_.size());
  for (std::size_t j = 0; j < sq.size(); ++j) sq[j] = 2.0 * log_mag_[j];
  const double log_norm2 = log_sum_exp(sq);
  if (log_norm2 == kNegInf || !std::isfinite(log_norm2))
    throw AnnihilatedStateError("state has zero norm");
  std::size_t lead = 0;
  while (log_mag_[lead] == kNegInf) ++lead;
  const double ref = phase_[lead];
  coeffs_.resize(log_mag_.size());
  for (std::size_t j = 0; j < log_mag_.size(); ++j) {
    log_mag_[j] -= 0.5 * log_norm2;
    phase_[j] = j == lead ? 0.0 : wrap_phase(phase_[j] - ref);
    coeffs_[j] = log_mag_[j] == kNegInf ? std::complex<double>{}
                                        : std::polar(std::exp(log_mag_[j]), phase_[j]);
  }
}

FockExpansion FockExpansion::from_amplitudes(Parity parity,
                                             std::span<const std::complex<double>> amplitudes,
                                             SqueezeSpec spec, Nonlinearity nl, double tail_bound,
                                             double tol) {
  std::vector<double> lm(amplitudes.size());
  std::vector<double> ph(amplitudes.size());
  for (std::size_t j = 0; j < amplitudes.size(); ++j) {
    const double a = std::abs(amplitudes[j]);
    lm[j] = a > 0.0 ? std::log(a) : kNegInf;
    ph[j] = a > 0.0 ? std::arg(amplitudes[j]) : 0.0;
  }
  return FockExpansion(parity, std::move(lm), std::move(ph), spec, std::move(nl), tail_bound, tol);
}

FockExpansion squeezed_vacuum(const Nonlinearity& nl, double r, double theta,
                              const SeriesOptions& opts) {
  check_r(r);
  check_options(opts);
  const SqueezeSpec spec(r, theta);
  if (r == 0.0) return vacuum(nl, theta, opts.tol);
  const double log_t = log_tanh(r);
  auto term = [&](std::size_t n) {
    const double x = static_cast<double>(n);
    const double lm = x * log_t + 0.5 * log_factorial(2.0 * x) - x * kLn2 - log_factorial(x) -
                      nl.log_f_factorial(2 * n);
    return Term{lm, wrap_phase(x * (spec.theta() + std::numbers::pi))};
  };
  Series s = accumulate(term, opts, "squeezed vacuum series");
  return FockExpansion(Parity::even, std::move(s.log_mag), std::move(s.phase), spec, nl, s.tail,
                       opts.tol);
}

FockExpansion pssvs(const Nonlinearity& nl, const SqueezeSpec& spec, const SeriesOptions& opts) {
  check_options(opts);
  if (spec.r() == 0.0) {
    if (spec.subtracted() == 0) return vacuum(nl, spec.theta(), opts.tol);
    throw AnnihilatedStateError("subtracting " + std::to_string(spec.subtracted()) +
                                " photon(s) from the vacuum (r = 0) annihilates the state");
  }
  const double log_t = log_tanh(spec.r());
  Series s = accumulate([&](std::size_t j) { return pssvs_term(nl, spec, log_t, j); }, opts,
                        "photon-subtracted squeezed vacuum series");
  return FockExpansion(spec.parity(), std::move(s.log_mag), std::move(s.phase), spec, nl, s.tail,
                       opts.tol);
}

FockExpansion coefficients_by_recursion(const Nonlinearity& nl, double r, double theta,
                                        const SeriesOptions& opts) {
  check_r(r);
  check_options(opts);
  const SqueezeSpec spec(r, theta);
  if (r == 0.0) return vacuum(nl, theta, opts.tol);
  const double log_t = log_tanh(r);
  const double step_phase = spec.theta() + std::numbers::pi;
  // C_{2j} = -e^{i theta} tanh r sqrt((2j-1)/(2j)) / (f(2j-1) f(2j)) C_{2j-2}
  Term prev{0.0, 0.0};
  auto term = [&](std::size_t j) {
    if (j == 0) return prev;
    const double up = static_cast<double>(2 * j);
    prev.log_mag += log_t + 0.5 * (std::log(up - 1.0) - std::log(up)) - nl.log_f(2 * j - 1) -
                    nl.log_f(2 * j);
    prev.phase = wrap_phase(prev.phase + step_phase);
    return prev;
  };
  Series s = accumulate(term, opts, "squeezed vacuum recursion");
  return FockExpansion(Parity::even, std::move(s.log_mag), std::move(s.phase), spec, nl, s.tail,
                       opts.tol);
}

std::vector<std::pair<std::uint64_t, double>> photon_distribution(const FockExpansion& state) {
  std::vector<std::pair<std::uint64_t, double>> out;
  out.reserve(state.truncation());
  const auto lm = state.log_magnitudes();
  for (std::size_t j = 0; j < lm.size(); ++j)
    out.emplace_back(state.photon_number(j), std::exp(2.0 * lm[j]));
  return out;
}

std::size_t choose_truncation(const Nonlinearity& nl, const SqueezeSpec& spec,
                              const SeriesOptions& opts) {
  check_options(opts);
  if (spec.r() == 0.0) {
    if (spec.subtracted() != 0)
      throw AnnihilatedStateError("photon subtraction from the vacuum annihilates the state");
    return 1;
  }
  const double log_t = log_tanh(spec.r());
  return accumulate([&](std::size_t j) { return pssvs_term(nl, spec, log_t, j); }, opts,
                    "photon-subtracted squeezed vacuum series")
      .log_mag.size();
}

}  // namespace gpssvs

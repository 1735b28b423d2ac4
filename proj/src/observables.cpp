#include "gpssvs/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gpssvs/errors.hpp"
#include "gpssvs/log_math.hpp"
#include "gpssvs/parallel.hpp"

namespace gpssvs {

namespace {

const double kLn2 = std::log(2.0);

double lf(double n) { return log_factorial(n); }

// k * log_t with 0 * (-inf) taken as 0.
double kpow(double k, double log_t) { return k == 0.0 ? 0.0 : k * log_t; }

double f2(const Nonlinearity& nl, std::uint64_t n) {
  const double f = nl.f(n);
  return f * f;
}

}  // namespace

LadderMoments expectation_moments(const FockExpansion& state, std::size_t nmax) {
  const SqueezeSpec& spec = state.spec();
  const Nonlinearity& nl = state.nl();
  if (spec.parity() != state.parity())
    throw std::invalid_argument("state parity does not match its SqueezeSpec");
  const std::size_t count = std::min(state.truncation(), nmax);
  if (spec.r() == 0.0) return {{0.0, 0.0}, 0.0, f2(nl, state.photon_number(0) + 1)};

  const double lt = log_tanh(spec.r());
  const double lh = lt - kLn2;  // log(tanh r / 2)
  const double m = spec.m();
  std::vector<double> norm(count), aad(count), ada, a2;
  ada.reserve(count);
  a2.reserve(count);

  // Every series is summed over the retained index set of the state.
  if (spec.parity() == Parity::even) {
    for (std::size_t i = 0; i < count; ++i) {
      const double n = static_cast<double>(i);
      const double k = m + n;
      const double lfn = nl.log_f_factorial(2 * i);
      norm[i] = kpow(2.0 * k, lt) + 2.0 * lf(2.0 * k) - 2.0 * k * kLn2 - 2.0 * lf(k) -
                lf(2.0 * n) - 2.0 * lfn;
      aad[i] = norm[i] + std::log(2.0 * n + 1.0) + 2.0 * nl.log_f(2 * i + 1);
      if (i + 1 < count) {
        const double lfn1 = nl.log_f_factorial(2 * i + 1);
        ada.push_back((2.0 * k + 2.0) * lh + 2.0 * lf(2.0 * k + 2.0) - 2.0 * lf(k + 1.0) -
                      lf(2.0 * n + 1.0) - 2.0 * lfn1);
        a2.push_back((2.0 * k + 1.0) * lh + lf(2.0 * k) + lf(2.0 * k + 2.0) - lf(k) -
                     lf(k + 1.0) - lf(2.0 * n) - 2.0 * lfn);
      }
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const double n = static_cast<double>(i);
      const double k = m + n;
      const double kp = k + 1.0;
      const double lfn1 = nl.log_f_factorial(2 * i + 1);
      norm[i] = kpow(2.0 * kp, lt) + 2.0 * lf(2.0 * kp) - 2.0 * kp * kLn2 - 2.0 * lf(kp) -
                lf(2.0 * n + 1.0) - 2.0 * lfn1;
      aad[i] = norm[i] + std::log(2.0 * n + 2.0) + 2.0 * nl.log_f(2 * i + 2);
      ada.push_back((2.0 * k + 2.0) * lh + 2.0 * lf(2.0 * k + 2.0) - 2.0 * lf(k + 1.0) -
                    lf(2.0 * n) - 2.0 * nl.log_f_factorial(2 * i));
      if (i + 1 < count)
        a2.push_back((2.0 * k + 3.0) * lh + lf(2.0 * k + 2.0) + lf(2.0 * k + 4.0) -
                     lf(k + 1.0) - lf(k + 2.0) - lf(2.0 * n + 1.0) - 2.0 * lfn1);
    }
  }

  const double log_norm = log_sum_exp(norm);
  LadderMoments out;
  out.exp_AAd = std::exp(log_sum_exp(aad) - log_norm);
  out.exp_AdA = ada.empty() ? 0.0 : std::exp(log_sum_exp(ada) - log_norm);
  const double a2_mag = a2.empty() ? 0.0 : std::exp(log_sum_exp(a2) - log_norm);
  out.exp_A2 = -std::polar(a2_mag, spec.theta());
  return out;
}

DistributionMoments moments_from_distribution(const FockExpansion& state) {
  const Nonlinearity& nl = state.nl();
  CompensatedSum ada, aad, n1, n2;
  const auto lm = state.log_magnitudes();
  for (std::size_t j = 0; j < lm.size(); ++j) {
    const double p = std::exp(2.0 * lm[j]);
    const std::uint64_t n = state.photon_number(j);
    const double x = static_cast<double>(n);
    ada.add(n == 0 ? 0.0 : p * x * f2(nl, n));
    aad.add(p * (x + 1.0) * f2(nl, n + 1));
    n1.add(p * x);
    n2.add(p * x * x);
  }
  return {ada.value(), aad.value(), n1.value(), n2.value()};
}

QuadratureReport quadrature_report(const FockExpansion& state) {
  const LadderMoments mom = expectation_moments(state);
  QuadratureReport q;
  q.exp_A2 = mom.exp_A2;
  q.exp_AdA = mom.exp_AdA;
  q.exp_AAd = mom.exp_AAd;
  const double sym = mom.exp_AAd + mom.exp_AdA;
  q.var_x = 0.5 * (sym + 2.0 * mom.exp_A2.real());
  q.var_p = 0.5 * (sym - 2.0 * mom.exp_A2.real());
  // [X, P] = i [A, A^dagger]
  q.robertson_rhs = 0.5 * std::abs(mom.exp_AAd - mom.exp_AdA);
  q.x_squeezed = q.var_x < q.robertson_rhs;
  q.p_squeezed = q.var_p < q.robertson_rhs;
  return q;
}

NumberStatsReport number_stats(const FockExpansion& state) {
  const DistributionMoments dist = moments_from_distribution(state);
  NumberStatsReport rep;
  rep.mean_N = dist.mean_n;
  rep.mean_N2 = dist.mean_n2;

  const Nonlinearity& nl = state.nl();
  if (nl.kind() == NonlinearityKind::poschl_teller) {
    // N = [A^dagger A + s^2/4]^{1/2} - s/2 taken spectrally; N^2 = A^dagger A - s N.
    const double s = nl.pt_lambda() + nl.pt_kappa();
    CompensatedSum root;
    const auto lm = state.log_magnitudes();
    for (std::size_t j = 0; j < lm.size(); ++j) {
      const std::uint64_t n = state.photon_number(j);
      const double eig = n == 0 ? 0.0 : static_cast<double>(n) * f2(nl, n);
      root.add(std::exp(2.0 * lm[j]) * std::sqrt(eig + 0.25 * s * s));
    }
    const double mean_factorized = root.value() - 0.5 * s;
    const double mean2_factorized = expectation_moments(state).exp_AdA - s * mean_factorized;
    const double e1 = std::abs(mean_factorized - rep.mean_N) / std::max(1.0, rep.mean_N);
    const double e2 = std::abs(mean2_factorized - rep.mean_N2) / std::max(1.0, rep.mean_N2);
    rep.route_discrepancy = std::max(e1, e2);
    if (!(e1 <= 1e-10) || !(e2 <= 1e-10))
      throw ConsistencyError("factorized number operator disagrees with the photon distribution");
  }

  rep.n_squeeze = (rep.mean_N2 - rep.mean_N * rep.mean_N) - rep.mean_N;
  if (rep.mean_N > 0.0) rep.mandel_q = (rep.mean_N2 - rep.mean_N * rep.mean_N) / rep.mean_N - 1.0;
  return rep;
}

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::var_x: return "var_x";
    case Quantity::var_p: return "var_p";
    case Quantity::robertson_rhs: return "robertson_rhs";
    case Quantity::n_squeeze: return "n_squeeze";
    case Quantity::mandel_q: return "mandel_q";
  }
  return "unknown";
}

Quantity parse_quantity(std::string_view name) {
  for (Quantity q : {Quantity::var_x, Quantity::var_p, Quantity::robertson_rhs,
                     Quantity::n_squeeze, Quantity::mandel_q})
    if (to_string(q) == name) return q;
  throw std::invalid_argument("unknown quantity '" + std::string(name) + "'");
}

namespace {

std::string failure_class(const std::exception_ptr& e) {
  try {
    std::rethrow_exception(e);
  } catch (const AnnihilatedStateError&) {
    return "annihilated";
  } catch (const ConvergenceError&) {
    return "convergence";
  } catch (const TruncationError&) {
    return "truncation";
  } catch (const ConsistencyError&) {
    return "consistency";
  } catch (const std::invalid_argument&) {
    return "invalid";
  } catch (...) {
    return "error";
  }
}

}  // namespace

std::vector<SweepRow> sweep(const Nonlinearity& nl, const SweepAxes& axes,
                            const std::vector<Quantity>& quantities, const SeriesOptions& opts) {
  if (axes.r.empty() || axes.theta.empty() || axes.m.empty() || axes.parity.empty() ||
      quantities.empty())
    throw std::invalid_argument("sweep ranges and quantity list must be nonempty");

  const std::size_t nq = quantities.size();
  const std::size_t points = axes.r.size() * axes.theta.size() * axes.m.size() * axes.parity.size();
  std::vector<SweepRow> rows(points * nq);

  parallel_for(points, [&](std::size_t idx) {
    std::size_t rest = idx;
    const Parity parity = axes.parity[rest % axes.parity.size()];
    rest /= axes.parity.size();
    const unsigned m = axes.m[rest % axes.m.size()];
    rest /= axes.m.size();
    const double theta = axes.theta[rest % axes.theta.size()];
    rest /= axes.theta.size();
    const double r = axes.r[rest];

    for (std::size_t q = 0; q < nq; ++q) {
      SweepRow& row = rows[idx * nq + q];
      row.r = r;
      row.theta = theta;
      row.m = m;
      row.parity = parity;
      row.quantity = quantities[q];
    }
    try {
      const FockExpansion state = pssvs(nl, SqueezeSpec(r, theta, m, parity), opts);
      std::optional<QuadratureReport> quad;
      std::optional<NumberStatsReport> stats;
      for (std::size_t q = 0; q < nq; ++q) {
        SweepRow& row = rows[idx * nq + q];
        row.status = "ok";
        switch (quantities[q]) {
          case Quantity::var_x:
          case Quantity::var_p:
          case Quantity::robertson_rhs:
            if (!quad) quad = quadrature_report(state);
            row.value = quantities[q] == Quantity::var_x   ? quad->var_x
                        : quantities[q] == Quantity::var_p ? quad->var_p
                                                           : quad->robertson_rhs;
            break;
          case Quantity::n_squeeze:
          case Quantity::mandel_q:
            if (!stats) stats = number_stats(state);
            if (quantities[q] == Quantity::n_squeeze) {
              row.value = stats->n_squeeze;
            } else if (stats->mandel_q) {
              row.value = *stats->mandel_q;
            } else {
              row.status = "mandel_undefined";
            }
            break;
        }
      }
    } catch (...) {
      const std::string status = failure_class(std::current_exception());
      for (std::size_t q = 0; q < nq; ++q) {
        rows[idx * nq + q].value.reset();
        rows[idx * nq + q].status = status;
      }
    }
  });
  return rows;
}

}  // namespace gpssvs

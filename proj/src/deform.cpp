#include "gpssvs/deform.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "gpssvs/errors.hpp"

namespace gpssvs {

std::string_view to_string(NonlinearityKind kind) {
  switch (kind) {
    case NonlinearityKind::harmonic: return "harmonic";
    case NonlinearityKind::poschl_teller: return "poschl-teller";
    case NonlinearityKind::custom: return "custom";
  }
  return "unknown";
}

Nonlinearity Nonlinearity::harmonic() { return Nonlinearity{}; }

Nonlinearity Nonlinearity::poschl_teller(double lambda, double kappa) {
  if (!(lambda >= 0.5) || !(kappa >= 0.5) || !std::isfinite(lambda) || !std::isfinite(kappa))
    throw std::invalid_argument("poschl-teller requires lambda >= 1/2 and kappa >= 1/2");
  Nonlinearity nl;
  nl.kind_ = NonlinearityKind::poschl_teller;
  nl.pt_lambda_ = lambda;
  nl.pt_kappa_ = kappa;
  return nl;
}

Nonlinearity Nonlinearity::custom(std::vector<double> table) {
  Nonlinearity nl;
  nl.kind_ = NonlinearityKind::custom;
  nl.log_prefix_.reserve(table.size() + 1);
  nl.log_prefix_.push_back(0.0);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!(table[i] > 0.0) || !std::isfinite(table[i]))
      throw std::invalid_argument("custom f(n) table entry f(" + std::to_string(i + 1) +
                                  ") is not a positive finite number");
    nl.log_prefix_.push_back(nl.log_prefix_.back() + std::log(table[i]));
  }
  nl.table_ = std::move(table);
  return nl;
}

void Nonlinearity::require(std::size_t n) const {
  if (kind_ == NonlinearityKind::custom && n > table_.size())
    throw TruncationError(n, table_.size());
}

double Nonlinearity::f(std::size_t n) const {
  switch (kind_) {
    case NonlinearityKind::harmonic: return 1.0;
    case NonlinearityKind::poschl_teller:
      return std::sqrt(static_cast<double>(n) + pt_lambda_ + pt_kappa_);
    case NonlinearityKind::custom:
      require(n);
      // f(0) only ever appears multiplied by n = 0.
      return n == 0 ? 1.0 : table_[n - 1];
  }
  return 1.0;
}

double Nonlinearity::log_f(std::size_t n) const {
  if (kind_ == NonlinearityKind::poschl_teller)
    return 0.5 * std::log(static_cast<double>(n) + pt_lambda_ + pt_kappa_);
  return std::log(f(n));
}

double Nonlinearity::log_f_factorial(std::size_t n) const {
  switch (kind_) {
    case NonlinearityKind::harmonic: return 0.0;
    case NonlinearityKind::poschl_teller: {
      // prod_{j=1}^n (j + s) = Gamma(n + s + 1) / Gamma(s + 1)
      const double s = pt_lambda_ + pt_kappa_;
      return 0.5 * (std::lgamma(static_cast<double>(n) + s + 1.0) - std::lgamma(s + 1.0));
    }
    case NonlinearityKind::custom:
      require(n);
      return log_prefix_[n];
  }
  return 0.0;
}

double Nonlinearity::commutator_weight(std::size_t n) const {
  const double up = f(n + 1);
  const double here = n == 0 ? 0.0 : f(n);
  return static_cast<double>(n + 1) * up * up - static_cast<double>(n) * here * here;
}

std::string Nonlinearity::describe() const {
  char buf[96];
  switch (kind_) {
    case NonlinearityKind::harmonic: return "harmonic";
    case NonlinearityKind::poschl_teller:
      std::snprintf(buf, sizeof buf, "poschl-teller(lambda=%.17g, kappa=%.17g)", pt_lambda_,
                    pt_kappa_);
      return buf;
    case NonlinearityKind::custom:
      return "custom(" + std::to_string(table_.size()) + " entries)";
  }
  return "unknown";
}

}  // namespace gpssvs

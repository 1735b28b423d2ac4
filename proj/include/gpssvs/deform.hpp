#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gpssvs {

enum class NonlinearityKind { harmonic, poschl_teller, custom };

std::string_view to_string(NonlinearityKind kind);

/// Deformation function f(n) of an f-deformed oscillator, A = a f(n).
///
/// Generalized factorials f(n)! = f(1)...f(n) are only ever produced in log
/// space; for Poschl-Teller they are closed-form through lgamma, for custom
/// tables through a prefix sum built at construction.
class Nonlinearity {
 public:
  /// f(n) = 1.
  static Nonlinearity harmonic();
  /// f(n) = sqrt(n + lambda + kappa); both parameters must be >= 1/2.
  static Nonlinearity poschl_teller(double lambda, double kappa);
  /// f(1), f(2), ... taken from `table`; every entry must be positive.
  static Nonlinearity custom(std::vector<double> table);

  NonlinearityKind kind() const { return kind_; }
  double pt_lambda() const { return pt_lambda_; }
  double pt_kappa() const { return pt_kappa_; }
  const std::vector<double>& custom_table() const { return table_; }

  double f(std::size_t n) const;
  double log_f(std::size_t n) const;
  /// ln f(n)!, with f(0)! = 1.
  double log_f_factorial(std::size_t n) const;
  /// (n+1) f^2(n+1) - n f^2(n), the Fock-diagonal weight of [A, A^dagger].
  double commutator_weight(std::size_t n) const;

  std::string describe() const;

 private:
  Nonlinearity() = default;
  void require(std::size_t n) const;

  NonlinearityKind kind_ = NonlinearityKind::harmonic;
  double pt_lambda_ = 0.0;
  double pt_kappa_ = 0.0;
  std::vector<double> table_;
  std::vector<double> log_prefix_;  // log_prefix_[n] = ln f(n)!
};

}  // namespace gpssvs

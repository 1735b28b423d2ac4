#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpssvs {

/// Base of every library failure that is not a plain argument error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A custom f(n) table is shorter than an operation needs.
class TruncationError : public Error {
 public:
  TruncationError(std::size_t required_n, std::size_t table_length);
  std::size_t required_n() const noexcept { return required_n_; }

 private:
  std::size_t required_n_;
};

/// A series did not reach its tail tolerance within the term cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double achieved_tail);
  double achieved_tail() const noexcept { return achieved_tail_; }

 private:
  double achieved_tail_;
};

/// Photon subtraction produced the null vector.
class AnnihilatedStateError : public Error {
 public:
  using Error::Error;
};

/// The dense-operator oracle's Fock cutoff leaks too much weight.
class DimensionError : public Error {
 public:
  DimensionError(std::size_t dim, double tail_weight);
  double tail_weight() const noexcept { return tail_weight_; }

 private:
  double tail_weight_;
};

/// Two evaluation routes that must agree did not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace gpssvs

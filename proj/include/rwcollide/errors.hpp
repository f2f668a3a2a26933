#pragma once

#include <stdexcept>
#include <string>

namespace rwcollide {

/// Rejected parameters (negative horizon, dimension out of range, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical routine ran out of its subdivision or term budget before
/// meeting its tolerance. Carries whatever partial value was reached.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double partial_value, double err_estimate)
      : std::runtime_error(what), partial_value_(partial_value), err_estimate_(err_estimate) {}

  double partial_value() const noexcept { return partial_value_; }
  double err_estimate() const noexcept { return err_estimate_; }

 private:
  double partial_value_;
  double err_estimate_;
};

}  // namespace rwcollide

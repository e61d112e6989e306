#pragma once

#include <stdexcept>
#include <string>

namespace enso {

// Caller violated a precondition (mismatched series, bad flag values, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Base for failures that come from the numbers themselves rather than from
// the caller. The CLI maps these to exit code 3.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The factor (1 - beta*sigma) vanishes.
class SingularModelError : public NumericError {
 public:
  using NumericError::NumericError;
};

// A series coefficient became non-finite or exceeded the overflow bound.
class OverflowError : public NumericError {
 public:
  OverflowError(const std::string& what, int index)
      : NumericError(what), index_(index) {}
  [[nodiscard]] int index() const noexcept { return index_; }

 private:
  int index_;
};

// Closed-form evaluated outside its domain (finite-time blow-up region).
class DomainError : public NumericError {
 public:
  using NumericError::NumericError;
};

// Time integration produced a non-finite state.
class BlowUpError : public NumericError {
 public:
  BlowUpError(const std::string& what, double t) : NumericError(what), t_(t) {}
  [[nodiscard]] double t() const noexcept { return t_; }

 private:
  double t_;
};

}  // namespace enso

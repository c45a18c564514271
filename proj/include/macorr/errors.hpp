#pragma once

#include <stdexcept>
#include <string>

namespace macorr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Spectral content escaped the active frequency budget.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Invalid or inconsistent parameters (ordering, ranges, grid mismatch).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A positivity guard failed: an amplitude square dipped below its floor.
class CalibrationError : public Error {
 public:
  CalibrationError(const std::string& what, int round, double min_value)
      : Error(what), round_(round), min_value_(min_value) {}
  int round() const { return round_; }
  double min_value() const { return min_value_; }

 private:
  int round_;
  double min_value_;
};

/// A rate fit could not be formed (too few points, non-positive or non-monotone data).
class FitError : public Error {
 public:
  using Error::Error;
};

}  // namespace macorr

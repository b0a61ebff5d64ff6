#pragma once

#include <stdexcept>
#include <string>

namespace ergo {

/// A descriptor has no defined value for this input (e.g. CV of a zero-mean
/// epoch, DFA of a constant series). Callers that fill DescriptorSeries
/// convert this into a NaN sentinel instead of aborting the whole series.
class UndefinedDescriptorError : public std::runtime_error {
 public:
  explicit UndefinedDescriptorError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Fewer than the minimum number of usable scales survived for a log-log fit.
class InsufficientScalesError : public std::runtime_error {
 public:
  explicit InsufficientScalesError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Input carries no usable signal (e.g. all-zero mass for bin proportions).
class DegenerateInputError : public std::runtime_error {
 public:
  explicit DegenerateInputError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A q value would overflow/underflow the mass computation and was dropped.
class ExtremeQError : public std::runtime_error {
 public:
  explicit ExtremeQError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace ergo

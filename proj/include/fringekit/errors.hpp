#pragma once

#include <stdexcept>
#include <string>

namespace fringekit {

// Precondition violations (bad specs, out-of-range arguments) are reported
// with std::invalid_argument. Everything below is a failure of a numerical
// procedure or of the output layer.

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The fringe has no unique maximum on the analysis window.
class FlatFringeError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// An all-zero fringe cannot be normalized to a unit peak.
class NormalizationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

enum class Side { left, right };

/// Half maximum was never crossed between the peak and one window edge.
class FwhmError : public NumericalError {
 public:
  FwhmError(Side side, const std::string& what)
      : NumericalError(what), side_(side) {}
  Side side() const noexcept { return side_; }

 private:
  Side side_;
};

/// A root bracket does not contain a sign change.
class BracketError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A failure inside a parameter sweep, tagged with the offending value.
class SweepError : public NumericalError {
 public:
  SweepError(int sweep_value, const std::string& what)
      : NumericalError("sweep value " + std::to_string(sweep_value) + ": " +
                       what),
        sweep_value_(sweep_value) {}
  int sweep_value() const noexcept { return sweep_value_; }

 private:
  int sweep_value_;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace fringekit

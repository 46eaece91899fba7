#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fringekit/types.hpp"

namespace fringekit {

/// Non-negative intensities on a uniform phase grid start + i * step.
class SampledFringe {
 public:
  SampledFringe(double start, double step, std::vector<double> values);

  /// `count` samples spanning the closed window, endpoints included.
  static SampledFringe sample(const Fringe& fringe, PhaseInterval window,
                              std::size_t count);

  double start() const noexcept { return start_; }
  double step() const noexcept { return step_; }
  std::size_t size() const noexcept { return values_.size(); }
  double phase(std::size_t i) const noexcept {
    return start_ + static_cast<double>(i) * step_;
  }
  double value(std::size_t i) const { return values_.at(i); }
  std::span<const double> values() const noexcept { return values_; }
  PhaseInterval window() const noexcept {
    return {start_, phase(values_.size() - 1)};
  }

  /// Linear interpolation between bracketing samples; throws
  /// std::out_of_range outside the grid.
  double interpolate(double phase) const;
  Fringe as_fringe() const;

 private:
  double start_;
  double step_;
  std::vector<double> values_;
};

}  // namespace fringekit

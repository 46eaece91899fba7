#pragma once

#include <functional>
#include <numbers>

namespace fringekit {

inline constexpr double pi = std::numbers::pi;

/// Intensity as a function of a phase coordinate (radians).
using Fringe = std::function<double(double)>;

/// Closed phase interval [lo, hi].
struct PhaseInterval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const noexcept { return hi - lo; }
  double center() const noexcept { return 0.5 * (lo + hi); }
  bool contains(double x) const noexcept { return x >= lo && x <= hi; }
  /// True when the interval is finite with hi > lo.
  bool valid() const noexcept;

  bool operator==(const PhaseInterval&) const = default;
};

}  // namespace fringekit

#include "fringekit/sampled_fringe.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fringekit {

SampledFringe::SampledFringe(double start, double step,
                             std::vector<double> values)
    : start_(start), step_(step), values_(std::move(values)) {
  if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(start))
    throw std::invalid_argument("SampledFringe: step must be positive");
  if (values_.size() < 3)
    throw std::invalid_argument("SampledFringe: need at least 3 samples");
  for (double v : values_) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument(
          "SampledFringe: samples must be finite and non-negative");
  }
}

SampledFringe SampledFringe::sample(const Fringe& fringe, PhaseInterval window,
                                    std::size_t count) {
  if (!window.valid())
    throw std::invalid_argument("SampledFringe::sample: degenerate window");
  if (count < 3)
    throw std::invalid_argument("SampledFringe::sample: need count >= 3");
  const double step = window.width() / static_cast<double>(count - 1);
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Last sample lands on hi exactly.
    const double x = i + 1 == count ? window.hi : window.lo + i * step;
    values[i] = fringe(x);
  }
  return SampledFringe(window.lo, step, std::move(values));
}

double SampledFringe::interpolate(double x) const {
  const double u = (x - start_) / step_;
  const double last = static_cast<double>(values_.size() - 1);
  if (!(u >= 0.0 && u <= last))
    throw std::out_of_range("SampledFringe::interpolate: phase " +
                            std::to_string(x) + " outside the grid");
  const auto i = std::min(static_cast<std::size_t>(u), values_.size() - 2);
  const double t = u - static_cast<double>(i);
  return (1.0 - t) * values_[i] + t * values_[i + 1];
}

Fringe SampledFringe::as_fringe() const {
  return [copy = *this](double x) { return copy.interpolate(x); };
}

}  // namespace fringekit

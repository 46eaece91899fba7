#include "fringekit/intensity_product.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "fringekit/errors.hpp"
#include "fringekit/resolution.hpp"

namespace fringekit {

namespace {
constexpr double kPowerFloor = 1e-300;
}

ProductOrder::ProductOrder(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("ProductOrder: K must be >= 1");
}

double stable_power(double value, int order) {
  if (order == 1) return value;
  if (!(value > kPowerFloor)) return 0.0;
  return std::exp(static_cast<double>(order) * std::log(value));
}

double CorrelationValue::absolute() const {
  if (log_value == -std::numeric_limits<double>::infinity()) return 0.0;
  const double v = std::exp(log_value);
  if (std::isinf(v) || (v == 0.0 && normalized != 0.0))
    throw std::range_error(
        "kth_order_correlation: absolute value outside double range");
  return v;
}

CorrelationValue kth_order_correlation(double phase, double input_intensity,
                                       ProductOrder order) {
  if (!(input_intensity > 0.0))
    throw std::invalid_argument("kth_order_correlation: I0 must be positive");
  const double k = order.value();
  const double fringe = 1.0 + std::cos(phase);
  CorrelationValue out;
  out.normalized = stable_power(0.5 * fringe, order.value());
  out.log_value = fringe > 0.0
                      ? k * (std::log(input_intensity) -
                             (k + 1.0) * std::numbers::ln2 + std::log(fringe))
                      : -std::numeric_limits<double>::infinity();
  return out;
}

KPowerFringe::KPowerFringe(Fringe base, ProductOrder order, double reference,
                           bool normalized)
    : base_(std::move(base)),
      order_(order),
      reference_(reference),
      normalized_(normalized) {
  if (!(reference > 0.0) || !std::isfinite(reference))
    throw NormalizationError("KPowerFringe: reference must be positive");
}

double KPowerFringe::operator()(double phase) const {
  return stable_power(base_(phase) / reference_, order_.value());
}

KPowerFringe kth_power(Fringe base, ProductOrder order, PhaseInterval window,
                       bool normalize) {
  if (!normalize) return kth_power(std::move(base), order);
  const Peak peak = locate_maximum(base, window);
  if (!(peak.value > 0.0))
    throw NormalizationError(
        "kth_power: fringe has no positive maximum on the window");
  return KPowerFringe(std::move(base), order, peak.value, true);
}

KPowerFringe kth_power(Fringe base, ProductOrder order) {
  return KPowerFringe(std::move(base), order, 1.0, false);
}

SampledFringe kth_power(const SampledFringe& base, ProductOrder order,
                        bool normalize) {
  const auto values = base.values();
  double reference = 1.0;
  if (normalize) {
    reference = *std::max_element(values.begin(), values.end());
    if (!(reference > 0.0))
      throw NormalizationError("kth_power: sampled fringe is all zero");
  }
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    out[i] = stable_power(values[i] / reference, order.value());
  return SampledFringe(base.start(), base.step(), std::move(out));
}

}  // namespace fringekit

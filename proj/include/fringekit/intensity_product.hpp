#pragma once

// K-th order intensity product: the product of K identical projection-port
// intensities, i.e. the fringe raised to the K-th power.

#include "fringekit/sampled_fringe.hpp"
#include "fringekit/types.hpp"

namespace fringekit {

class ProductOrder {
 public:
  explicit ProductOrder(int order);
  int value() const noexcept { return order_; }

  bool operator==(const ProductOrder&) const = default;

 private:
  int order_;
};

/// v^K computed as exp(K ln v); values at or below 1e-300 map to 0.
double stable_power(double value, int order);

struct CorrelationValue {
  /// ln of the absolute correlation; -inf at a fringe null.
  double log_value = 0.0;
  /// ((1 + cos phi) / 2)^K, peak 1.
  double normalized = 0.0;

  /// exp(log_value). Throws std::range_error when that overflows, or
  /// underflows to zero while the normalized value is itself non-zero.
  double absolute() const;
};

/// Product of K split-port intensities (I0 / 2^(K+1))^K (1 + cos phi)^K,
/// kept in log space.
CorrelationValue kth_order_correlation(double phase, double input_intensity,
                                       ProductOrder order);

class KPowerFringe {
 public:
  /// Evaluates (base(x) / reference)^K.
  KPowerFringe(Fringe base, ProductOrder order, double reference,
               bool normalized);

  double operator()(double phase) const;

  ProductOrder order() const noexcept { return order_; }
  bool normalized() const noexcept { return normalized_; }
  /// Base-fringe maximum used for normalisation (1 when not normalised).
  double reference() const noexcept { return reference_; }

 private:
  Fringe base_;
  ProductOrder order_;
  double reference_;
  bool normalized_;
};

/// Pointwise K-th power, optionally normalised by the base maximum over the
/// window. Throws NormalizationError when that maximum is not positive.
KPowerFringe kth_power(Fringe base, ProductOrder order, PhaseInterval window,
                       bool normalize = true);
/// Un-normalised K-th power.
KPowerFringe kth_power(Fringe base, ProductOrder order);

SampledFringe kth_power(const SampledFringe& base, ProductOrder order,
                        bool normalize = true);

}  // namespace fringekit

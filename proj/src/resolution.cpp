#include "fringekit/resolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fringekit/errors.hpp"
#include "fringekit/intensity_product.hpp"

namespace fringekit {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // 1/golden ratio
constexpr int kZoomLevels = 4;
constexpr std::size_t kZoomPoints = 65;
// |f(crossing) - peak/2| must end below this fraction of the peak.
constexpr double kHalfLevelResidual = 1e-9;

void require_window(PhaseInterval window, const char* who) {
  if (!window.valid())
    throw std::invalid_argument(std::string(who) + ": degenerate window");
}

double grid_point(PhaseInterval w, std::size_t i, std::size_t n) {
  if (i + 1 == n) return w.hi;
  return w.lo + static_cast<double>(i) * (w.width() / static_cast<double>(n - 1));
}

// Golden-section search for the extremum of a unimodal function on [a, b].
// sign = +1 maximizes, -1 minimizes.
Peak golden_section(const Fringe& f, double a, double b, double tol,
                    double sign) {
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = sign * f(c);
  double fd = sign * f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = sign * f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = sign * f(d);
    }
    if (c >= d) break;  // interval exhausted at machine precision
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

struct Scan {
  Peak best;
  double min_value = 0.0;
};

Scan scan_maximum(const Fringe& f, PhaseInterval window,
                  const PeakSearchOptions& options) {
  if (options.grid_points < 3)
    throw std::invalid_argument("peak search: need at least 3 grid points");
  const std::size_t n = options.grid_points;
  Scan scan;
  scan.best = {window.lo, f(window.lo)};
  scan.min_value = scan.best.value;
  for (std::size_t i = 1; i < n; ++i) {
    const double x = grid_point(window, i, n);
    const double v = f(x);
    if (v > scan.best.value) scan.best = {x, v};
    scan.min_value = std::min(scan.min_value, v);
  }

  double half_span = window.width() / static_cast<double>(n - 1);
  for (int level = 0; level < kZoomLevels; ++level) {
    const PhaseInterval zoom{std::max(window.lo, scan.best.position - half_span),
                             std::min(window.hi, scan.best.position + half_span)};
    for (std::size_t i = 0; i < kZoomPoints; ++i) {
      const double x = grid_point(zoom, i, kZoomPoints);
      const double v = f(x);
      if (v > scan.best.value) scan.best = {x, v};
    }
    half_span = zoom.width() / static_cast<double>(kZoomPoints - 1);
  }

  const Peak refined = golden_section(
      f, std::max(window.lo, scan.best.position - half_span),
      std::min(window.hi, scan.best.position + half_span), options.tolerance,
      1.0);
  if (refined.value > scan.best.value) scan.best = refined;
  return scan;
}

// Walks outward from the peak in steps of `step` to the first point at or
// below `half`, then bisects.
double half_crossing(const Fringe& f, const FwhmResult& peak, double edge,
                     double step, double tol, Side side) {
  const double dir = side == Side::right ? 1.0 : -1.0;
  const double half = 0.5 * peak.peak_value;
  double inside = peak.peak_position;
  double outside = inside;
  for (;;) {
    if (inside == edge)
      throw FwhmError(side, std::string("fwhm: half maximum not crossed on the ") +
                                (side == Side::left ? "left" : "right") +
                                " side of the window");
    outside = inside + dir * step;
    if ((side == Side::right && outside > edge) ||
        (side == Side::left && outside < edge))
      outside = edge;
    if (f(outside) <= half) break;
    inside = outside;
  }

  const double residual_limit = kHalfLevelResidual * peak.peak_value;
  double crossing = outside;
  for (;;) {
    const double mid = 0.5 * (inside + outside);
    if (mid == inside || mid == outside) break;
    const double v = f(mid);
    crossing = mid;
    if (v > half)
      inside = mid;
    else
      outside = mid;
    if (std::abs(outside - inside) <= tol && std::abs(v - half) <= residual_limit)
      break;
  }
  return crossing;
}

}  // namespace

Peak locate_maximum(const Fringe& fringe, PhaseInterval window,
                    const PeakSearchOptions& options) {
  require_window(window, "locate_maximum");
  return scan_maximum(fringe, window, options).best;
}

Peak find_principal_peak(const Fringe& fringe, PhaseInterval window,
                         const PeakSearchOptions& options) {
  require_window(window, "find_principal_peak");
  const Scan scan = scan_maximum(fringe, window, options);
  const double spread = scan.best.value - scan.min_value;
  if (!(spread > 1e-14 * std::abs(scan.best.value)))
    throw FlatFringeError("find_principal_peak: fringe is constant over the window");
  return scan.best;
}

Peak find_principal_peak(const SampledFringe& fringe) {
  const auto values = fringe.values();
  const auto it = std::max_element(values.begin(), values.end());
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*lo == *hi)
    throw FlatFringeError("find_principal_peak: sampled fringe is constant");
  const auto i = static_cast<std::size_t>(it - values.begin());
  return {fringe.phase(i), *it};
}

FwhmResult fwhm(const Fringe& fringe, PhaseInterval window,
                const FwhmOptions& options) {
  require_window(window, "fwhm");
  if (!(options.tolerance > 0.0))
    throw std::invalid_argument("fwhm: tolerance must be positive");
  const Peak peak = find_principal_peak(fringe, window, options.peak);
  if (!(peak.value > 0.0))
    throw FlatFringeError("fwhm: principal peak is not positive");

  FwhmResult result;
  result.peak_position = peak.position;
  result.peak_value = peak.value;
  const double step =
      window.width() / static_cast<double>(options.peak.grid_points - 1);
  result.left_half = half_crossing(fringe, result, window.lo, step,
                                   options.tolerance, Side::left);
  result.right_half = half_crossing(fringe, result, window.hi, step,
                                    options.tolerance, Side::right);
  return result;
}

FwhmResult fwhm(const SampledFringe& fringe) {
  const Peak peak = find_principal_peak(fringe);
  if (!(peak.value > 0.0))
    throw FlatFringeError("fwhm: principal peak is not positive");
  const auto values = fringe.values();
  const double half = 0.5 * peak.value;
  const auto top = static_cast<std::size_t>(
      std::lround((peak.position - fringe.start()) / fringe.step()));

  const auto cross = [&](std::size_t above, std::size_t below) {
    const double t = (values[above] - half) / (values[above] - values[below]);
    const double xa = fringe.phase(above);
    return xa + t * (fringe.phase(below) - xa);
  };

  FwhmResult result;
  result.peak_position = peak.position;
  result.peak_value = peak.value;

  std::size_t i = top;
  while (i > 0 && values[i - 1] > half) --i;
  if (i == 0)
    throw FwhmError(Side::left, "fwhm: half maximum not crossed on the left side");
  result.left_half = cross(i, i - 1);

  i = top;
  while (i + 1 < values.size() && values[i + 1] > half) ++i;
  if (i + 1 == values.size())
    throw FwhmError(Side::right,
                    "fwhm: half maximum not crossed on the right side");
  result.right_half = cross(i, i + 1);
  return result;
}

double snl_reference(int order) {
  if (order < 1) throw std::invalid_argument("snl_reference: K must be >= 1");
  return 1.0 / std::sqrt(static_cast<double>(order));
}

double hl_reference(int count) {
  if (count < 1) throw std::invalid_argument("hl_reference: N must be >= 1");
  return 1.0 / static_cast<double>(count);
}

ResolutionCurve resolution_curve(const FringeModel& base, SweepAxis axis,
                                 const std::vector<int>& values,
                                 const CurveOptions& options) {
  if (values.empty())
    throw std::invalid_argument("resolution_curve: empty sweep");
  const auto* slit_base = std::get_if<NSlitSpec>(&base);
  if (axis == SweepAxis::slit_count && slit_base == nullptr)
    throw std::invalid_argument(
        "resolution_curve: slit-count sweeps need an N-slit model");

  const int baseline = axis == SweepAxis::order ? 1 : 2;
  ResolutionCurve curve;
  curve.axis = axis;
  curve.parameters.push_back(baseline);
  for (int v : values)
    if (v != baseline) curve.parameters.push_back(v);

  for (int v : curve.parameters) {
    try {
      const FringeModel model = axis == SweepAxis::order
                                    ? base
                                    : FringeModel(slit_base->with_slit_count(v));
      const ProductOrder order(axis == SweepAxis::order ? v
                                                        : options.fixed_order);
      const PhaseInterval window = options.window.value_or(default_window(model));
      const KPowerFringe powered =
          kth_power(make_fringe(model), order, window, true);
      curve.widths.push_back(fwhm(powered, window, options.fwhm).width());
    } catch (const NumericalError& e) {
      throw SweepError(v, e.what());
    }
  }

  for (std::size_t i = 0; i < curve.parameters.size(); ++i) {
    const int v = curve.parameters[i];
    curve.ratios.push_back(i == 0 ? 1.0 : curve.widths[i] / curve.widths[0]);
    if (axis == SweepAxis::order) {
      curve.snl.push_back(snl_reference(v));
      curve.hl.push_back(hl_reference(v));
    } else {
      curve.hl.push_back(hl_reference(v) / hl_reference(baseline));
    }
  }
  return curve;
}

Resolvability rayleigh_resolvable(const Fringe& composite, double first,
                                  double second, PhaseInterval window,
                                  const RayleighOptions& options) {
  require_window(window, "rayleigh_resolvable");
  if (!window.contains(first) || !window.contains(second))
    throw std::invalid_argument(
        "rayleigh_resolvable: peak positions must lie inside the window");
  if (options.grid_points < 3)
    throw std::invalid_argument("rayleigh_resolvable: need >= 3 grid points");
  if (first > second) std::swap(first, second);

  const std::size_t n = options.grid_points;
  const double h = window.width() / static_cast<double>(n - 1);
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = composite(grid_point(window, i, n));

  const auto index_of = [&](double x) {
    return std::min(n - 1, static_cast<std::size_t>(
                               std::lround((x - window.lo) / h)));
  };
  const auto climb = [&](std::size_t i) {
    for (;;) {
      const double left = i > 0 ? v[i - 1] : -1.0;
      const double right = i + 1 < n ? v[i + 1] : -1.0;
      if (left > v[i] && left >= right)
        --i;
      else if (right > v[i])
        ++i;
      else
        return i;
    }
  };
  const auto bracket = [&](std::size_t i) {
    return std::pair{grid_point(window, i > 0 ? i - 1 : 0, n),
                     grid_point(window, std::min(i + 1, n - 1), n)};
  };
  const auto refine_max = [&](std::size_t i) {
    const auto [a, b] = bracket(i);
    const Peak p = golden_section(composite, a, b, 1e-13, 1.0);
    const Peak grid{grid_point(window, i, n), v[i]};
    return p.value >= grid.value ? p : grid;
  };

  const std::size_t i1 = climb(index_of(first));
  const std::size_t i2 = climb(index_of(second));

  Resolvability report;
  report.first = refine_max(i1);
  report.second = report.first;
  if (i2 <= i1 + 1) {
    report.saddle = report.first;
    return report;  // merged, dip 1
  }
  report.second = refine_max(i2);

  std::size_t j = i1;
  for (std::size_t k = i1; k <= i2; ++k)
    if (v[k] < v[j]) j = k;
  const auto [a, b] = bracket(j);
  Peak saddle = golden_section(composite, a, b, 1e-13, -1.0);
  if (saddle.value > v[j]) saddle = {grid_point(window, j, n), v[j]};
  report.saddle = saddle;

  const double lower_peak = std::min(report.first.value, report.second.value);
  if (!(lower_peak > 0.0)) return report;
  report.merged = false;
  report.dip = saddle.value / lower_peak;
  report.resolvable = report.dip <= options.dip_threshold;
  return report;
}

}  // namespace fringekit

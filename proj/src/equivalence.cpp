#include "fringekit/equivalence.hpp"

#include <cmath>
#include <stdexcept>

#include "fringekit/errors.hpp"

namespace fringekit {

FpiWidth fpi_fwhm(double reflectivity) {
  if (!(reflectivity > 0.0 && reflectivity < 1.0))
    throw std::invalid_argument("fpi_fwhm: r must lie in (0, 1)");
  const double s = (1.0 - reflectivity * reflectivity) / (2.0 * reflectivity);
  if (s > 1.0) return {pi, true};
  return {2.0 * std::asin(s), false};
}

double nslit_fwhm(int slit_count, const FwhmOptions& options) {
  const FringeModel model = NSlitSpec::pure_grating(slit_count);
  return fwhm(make_fringe(model), default_window(model), options).width();
}

EquivalenceResult equivalent_reflectivity(int slit_count,
                                          const EquivalenceOptions& options) {
  if (slit_count < 2)
    throw std::invalid_argument("equivalent_reflectivity: N must be >= 2");
  if (!(options.r_lo > 0.0 && options.r_lo < options.r_hi &&
        options.r_hi < 1.0))
    throw std::invalid_argument("equivalent_reflectivity: bad r bracket");

  EquivalenceResult result;
  result.slit_count = slit_count;
  result.nslit_width = nslit_fwhm(slit_count, options.fwhm);
  const double target = result.nslit_width;

  // fpi_fwhm is decreasing in r.
  double lo = options.r_lo;
  double hi = options.r_hi;
  if (fpi_fwhm(lo).width < target || fpi_fwhm(hi).width > target)
    throw BracketError(
        "equivalent_reflectivity: r bracket does not contain the N-slit width");

  double r = 0.5 * (lo + hi);
  double width = fpi_fwhm(r).width;
  for (;;) {
    if (std::abs(width - target) <= options.relative_tolerance * target) break;
    if (width > target)
      lo = r;
    else
      hi = r;
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    r = mid;
    width = fpi_fwhm(r).width;
  }

  result.reflectivity = r;
  result.fpi_width = width;
  result.relative_mismatch = std::abs(width - target) / target;
  return result;
}

}  // namespace fringekit

#pragma once

// Matching a Fabry-Perot mirror reflectivity to an N-slit grating by equal
// FWHM of the principal transmission/interference peak.

#include "fringekit/resolution.hpp"

namespace fringekit {

struct FpiWidth {
  double width = 0.0;
  /// (1 - r^2) / (2r) > 1: the Airy function never falls to half maximum,
  /// width is reported as the full period pi.
  bool low_finesse = false;
};

/// 2 arcsin((1 - r^2) / (2r)) for 0 < r < 1.
FpiWidth fpi_fwhm(double reflectivity);

/// FWHM of the pure grating factor (b = 0) around alpha = 0.
double nslit_fwhm(int slit_count, const FwhmOptions& options = {});

struct EquivalenceOptions {
  double r_lo = 0.01;
  double r_hi = 1.0 - 1e-12;
  double relative_tolerance = 1e-9;
  FwhmOptions fwhm;
};

struct EquivalenceResult {
  int slit_count = 0;
  double reflectivity = 0.0;
  double fpi_width = 0.0;
  double nslit_width = 0.0;
  /// |fpi_width - nslit_width| / nslit_width
  double relative_mismatch = 0.0;
};

/// Bisection on r for fpi_fwhm(r) == nslit_fwhm(N). Throws BracketError if
/// the bracket does not straddle the N-slit width.
EquivalenceResult equivalent_reflectivity(int slit_count,
                                          const EquivalenceOptions& options = {});

}  // namespace fringekit

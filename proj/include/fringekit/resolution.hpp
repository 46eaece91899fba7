#pragma once

// Peak location, FWHM by bracketed bisection, the SNL/HL reference scalings,
// resolution-ratio sweeps and the Rayleigh two-peak test.

#include <cstddef>
#include <optional>
#include <vector>

#include "fringekit/fringe_models.hpp"
#include "fringekit/sampled_fringe.hpp"
#include "fringekit/types.hpp"

namespace fringekit {

struct Peak {
  double position = 0.0;
  double value = 0.0;
};

struct PeakSearchOptions {
  std::size_t grid_points = 10000;
  double tolerance = 1e-12;
};

/// Global maximum on the window: coarse grid scan, a few zoomed rescans
/// around the best sample, then golden-section refinement. Constant fringes
/// are accepted (the first grid point is returned).
Peak locate_maximum(const Fringe& fringe, PhaseInterval window,
                    const PeakSearchOptions& options = {});

/// As locate_maximum, but throws FlatFringeError when the fringe is constant
/// over the window.
Peak find_principal_peak(const Fringe& fringe, PhaseInterval window,
                         const PeakSearchOptions& options = {});
/// Largest sample; ties resolve to the first.
Peak find_principal_peak(const SampledFringe& fringe);

struct FwhmOptions {
  double tolerance = 1e-10;
  PeakSearchOptions peak;
};

struct FwhmResult {
  double peak_position = 0.0;
  double peak_value = 0.0;
  double left_half = 0.0;
  double right_half = 0.0;

  double width() const noexcept { return right_half - left_half; }
};

/// Half-maximum crossings on either side of the principal peak. Each side
/// walks outward on the peak-search grid to the first sample below half
/// maximum, then bisects that cell until it is narrower than the tolerance
/// and the residual is within 1e-9 of the peak value.
FwhmResult fwhm(const Fringe& fringe, PhaseInterval window,
                const FwhmOptions& options = {});
/// Sampled variant; crossings by linear interpolation between samples.
FwhmResult fwhm(const SampledFringe& fringe);

/// Shot-noise scaling 1/sqrt(K).
double snl_reference(int order);
/// Heisenberg scaling 1/N.
double hl_reference(int count);

enum class SweepAxis { order, slit_count };

struct CurveOptions {
  /// Product order applied to every member of a slit-count sweep.
  int fixed_order = 1;
  /// Defaults to default_window() of each swept model.
  std::optional<PhaseInterval> window;
  FwhmOptions fwhm;
};

struct ResolutionCurve {
  SweepAxis axis = SweepAxis::order;
  /// Swept values; the first entry is the baseline.
  std::vector<int> parameters;
  std::vector<double> widths;
  /// widths[i] / widths[0]
  std::vector<double> ratios;
  /// References normalised to the baseline: snl is 1/sqrt(K) (order
  /// sweeps only), hl is 1/K or baseline_N / N.
  std::vector<double> snl;
  std::vector<double> hl;
};

/// Measures FWHM across a sweep of the product order K (baseline K=1) or of
/// the slit count N of an N-slit model (baseline N=2). The baseline is
/// prepended when missing. Failures are rethrown as SweepError.
ResolutionCurve resolution_curve(const FringeModel& base, SweepAxis axis,
                                 const std::vector<int>& values,
                                 const CurveOptions& options = {});

/// 8/pi^2 (the sinc^2 Rayleigh dip) rounded up to four digits, so that two
/// peaks exactly one first-zero apart count as resolved.
inline constexpr double rayleigh_dip_threshold = 0.8106;

struct RayleighOptions {
  double dip_threshold = rayleigh_dip_threshold;
  /// Lower bound on the scan density over the window.
  std::size_t grid_points = 20000;
};

struct Resolvability {
  bool resolvable = false;
  /// saddle / min(peak values); 1 when the peaks merge.
  double dip = 1.0;
  bool merged = true;
  Peak first;
  Peak second;
  Peak saddle;
};

/// Climbs from each candidate position to its local maximum on the
/// composite, then finds the minimum between the two maxima.
Resolvability rayleigh_resolvable(const Fringe& composite, double first,
                                  double second, PhaseInterval window,
                                  const RayleighOptions& options = {});

}  // namespace fringekit

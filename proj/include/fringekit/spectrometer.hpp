#pragma once

// Grating spectrometer in the phase coordinate alpha of a reference line
// f0: line placement, detuning, composite K-powered scenes and pairwise
// Rayleigh verdicts.

#include <cstddef>
#include <vector>

#include "fringekit/resolution.hpp"

namespace fringekit {

class SpectralScene {
 public:
  /// line_ratios are f / f0.
  SpectralScene(double reference_frequency, std::vector<double> line_ratios,
                int slit_count, int product_order, int grating_order = -1);

  double reference_frequency() const noexcept { return f0_; }
  const std::vector<double>& line_ratios() const noexcept { return lines_; }
  int slit_count() const noexcept { return slit_count_; }
  int product_order() const noexcept { return product_order_; }
  int grating_order() const noexcept { return grating_order_; }

  SpectralScene with_product_order(int product_order) const;

 private:
  double f0_;
  std::vector<double> lines_;
  int slit_count_;
  int product_order_;
  int grating_order_;
};

/// p pi f0 / f: the principal maximum of line f in the reference phase.
double line_peak_phase(double frequency, double reference_frequency,
                       int grating_order);
/// p pi (f0 / f - 1)
double detuning(double frequency, double reference_frequency,
                int grating_order);
/// f0 p pi / (p pi + delta), the inverse of detuning().
double frequency_from_detuning(double delta, double reference_frequency,
                               int grating_order);

/// Sum over lines of the normalised grating factor shifted to each line's
/// peak phase and raised to the K-th power, normalised to the tallest peak
/// of the sum.
class SceneFringe {
 public:
  explicit SceneFringe(const SpectralScene& scene);

  double operator()(double alpha) const;

  const std::vector<double>& peak_phases() const noexcept { return peaks_; }
  /// Spans all lines plus four first-zero distances either side.
  PhaseInterval window() const noexcept { return window_; }
  /// Grid density that keeps at least ~20 samples across one line's FWHM.
  std::size_t grid_points() const noexcept { return grid_points_; }
  double normalization() const noexcept { return norm_; }

 private:
  double raw(double alpha) const;

  std::vector<double> peaks_;
  int slit_count_;
  int order_;
  PhaseInterval window_;
  std::size_t grid_points_;
  double norm_ = 1.0;
};

/// Convenience single-point evaluation; builds a SceneFringe per call.
double scene_intensity(double alpha, const SpectralScene& scene);

struct LinePairVerdict {
  std::size_t first = 0;
  std::size_t second = 0;
  Resolvability report;
};

struct ResolvingReport {
  std::vector<double> peak_phases;
  std::vector<double> detunings;
  /// All pairs i < j.
  std::vector<LinePairVerdict> pairs;
  /// FWHM of a single line at the scene's product order.
  double effective_fwhm = 0.0;
};

/// Needs at least two lines.
ResolvingReport resolve_scene(const SpectralScene& scene,
                              const RayleighOptions& options = {});

/// FWHM of the normalised grating factor raised to the K-th power.
double single_line_fwhm(int slit_count, int product_order,
                        const FwhmOptions& options = {});

}  // namespace fringekit

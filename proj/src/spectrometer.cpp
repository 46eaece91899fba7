#include "fringekit/spectrometer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fringekit/intensity_product.hpp"

namespace fringekit {

namespace {

void require_positive(double f, const char* who) {
  if (!(f > 0.0) || !std::isfinite(f))
    throw std::invalid_argument(std::string(who) +
                                ": frequencies must be positive");
}

void require_order(int p, const char* who) {
  if (p == 0)
    throw std::invalid_argument(std::string(who) + ": grating order must be non-zero");
}

constexpr double kWindowZeros = 4.0;
constexpr double kSamplesPerWidth = 20.0;

}  // namespace

SpectralScene::SpectralScene(double reference_frequency,
                             std::vector<double> line_ratios, int slit_count,
                             int product_order, int grating_order)
    : f0_(reference_frequency),
      lines_(std::move(line_ratios)),
      slit_count_(slit_count),
      product_order_(product_order),
      grating_order_(grating_order) {
  require_positive(reference_frequency, "SpectralScene");
  if (lines_.empty())
    throw std::invalid_argument("SpectralScene: empty line list");
  for (double ratio : lines_) require_positive(ratio, "SpectralScene");
  if (slit_count < 2)
    throw std::invalid_argument("SpectralScene: slit count must be >= 2");
  if (product_order < 1)
    throw std::invalid_argument("SpectralScene: product order must be >= 1");
  require_order(grating_order, "SpectralScene");
}

SpectralScene SpectralScene::with_product_order(int product_order) const {
  return SpectralScene(f0_, lines_, slit_count_, product_order, grating_order_);
}

double line_peak_phase(double frequency, double reference_frequency,
                       int grating_order) {
  require_positive(frequency, "line_peak_phase");
  require_positive(reference_frequency, "line_peak_phase");
  require_order(grating_order, "line_peak_phase");
  return grating_order * pi * (reference_frequency / frequency);
}

double detuning(double frequency, double reference_frequency,
                int grating_order) {
  require_positive(frequency, "detuning");
  require_positive(reference_frequency, "detuning");
  require_order(grating_order, "detuning");
  return grating_order * pi * (reference_frequency / frequency - 1.0);
}

double frequency_from_detuning(double delta, double reference_frequency,
                               int grating_order) {
  require_positive(reference_frequency, "frequency_from_detuning");
  require_order(grating_order, "frequency_from_detuning");
  const double base = grating_order * pi;
  const double denominator = base + delta;
  if (denominator == 0.0 || !std::isfinite(delta))
    throw std::invalid_argument(
        "frequency_from_detuning: detuning cancels the grating order");
  return reference_frequency * base / denominator;
}

SceneFringe::SceneFringe(const SpectralScene& scene)
    : slit_count_(scene.slit_count()), order_(scene.product_order()) {
  for (double ratio : scene.line_ratios())
    peaks_.push_back(line_peak_phase(ratio * scene.reference_frequency(),
                                     scene.reference_frequency(),
                                     scene.grating_order()));
  const auto [lo, hi] = std::minmax_element(peaks_.begin(), peaks_.end());
  const double margin = kWindowZeros * pi / slit_count_;
  window_ = {*lo - margin, *hi + margin};

  // Closed-form width estimate, only used to size the scan grid.
  const double line_width = 2.783 / (slit_count_ * std::sqrt(double(order_)));
  grid_points_ = std::max<std::size_t>(
      10000, static_cast<std::size_t>(
                 std::ceil(window_.width() / line_width * kSamplesPerWidth)));

  PeakSearchOptions search;
  search.grid_points = grid_points_;
  norm_ = locate_maximum([this](double a) { return raw(a); }, window_, search)
              .value;
}

double SceneFringe::raw(double alpha) const {
  const double n2 = double(slit_count_) * double(slit_count_);
  double sum = 0.0;
  for (double peak : peaks_)
    sum += stable_power(grating_factor(alpha - peak, slit_count_) / n2, order_);
  return sum;
}

double SceneFringe::operator()(double alpha) const { return raw(alpha) / norm_; }

double scene_intensity(double alpha, const SpectralScene& scene) {
  return SceneFringe(scene)(alpha);
}

double single_line_fwhm(int slit_count, int product_order,
                        const FwhmOptions& options) {
  const FringeModel model = NSlitSpec::pure_grating(slit_count);
  const PhaseInterval window = default_window(model);
  const KPowerFringe powered =
      kth_power(make_fringe(model), ProductOrder(product_order), window, true);
  return fwhm(powered, window, options).width();
}

ResolvingReport resolve_scene(const SpectralScene& scene,
                              const RayleighOptions& options) {
  if (scene.line_ratios().size() < 2)
    throw std::invalid_argument("resolve_scene: need at least two lines");
  const SceneFringe fringe(scene);
  ResolvingReport report;
  report.peak_phases = fringe.peak_phases();
  for (double ratio : scene.line_ratios())
    report.detunings.push_back(detuning(ratio * scene.reference_frequency(),
                                        scene.reference_frequency(),
                                        scene.grating_order()));

  RayleighOptions scan = options;
  scan.grid_points = std::max(options.grid_points, fringe.grid_points());
  const Fringe composite = [&fringe](double a) { return fringe(a); };
  const auto& peaks = report.peak_phases;
  for (std::size_t i = 0; i < peaks.size(); ++i)
    for (std::size_t j = i + 1; j < peaks.size(); ++j)
      report.pairs.push_back(
          {i, j,
           rayleigh_resolvable(composite, peaks[i], peaks[j], fringe.window(),
                               scan)});

  report.effective_fwhm =
      single_line_fwhm(scene.slit_count(), scene.product_order());
  return report;
}

}  // namespace fringekit

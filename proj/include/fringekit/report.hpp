#pragma once

// Figure pipelines, generic run modes and CSV / JSON / SVG emission.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fringekit/fringe_models.hpp"
#include "fringekit/resolution.hpp"

namespace fringekit {

enum class OutputFormat { csv, json, svg };

OutputFormat parse_format(const std::string& name);
std::string format_name(OutputFormat format);

/// Options shared by every run mode. Unset optionals fall back to the
/// per-figure defaults (N=1000/K=100 for the spectrometer, N=100 for the
/// combined N,K ratio panel, the solver r for the FPI overlay, ...).
struct RunConfig {
  std::string model = "mzi";  // mzi|split|nslit|fpi|super|gaussian|linear
  std::optional<int> slit_count;
  std::optional<int> product_order;
  std::optional<double> reflectivity;
  /// a/b for N-slit models; 0 selects the pure grating factor (b = 0).
  double slit_ratio = 3.0;
  /// Profile sigma / half-width.
  double scale = 1.0;
  /// Analysis window for the fwhm and sweep modes.
  std::optional<PhaseInterval> window;
  double tolerance = 1e-10;
  double dip_threshold = rayleigh_dip_threshold;
  /// Samples per emitted fringe series (figures raise this where the
  /// fringes are narrow).
  std::size_t samples = 1001;
  SweepAxis axis = SweepAxis::order;
  std::vector<int> sweep_values{1, 2, 3, 4, 8, 50, 100};
  /// Line frequencies as ratios to f0 = 1.
  std::vector<double> lines{1.0, 0.999};
  int grating_order = -1;
  OutputFormat format = OutputFormat::csv;
  /// Empty or "-" writes to stdout.
  std::string out;
};

/// Key/value listing of every config field, in a fixed order.
std::map<std::string, std::string> describe(const RunConfig& config);

struct Series {
  std::string label;
  std::string panel;
  std::string model;
  std::map<std::string, double> parameters;
  bool reference = false;
  std::vector<double> x;
  std::vector<double> y;

  bool operator==(const Series&) const = default;
};

struct FigureBundle {
  /// 2..7 for figure pipelines, 0 for the generic run modes.
  int figure = 0;
  std::string name;
  std::map<std::string, std::string> config;
  std::vector<Series> series;
  std::map<std::string, double> scalars;
  std::map<std::string, std::string> verdicts;

  bool operator==(const FigureBundle&) const = default;
};

/// Throws std::invalid_argument for ids outside 2..7.
FigureBundle run_figure(int id, const RunConfig& config);

FringeModel make_model(const RunConfig& config);
FigureBundle run_fwhm(const RunConfig& config);
FigureBundle run_sweep(const RunConfig& config);
FigureBundle run_spectrometer(const RunConfig& config);
FigureBundle run_equivalence(const RunConfig& config);

/// 12 significant digits, %g style (scientific below 1e-4).
std::string format_number(double value);

std::string to_csv(const FigureBundle& bundle);
nlohmann::json to_json(const FigureBundle& bundle);
FigureBundle from_json(const nlohmann::json& j);
std::string to_svg(const FigureBundle& bundle);
std::string render(const FigureBundle& bundle, OutputFormat format);

/// Writes to `path` ("" or "-" is stdout). Throws IoError with the path.
void emit(const FigureBundle& bundle, OutputFormat format,
          const std::string& path);

}  // namespace fringekit

// fringekit command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 I/O error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fringekit/errors.hpp"
#include "fringekit/report.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kNumerical = 2, kIo = 3 };

}  // namespace

int main(int argc, char** argv) {
  using namespace fringekit;

  CLI::App app{"Interferometer fringe, intensity-product and resolution toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key = value config file");

  RunConfig config;
  std::optional<int> n_slits, order_k;
  std::optional<double> reflectivity;
  std::vector<double> window;
  std::string format = "csv";
  std::string axis = "order";

  app.add_option("--n-slits", n_slits, "Slit count N (also fold count for 'super')");
  app.add_option("--order-k", order_k, "Intensity-product order K");
  app.add_option("--reflectivity", reflectivity, "FPI mirror reflection coefficient r");
  app.add_option("--slit-ratio", config.slit_ratio,
                 "Slit separation / width a/b; 0 for the pure grating factor")
      ->capture_default_str();
  app.add_option("--window", window, "Analysis window lo hi (radians)")->expected(2);
  app.add_option("--tol", config.tolerance, "FWHM bisection tolerance")
      ->capture_default_str();
  app.add_option("--dip-threshold", config.dip_threshold, "Rayleigh dip threshold")
      ->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "svg"}))
      ->capture_default_str();
  app.add_option("--out", config.out, "Output path ('-' or empty: stdout)");
  app.add_option("--samples", config.samples, "Samples per fringe series")
      ->capture_default_str();
  app.add_option("--model", config.model, "Fringe model")
      ->check(CLI::IsMember({"mzi", "split", "nslit", "fpi", "super", "gaussian", "linear"}))
      ->capture_default_str();
  app.add_option("--scale", config.scale, "Profile sigma / half-width")
      ->capture_default_str();
  app.add_option("--axis", axis, "Sweep axis")
      ->check(CLI::IsMember({"order", "slits"}))
      ->capture_default_str();
  app.add_option("--values", config.sweep_values, "Sweep values")->delimiter(',');
  app.add_option("--lines", config.lines, "Line frequencies as ratios to f0")
      ->delimiter(',');
  app.add_option("--grating-order", config.grating_order, "Grating order p")
      ->capture_default_str();

  int figure_id = 0;
  auto* figure = app.add_subcommand("figure", "Reproduce one figure pipeline (2..7)");
  figure->add_option("id", figure_id, "Figure id")->required()->check(CLI::Range(2, 7));
  auto* fwhm_cmd = app.add_subcommand("fwhm", "FWHM of one (K-powered) model fringe");
  auto* sweep = app.add_subcommand("sweep", "FWHM ratio sweep over K or N");
  auto* spectrometer = app.add_subcommand("spectrometer", "Resolve a set of spectral lines");
  auto* equivalence = app.add_subcommand("equivalence", "FPI reflectivity matching N slits");
  for (auto* sub : {figure, fwhm_cmd, sweep, spectrometer, equivalence}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    config.slit_count = n_slits;
    config.product_order = order_k;
    config.reflectivity = reflectivity;
    if (!window.empty()) config.window = PhaseInterval{window[0], window[1]};
    config.format = parse_format(format);
    config.axis = axis == "order" ? SweepAxis::order : SweepAxis::slit_count;

    FigureBundle bundle;
    if (*figure)
      bundle = run_figure(figure_id, config);
    else if (*fwhm_cmd)
      bundle = run_fwhm(config);
    else if (*sweep)
      bundle = run_sweep(config);
    else if (*spectrometer)
      bundle = run_spectrometer(config);
    else
      bundle = run_equivalence(config);
    emit(bundle, config.format, config.out);
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

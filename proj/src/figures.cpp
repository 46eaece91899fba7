#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fringekit/equivalence.hpp"
#include "fringekit/intensity_product.hpp"
#include "fringekit/report.hpp"
#include "fringekit/spectrometer.hpp"

namespace fringekit {

namespace {

const std::vector<int> kFigure2Orders{1, 2, 3, 4, 8, 50, 100};

std::map<std::string, double> to_map(
    const std::vector<std::pair<std::string, double>>& params) {
  return {params.begin(), params.end()};
}

Series sample_series(std::string label, std::string panel,
                     const FringeModel& model, const Fringe& fringe,
                     PhaseInterval range, std::size_t samples) {
  Series s;
  s.label = std::move(label);
  s.panel = std::move(panel);
  s.model = model_name(model);
  s.parameters = to_map(model_parameters(model));
  const SampledFringe sampled = SampledFringe::sample(fringe, range, samples);
  for (std::size_t i = 0; i < sampled.size(); ++i) {
    s.x.push_back(i + 1 == sampled.size() ? range.hi : sampled.phase(i));
    s.y.push_back(sampled.value(i));
  }
  return s;
}

Series xy_series(std::string label, std::string panel, std::vector<double> x,
                 std::vector<double> y, bool reference = false) {
  Series s;
  s.label = std::move(label);
  s.panel = std::move(panel);
  s.reference = reference;
  s.x = std::move(x);
  s.y = std::move(y);
  return s;
}

std::vector<double> as_doubles(const std::vector<int>& v) {
  return {v.begin(), v.end()};
}

std::vector<int> int_range(int first, int last) {
  std::vector<int> v(static_cast<std::size_t>(last - first + 1));
  std::iota(v.begin(), v.end(), first);
  return v;
}

CurveOptions curve_options(const RunConfig& config) {
  CurveOptions options;
  options.fwhm.tolerance = config.tolerance;
  return options;
}

FigureBundle start_bundle(int figure, std::string name,
                          const RunConfig& config) {
  FigureBundle b;
  b.figure = figure;
  b.name = std::move(name);
  b.config = describe(config);
  return b;
}

std::string k_label(int k) { return "K=" + std::to_string(k); }

const char* verdict(bool resolvable) {
  return resolvable ? "resolvable" : "unresolvable";
}

// Mach-Zehnder K-power sweep against 1/sqrt(K).
FigureBundle figure2(const RunConfig& config) {
  FigureBundle b = start_bundle(2, "fig2", config);
  const MziSpec mzi(1.0, MziPort::A);
  const FringeModel model = mzi;
  const PhaseInterval window = default_window(model);
  for (int k : kFigure2Orders) {
    Series s = sample_series(
        k_label(k), "fringes", model,
        kth_power(make_fringe(model), ProductOrder(k), window, true), window,
        config.samples);
    s.parameters["K"] = k;
    b.series.push_back(std::move(s));
  }

  const ResolutionCurve curve = resolution_curve(
      model, SweepAxis::order, kFigure2Orders, curve_options(config));
  b.series.push_back(xy_series("FWHM ratio", "ratio",
                               as_doubles(curve.parameters), curve.ratios));
  std::vector<double> ks, snl;
  for (int k = 1; k <= 100; ++k) {
    ks.push_back(k);
    snl.push_back(snl_reference(k));
  }
  b.series.push_back(xy_series("1/sqrt(K)", "ratio", ks, snl, true));

  b.scalars["fwhm_K1"] = curve.widths.front();
  for (std::size_t i = 0; i < curve.parameters.size(); ++i)
    b.scalars["ratio_K" + std::to_string(curve.parameters[i])] = curve.ratios[i];
  return b;
}

// Gaussian and linear profiles: K-power FWHM ratios with SNL and HL.
FigureBundle figure3(const RunConfig& config) {
  FigureBundle b = start_bundle(3, "fig3", config);
  const double sigma = 1.0;
  // Triangle half-width chosen so both profiles share the K=1 FWHM.
  const double half_width = 2.0 * std::sqrt(2.0 * std::numbers::ln2) * sigma;
  const FringeModel gaussian = ProfileSpec(ProfileKind::gaussian, sigma);
  const FringeModel linear = ProfileSpec(ProfileKind::linear, half_width);
  const PhaseInterval range{-4.0 * sigma, 4.0 * sigma};

  for (const auto& [model, panel] :
       {std::pair{gaussian, "gaussian"}, std::pair{linear, "linear"}}) {
    for (int k : kFigure2Orders) {
      Series s = sample_series(
          k_label(k), panel, model,
          kth_power(make_fringe(model), ProductOrder(k), default_window(model),
                    true),
          range, config.samples);
      s.parameters["K"] = k;
      b.series.push_back(std::move(s));
    }
  }

  const std::vector<int> orders = int_range(1, 100);
  const ResolutionCurve g = resolution_curve(gaussian, SweepAxis::order, orders,
                                             curve_options(config));
  const ResolutionCurve l = resolution_curve(linear, SweepAxis::order, orders,
                                             curve_options(config));
  const std::vector<double> x = as_doubles(orders);
  b.series.push_back(xy_series("gaussian ratio", "ratio", x, g.ratios));
  b.series.push_back(xy_series("linear ratio", "ratio", x, l.ratios));
  b.series.push_back(xy_series("SNL 1/sqrt(K)", "ratio", x, g.snl, true));
  b.series.push_back(xy_series("HL 1/K", "ratio", x, g.hl, true));

  for (int k : {2, 4, 100}) {
    b.scalars["ratio_gaussian_K" + std::to_string(k)] = g.ratios[k - 1];
    b.scalars["ratio_linear_K" + std::to_string(k)] = l.ratios[k - 1];
  }
  return b;
}

NSlitSpec slit_model(int n, const RunConfig& config) {
  return config.slit_ratio > 0.0
             ? NSlitSpec::with_slit_ratio(n, config.slit_ratio)
             : NSlitSpec::pure_grating(n);
}

Fringe unit_peak_nslit(const NSlitSpec& spec) {
  const double n2 = double(spec.slit_count()) * spec.slit_count();
  return [spec, n2](double alpha) {
    return nslit_intensity(alpha, alpha * spec.width_to_separation(), spec) / n2;
  };
}

// N-slit fringes (a = 3b) and grating-factor FWHM against pi/N.
FigureBundle figure4(const RunConfig& config) {
  FigureBundle b = start_bundle(4, "fig4", config);
  const std::size_t samples = std::max<std::size_t>(config.samples, 4001);
  for (int n : {2, 10, 40}) {
    const NSlitSpec spec = slit_model(n, config);
    b.series.push_back(sample_series("N=" + std::to_string(n), "fringes", spec,
                                     unit_peak_nslit(spec),
                                     {-1.5 * pi, 1.5 * pi}, samples));
  }

  const std::vector<int> counts = int_range(2, 40);
  const ResolutionCurve curve =
      resolution_curve(NSlitSpec::pure_grating(2), SweepAxis::slit_count,
                       counts, curve_options(config));
  std::vector<double> reference;
  for (int n : counts) reference.push_back(pi / n);
  b.series.push_back(
      xy_series("FWHM", "resolution", as_doubles(counts), curve.widths));
  b.series.push_back(
      xy_series("pi/N", "resolution", as_doubles(counts), reference, true));
  for (int n : {2, 10, 40})
    b.scalars["fwhm_N" + std::to_string(n)] = curve.widths[n - 2];
  return b;
}

// K-powered N-slit fringes over N = 2..200 and the K ratio panel.
FigureBundle figure5(const RunConfig& config) {
  FigureBundle b = start_bundle(5, "fig5", config);
  const int k_fixed = 40;
  const int n_panel = config.slit_count.value_or(100);
  const std::size_t samples = std::max<std::size_t>(config.samples, 4001);

  for (int n : {2, 20, 200}) {
    const NSlitSpec spec = slit_model(n, config);
    const PhaseInterval window = default_window(spec);
    Series s = sample_series(
        "N=" + std::to_string(n) + " K=40", "fringes", spec,
        kth_power(unit_peak_nslit(spec), ProductOrder(k_fixed), window, true),
        {-0.3, 0.3}, samples);
    s.parameters["K"] = k_fixed;
    b.series.push_back(std::move(s));
  }

  const std::vector<int> counts = int_range(2, 200);
  const FringeModel grating = NSlitSpec::pure_grating(2);
  CurveOptions options = curve_options(config);
  const ResolutionCurve k1 =
      resolution_curve(grating, SweepAxis::slit_count, counts, options);
  options.fixed_order = k_fixed;
  const ResolutionCurve k40 =
      resolution_curve(grating, SweepAxis::slit_count, counts, options);
  std::vector<double> reference;
  for (int n : counts) reference.push_back(pi / n);
  const std::vector<double> x = as_doubles(counts);
  b.series.push_back(xy_series("FWHM K=1", "fwhm", x, k1.widths));
  b.series.push_back(xy_series("FWHM K=40", "fwhm", x, k40.widths));
  b.series.push_back(xy_series("pi/N", "fwhm", x, reference, true));

  const std::vector<int> orders = int_range(1, k_fixed);
  const ResolutionCurve ratio =
      resolution_curve(NSlitSpec::pure_grating(n_panel), SweepAxis::order,
                       orders, curve_options(config));
  b.series.push_back(xy_series("FWHM ratio N=" + std::to_string(n_panel),
                               "ratio", as_doubles(orders), ratio.ratios));
  b.series.push_back(
      xy_series("SNL 1/sqrt(K)", "ratio", as_doubles(orders), ratio.snl, true));

  b.scalars["fwhm_N200_K1"] = k1.widths.back();
  b.scalars["fwhm_N200_K40"] = k40.widths.back();
  b.scalars["ratio_N" + std::to_string(n_panel) + "_K40"] = ratio.ratios.back();
  return b;
}

Series scene_series(const std::string& label, const SpectralScene& scene,
                    std::size_t samples) {
  const SceneFringe fringe(scene);
  Series s;
  s.label = label;
  s.panel = "K=" + std::to_string(scene.product_order());
  s.model = "spectral_scene";
  s.parameters = {{"N", double(scene.slit_count())},
                  {"K", double(scene.product_order())},
                  {"p", double(scene.grating_order())},
                  {"f0", scene.reference_frequency()}};
  for (std::size_t i = 0; i < scene.line_ratios().size(); ++i)
    s.parameters["line" + std::to_string(i)] = scene.line_ratios()[i];
  const SampledFringe sampled = SampledFringe::sample(
      [&fringe](double a) { return fringe(a); }, fringe.window(), samples);
  for (std::size_t i = 0; i < sampled.size(); ++i) {
    s.x.push_back(sampled.phase(i));
    s.y.push_back(sampled.value(i));
  }
  return s;
}

// Grating spectrometer: f0, f' = 0.999 f0 and f'' = 0.9995 f0.
FigureBundle figure6(const RunConfig& config) {
  FigureBundle b = start_bundle(6, "fig6", config);
  const int n = config.slit_count.value_or(1000);
  const int k_high = config.product_order.value_or(100);
  const int p = config.grating_order;
  const double f_prime = 0.999;
  const double f_second = 0.9995;
  const std::size_t samples = std::max<std::size_t>(config.samples, 8001);
  RayleighOptions rayleigh;
  rayleigh.dip_threshold = config.dip_threshold;

  b.scalars["alpha_f_prime"] = line_peak_phase(f_prime, 1.0, p);
  b.scalars["alpha_f_second"] = line_peak_phase(f_second, 1.0, p);
  b.scalars["delta_f_prime_over_pi"] = detuning(f_prime, 1.0, p) / pi;
  b.scalars["delta_f_second_over_pi"] = detuning(f_second, 1.0, p) / pi;

  struct Named {
    std::string name;
    std::string label;
    std::vector<double> lines;
  };
  const std::vector<Named> scenes{
      {"f_prime", "f0+f'", {1.0, f_prime}},
      {"f_second", "f0+f''", {1.0, f_second}},
      {"all_lines", "f0+f'+f''", {1.0, f_prime, f_second}},
  };
  for (int k : {1, k_high}) {
    const std::string tag = "@K=" + std::to_string(k);
    b.scalars["fwhm_K" + std::to_string(k)] = single_line_fwhm(n, k);
    for (const auto& named : scenes) {
      const SpectralScene scene(1.0, named.lines, n, k, p);
      const ResolvingReport report = resolve_scene(scene, rayleigh);
      bool all = true;
      for (const auto& pair : report.pairs) all = all && pair.report.resolvable;
      b.verdicts[named.name + tag] = verdict(all);
      if (report.pairs.size() == 1)
        b.scalars["dip_" + named.name + "_K" + std::to_string(k)] =
            report.pairs.front().report.dip;
      b.series.push_back(scene_series(named.label + " K=" + std::to_string(k),
                                      scene, samples));
    }
  }
  return b;
}

// FPI, N-slit and superresolution fringes at matched widths.
FigureBundle figure7(const RunConfig& config) {
  FigureBundle b = start_bundle(7, "fig7", config);
  const int n_first = config.slit_count.value_or(1000);
  const std::size_t samples = std::max<std::size_t>(config.samples, 2001);
  FwhmOptions fwhm_options;
  fwhm_options.tolerance = config.tolerance;

  for (int n : {n_first, 10 * n_first}) {
    const std::string tag = "N" + std::to_string(n);
    EquivalenceOptions eq_options;
    eq_options.fwhm = fwhm_options;
    const EquivalenceResult eq = equivalent_reflectivity(n, eq_options);
    const double r = (n == n_first && config.reflectivity) ? *config.reflectivity
                                                           : eq.reflectivity;
    const PhaseInterval range{-3.0 * pi / n, 3.0 * pi / n};
    const std::string panel = "N=" + std::to_string(n);

    const FpiSpec fpi(r);
    const NSlitSpec grating = NSlitSpec::pure_grating(n);
    const SuperresolutionSpec super(n);
    b.series.push_back(sample_series("FPI r=" + format_number(r), panel, fpi,
                                     make_fringe(fpi), range, samples));
    b.series.push_back(sample_series("N-slit " + panel, panel, grating,
                                     unit_peak_nslit(grating), range, samples));
    b.series.push_back(sample_series("superresolution " + panel, panel, super,
                                     make_fringe(super), range, samples));

    const double super_width =
        fwhm(make_fringe(super), default_window(super), fwhm_options).width();
    b.scalars["r_" + tag] = r;
    b.scalars["r_matched_" + tag] = eq.reflectivity;
    b.scalars["fwhm_fpi_" + tag] = fpi_fwhm(r).width;
    b.scalars["fwhm_nslit_" + tag] = eq.nslit_width;
    b.scalars["fwhm_super_" + tag] = super_width;
    b.scalars["mismatch_" + tag] = eq.relative_mismatch;
  }
  return b;
}

}  // namespace

FigureBundle run_figure(int id, const RunConfig& config) {
  switch (id) {
    case 2: return figure2(config);
    case 3: return figure3(config);
    case 4: return figure4(config);
    case 5: return figure5(config);
    case 6: return figure6(config);
    case 7: return figure7(config);
    default:
      throw std::invalid_argument("run_figure: figure id must be 2..7, got " +
                                  std::to_string(id));
  }
}

FringeModel make_model(const RunConfig& c) {
  const std::string& m = c.model;
  if (m == "mzi") return MziSpec(1.0, MziPort::A);
  if (m == "split") return SplitPortSpec(1.0, c.product_order.value_or(1));
  if (m == "nslit") return slit_model(c.slit_count.value_or(10), c);
  if (m == "fpi") return FpiSpec(c.reflectivity.value_or(0.9));
  if (m == "super") return SuperresolutionSpec(c.slit_count.value_or(10));
  if (m == "gaussian") return ProfileSpec(ProfileKind::gaussian, c.scale);
  if (m == "linear") return ProfileSpec(ProfileKind::linear, c.scale);
  throw std::invalid_argument("unknown model '" + m + "'");
}

FigureBundle run_fwhm(const RunConfig& config) {
  FigureBundle b = start_bundle(0, "fwhm", config);
  const FringeModel model = make_model(config);
  const PhaseInterval window = config.window.value_or(default_window(model));
  const int k = config.model == "split" ? 1 : config.product_order.value_or(1);
  const KPowerFringe powered =
      kth_power(make_fringe(model), ProductOrder(k), window, true);
  FwhmOptions options;
  options.tolerance = config.tolerance;
  const FwhmResult r = fwhm(powered, window, options);
  Series s = sample_series(model_name(model) + " K=" + std::to_string(k),
                           "fringe", model, powered, window, config.samples);
  s.parameters["K"] = k;
  b.series.push_back(std::move(s));
  b.scalars = {{"peak_position", r.peak_position},
               {"peak_value", r.peak_value},
               {"left_half", r.left_half},
               {"right_half", r.right_half},
               {"width", r.width()}};
  return b;
}

FigureBundle run_sweep(const RunConfig& config) {
  FigureBundle b = start_bundle(0, "sweep", config);
  const FringeModel model = make_model(config);
  CurveOptions options = curve_options(config);
  options.window = config.window;
  options.fixed_order = config.product_order.value_or(1);
  const ResolutionCurve curve =
      resolution_curve(model, config.axis, config.sweep_values, options);
  const std::vector<double> x = as_doubles(curve.parameters);
  Series ratio = xy_series("FWHM ratio", "ratio", x, curve.ratios);
  ratio.model = model_name(model);
  ratio.parameters = to_map(model_parameters(model));
  b.series.push_back(xy_series("FWHM", "fwhm", x, curve.widths));
  b.series.push_back(std::move(ratio));
  if (!curve.snl.empty())
    b.series.push_back(xy_series("SNL", "ratio", x, curve.snl, true));
  b.series.push_back(xy_series("HL", "ratio", x, curve.hl, true));
  b.scalars["baseline_fwhm"] = curve.widths.front();
  b.scalars["last_ratio"] = curve.ratios.back();
  return b;
}

FigureBundle run_spectrometer(const RunConfig& config) {
  FigureBundle b = start_bundle(0, "spectrometer", config);
  const SpectralScene scene(1.0, config.lines, config.slit_count.value_or(1000),
                            config.product_order.value_or(1),
                            config.grating_order);
  RayleighOptions rayleigh;
  rayleigh.dip_threshold = config.dip_threshold;
  const ResolvingReport report = resolve_scene(scene, rayleigh);
  b.series.push_back(scene_series("scene", scene,
                                  std::max<std::size_t>(config.samples, 8001)));
  for (std::size_t i = 0; i < report.peak_phases.size(); ++i) {
    b.scalars["alpha_line" + std::to_string(i)] = report.peak_phases[i];
    b.scalars["delta_line" + std::to_string(i)] = report.detunings[i];
  }
  for (const auto& pair : report.pairs) {
    const std::string key =
        "line" + std::to_string(pair.first) + "_line" + std::to_string(pair.second);
    b.verdicts[key] = verdict(pair.report.resolvable);
    b.scalars["dip_" + key] = pair.report.dip;
  }
  b.scalars["effective_fwhm"] = report.effective_fwhm;
  return b;
}

FigureBundle run_equivalence(const RunConfig& config) {
  FigureBundle b = start_bundle(0, "equivalence", config);
  EquivalenceOptions options;
  options.fwhm.tolerance = config.tolerance;
  const EquivalenceResult eq =
      equivalent_reflectivity(config.slit_count.value_or(1000), options);
  b.scalars = {{"N", double(eq.slit_count)},
               {"r", eq.reflectivity},
               {"fwhm_fpi", eq.fpi_width},
               {"fwhm_nslit", eq.nslit_width},
               {"relative_mismatch", eq.relative_mismatch}};
  return b;
}

}  // namespace fringekit

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fringekit/equivalence.hpp"
#include "fringekit/errors.hpp"
#include "fringekit/fringe_models.hpp"
#include "fringekit/intensity_product.hpp"
#include "fringekit/report.hpp"
#include "fringekit/resolution.hpp"
#include "fringekit/spectrometer.hpp"

namespace py = pybind11;
using namespace fringekit;

namespace {

RunConfig make_config(const std::string& model, std::optional<int> n_slits,
                      std::optional<int> order,
                      std::optional<double> reflectivity, double slit_ratio,
                      double scale,
                      std::optional<std::pair<double, double>> window,
                      double tol, std::size_t samples) {
  RunConfig c;
  c.model = model;
  c.slit_count = n_slits;
  c.product_order = order;
  c.reflectivity = reflectivity;
  c.slit_ratio = slit_ratio;
  c.scale = scale;
  if (window) c.window = PhaseInterval{window->first, window->second};
  c.tolerance = tol;
  c.samples = samples;
  return c;
}

py::object bundle_to_python(const FigureBundle& b) {
  return py::module_::import("json").attr("loads")(to_json(b).dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "fringekit native core";

  auto fringe_error =
      py::register_exception<NumericalError>(m, "FringeError", PyExc_RuntimeError);
  py::register_exception<SweepError>(m, "SweepError", fringe_error.ptr());

  m.def(
      "mzi_intensity",
      [](double phase, double i0, const std::string& port) {
        if (port != "A" && port != "B")
          throw std::invalid_argument("port must be 'A' or 'B'");
        return mzi_intensity(phase, MziSpec(i0, port == "A" ? MziPort::A : MziPort::B));
      },
      py::arg("phase"), py::arg("i0") = 1.0, py::arg("port") = "A");

  m.def(
      "nslit_intensity",
      [](double alpha, int n, double slit_ratio) {
        const NSlitSpec spec = slit_ratio > 0.0 ? NSlitSpec::with_slit_ratio(n, slit_ratio)
                                                : NSlitSpec::pure_grating(n);
        return evaluate(spec, alpha);
      },
      py::arg("alpha"), py::arg("n"), py::arg("slit_ratio") = 0.0,
      "Intensity at grating phase alpha; slit_ratio=0 drops the slit-width envelope.");

  m.def(
      "fpi_transmission",
      [](double delta, double r) { return fpi_transmission(delta, FpiSpec(r)); },
      py::arg("delta"), py::arg("r"));

  m.def(
      "superresolution_fringe",
      [](double phase, int n) { return superresolution_fringe(phase, SuperresolutionSpec(n)); },
      py::arg("phase"), py::arg("n"));

  m.def(
      "kth_order_correlation",
      [](double phase, double i0, int k) {
        const CorrelationValue v = kth_order_correlation(phase, i0, ProductOrder(k));
        return py::make_tuple(v.log_value, v.normalized);
      },
      py::arg("phase"), py::arg("i0"), py::arg("k"),
      "Returns (log of the absolute value, value normalised to the peak).");

  m.def(
      "fwhm",
      [](const std::string& model, int order, std::optional<int> n_slits,
         std::optional<double> reflectivity, double slit_ratio, double scale,
         std::optional<std::pair<double, double>> window, double tol) {
        const RunConfig c = make_config(model, n_slits, order, reflectivity,
                                        slit_ratio, scale, window, tol, 3);
        return run_fwhm(c).scalars;
      },
      py::arg("model"), py::arg("order") = 1, py::arg("n_slits") = py::none(),
      py::arg("reflectivity") = py::none(), py::arg("slit_ratio") = 3.0,
      py::arg("scale") = 1.0, py::arg("window") = py::none(), py::arg("tol") = 1e-10);

  m.def(
      "resolution_curve",
      [](const std::string& model, const std::string& axis,
         const std::vector<int>& values, int fixed_order,
         std::optional<int> n_slits, std::optional<double> reflectivity,
         double slit_ratio, double scale,
         std::optional<std::pair<double, double>> window) {
        RunConfig c = make_config(model, n_slits, std::nullopt, reflectivity,
                                  slit_ratio, scale, std::nullopt, 1e-10, 3);
        if (axis != "order" && axis != "slits")
          throw std::invalid_argument("axis must be 'order' or 'slits'");
        CurveOptions options;
        options.fixed_order = fixed_order;
        if (window) options.window = PhaseInterval{window->first, window->second};
        const ResolutionCurve curve = resolution_curve(
            make_model(c), axis == "order" ? SweepAxis::order : SweepAxis::slit_count,
            values, options);
        py::dict d;
        d["parameters"] = curve.parameters;
        d["widths"] = curve.widths;
        d["ratios"] = curve.ratios;
        d["snl"] = curve.snl;
        d["hl"] = curve.hl;
        return d;
      },
      py::arg("model"), py::arg("axis") = "order", py::arg("values"),
      py::arg("fixed_order") = 1, py::arg("n_slits") = py::none(),
      py::arg("reflectivity") = py::none(), py::arg("slit_ratio") = 3.0,
      py::arg("scale") = 1.0, py::arg("window") = py::none());

  m.def(
      "fpi_fwhm",
      [](double r) {
        const FpiWidth w = fpi_fwhm(r);
        return py::make_tuple(w.width, w.low_finesse);
      },
      py::arg("r"), "Returns (width, low_finesse).");

  m.def("nslit_fwhm", [](int n) { return nslit_fwhm(n); }, py::arg("n"));

  m.def(
      "equivalent_reflectivity",
      [](int n) {
        const EquivalenceResult e = equivalent_reflectivity(n);
        py::dict d;
        d["n"] = e.slit_count;
        d["r"] = e.reflectivity;
        d["fwhm_fpi"] = e.fpi_width;
        d["fwhm_nslit"] = e.nslit_width;
        d["relative_mismatch"] = e.relative_mismatch;
        return d;
      },
      py::arg("n"));

  m.def("line_peak_phase", &line_peak_phase, py::arg("frequency"),
        py::arg("reference_frequency"), py::arg("grating_order") = -1);
  m.def("detuning", &detuning, py::arg("frequency"),
        py::arg("reference_frequency"), py::arg("grating_order") = -1);
  m.def("frequency_from_detuning", &frequency_from_detuning, py::arg("delta"),
        py::arg("reference_frequency"), py::arg("grating_order") = -1);

  m.def(
      "single_line_fwhm", [](int n, int k) { return single_line_fwhm(n, k); },
      py::arg("n"), py::arg("k"));

  m.def(
      "resolve_scene",
      [](const std::vector<double>& lines, int n_slits, int order,
         int grating_order, double dip_threshold) {
        const SpectralScene scene(1.0, lines, n_slits, order, grating_order);
        RayleighOptions options;
        options.dip_threshold = dip_threshold;
        const ResolvingReport r = resolve_scene(scene, options);
        py::list pairs;
        for (const auto& p : r.pairs) {
          py::dict d;
          d["lines"] = py::make_tuple(p.first, p.second);
          d["resolvable"] = p.report.resolvable;
          d["dip"] = p.report.dip;
          pairs.append(d);
        }
        py::dict d;
        d["peak_phases"] = r.peak_phases;
        d["detunings"] = r.detunings;
        d["pairs"] = pairs;
        d["effective_fwhm"] = r.effective_fwhm;
        return d;
      },
      py::arg("lines"), py::arg("n_slits") = 1000, py::arg("order") = 1,
      py::arg("grating_order") = -1, py::arg("dip_threshold") = rayleigh_dip_threshold,
      "Line frequencies are given as ratios to the reference line.");

  m.def(
      "figure",
      [](int id, std::optional<int> n_slits, std::optional<int> order,
         std::size_t samples) {
        RunConfig c;
        c.slit_count = n_slits;
        c.product_order = order;
        c.samples = samples;
        return bundle_to_python(run_figure(id, c));
      },
      py::arg("id"), py::arg("n_slits") = py::none(), py::arg("order") = py::none(),
      py::arg("samples") = 1001, "Runs a figure pipeline and returns its bundle as a dict.");

  m.def(
      "figure_csv",
      [](int id, std::size_t samples) {
        RunConfig c;
        c.samples = samples;
        return to_csv(run_figure(id, c));
      },
      py::arg("id"), py::arg("samples") = 1001);

  m.attr("rayleigh_dip_threshold") = rayleigh_dip_threshold;
}

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "fringekit/errors.hpp"
#include "fringekit/report.hpp"

namespace fringekit {

namespace {

std::string join_numbers(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_number(v[i]);
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string axis_name(SweepAxis axis) {
  return axis == SweepAxis::order ? "order" : "slits";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "svg") return OutputFormat::svg;
  throw std::invalid_argument("unknown output format '" + name + "'");
}

std::string format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::svg: return "svg";
  }
  return "csv";
}

std::string format_number(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::map<std::string, std::string> describe(const RunConfig& c) {
  const auto opt_int = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("default");
  };
  std::map<std::string, std::string> d;
  d["model"] = c.model;
  d["n_slits"] = opt_int(c.slit_count);
  d["order_k"] = opt_int(c.product_order);
  d["reflectivity"] = c.reflectivity ? format_number(*c.reflectivity) : "default";
  d["slit_ratio"] = format_number(c.slit_ratio);
  d["scale"] = format_number(c.scale);
  d["window"] = c.window ? format_number(c.window->lo) + "," +
                               format_number(c.window->hi)
                         : "default";
  d["tol"] = format_number(c.tolerance);
  d["dip_threshold"] = format_number(c.dip_threshold);
  d["samples"] = std::to_string(c.samples);
  d["axis"] = axis_name(c.axis);
  d["values"] = join_ints(c.sweep_values);
  d["lines"] = join_numbers(c.lines);
  d["grating_order"] = std::to_string(c.grating_order);
  d["format"] = format_name(c.format);
  return d;
}

std::string to_csv(const FigureBundle& b) {
  std::ostringstream os;
  os << "# fringekit bundle\n";
  os << "# name: " << b.name << "\n";
  os << "# figure: " << b.figure << "\n";
  for (const auto& [k, v] : b.config) os << "# config." << k << ": " << v << "\n";
  for (const auto& [k, v] : b.scalars)
    os << "# scalar." << k << ": " << format_number(v) << "\n";
  for (const auto& [k, v] : b.verdicts) os << "# verdict." << k << ": " << v << "\n";
  for (const auto& s : b.series) {
    os << "# series: " << s.label << " | panel=" << s.panel;
    if (!s.model.empty()) os << " | model=" << s.model;
    if (s.reference) os << " | reference";
    for (const auto& [k, v] : s.parameters) os << " | " << k << "=" << format_number(v);
    os << "\n";
  }
  os << "series_label,x,y\n";
  for (const auto& s : b.series) {
    const std::string label = csv_field(s.label);
    for (std::size_t i = 0; i < s.x.size(); ++i)
      os << label << ',' << format_number(s.x[i]) << ',' << format_number(s.y[i])
         << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const FigureBundle& b) {
  nlohmann::json j;
  j["figure"] = b.figure;
  j["name"] = b.name;
  j["config"] = b.config;
  j["scalars"] = b.scalars;
  j["verdicts"] = b.verdicts;
  j["series"] = nlohmann::json::array();
  for (const auto& s : b.series) {
    j["series"].push_back({{"label", s.label},
                           {"panel", s.panel},
                           {"model", s.model},
                           {"parameters", s.parameters},
                           {"reference", s.reference},
                           {"x", s.x},
                           {"y", s.y}});
  }
  return j;
}

FigureBundle from_json(const nlohmann::json& j) {
  FigureBundle b;
  b.figure = j.at("figure").get<int>();
  b.name = j.at("name").get<std::string>();
  b.config = j.at("config").get<std::map<std::string, std::string>>();
  b.scalars = j.at("scalars").get<std::map<std::string, double>>();
  b.verdicts = j.at("verdicts").get<std::map<std::string, std::string>>();
  for (const auto& js : j.at("series")) {
    Series s;
    s.label = js.at("label").get<std::string>();
    s.panel = js.at("panel").get<std::string>();
    s.model = js.at("model").get<std::string>();
    s.parameters = js.at("parameters").get<std::map<std::string, double>>();
    s.reference = js.at("reference").get<bool>();
    s.x = js.at("x").get<std::vector<double>>();
    s.y = js.at("y").get<std::vector<double>>();
    b.series.push_back(std::move(s));
  }
  return b;
}

std::string to_svg(const FigureBundle& b) {
  constexpr double kWidth = 720, kPanelHeight = 320, kLeft = 70, kRight = 200,
                   kTop = 40, kBottom = 40;
  static const char* const kPalette[] = {"#000000", "#1b9e77", "#d95f02",
                                         "#7570b3", "#e7298a", "#66a61e",
                                         "#e6ab02", "#a6761d", "#1f78b4"};

  std::vector<std::string> panels;
  for (const auto& s : b.series)
    if (std::find(panels.begin(), panels.end(), s.panel) == panels.end())
      panels.push_back(s.panel);

  const double height = std::max<double>(1, panels.size()) * kPanelHeight;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t p = 0; p < panels.size(); ++p) {
    const double y0 = p * kPanelHeight;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kPanelHeight - kTop - kBottom;
    double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
    for (const auto& s : b.series) {
      if (s.panel != panels[p]) continue;
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
        xmin = std::min(xmin, s.x[i]);
        xmax = std::max(xmax, s.x[i]);
        ymin = std::min(ymin, s.y[i]);
        ymax = std::max(ymax, s.y[i]);
      }
    }
    if (!std::isfinite(xmin)) {  // empty panel
      xmin = 0;
      xmax = 1;
      ymin = 0;
      ymax = 1;
    }
    if (!(xmax > xmin)) xmax = xmin + 1;
    if (!(ymax > ymin)) ymax = ymin + 1;

    const auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
    const auto py = [&](double y) {
      return y0 + kTop + plot_h - (y - ymin) / (ymax - ymin) * plot_h;
    };

    os << "<g>\n<text x=\"" << kLeft << "\" y=\"" << y0 + 20 << "\" font-size=\"13\">"
       << xml_escape(b.name + " / " + panels[p]) << "</text>\n";
    os << "<rect x=\"" << kLeft << "\" y=\"" << y0 + kTop << "\" width=\"" << plot_w
       << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"#888\"/>\n";
    os << "<text x=\"" << kLeft << "\" y=\"" << y0 + kTop + plot_h + 15 << "\">"
       << format_number(xmin) << "</text>\n";
    os << "<text x=\"" << kLeft + plot_w << "\" y=\"" << y0 + kTop + plot_h + 15
       << "\" text-anchor=\"end\">" << format_number(xmax) << "</text>\n";
    os << "<text x=\"" << kLeft - 5 << "\" y=\"" << y0 + kTop + plot_h
       << "\" text-anchor=\"end\">" << format_number(ymin) << "</text>\n";
    os << "<text x=\"" << kLeft - 5 << "\" y=\"" << y0 + kTop + 10
       << "\" text-anchor=\"end\">" << format_number(ymax) << "</text>\n";

    std::size_t color = 0;
    for (const auto& s : b.series) {
      if (s.panel != panels[p]) continue;
      const char* stroke = kPalette[color % std::size(kPalette)];
      os << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.2\"";
      if (s.reference) os << " stroke-dasharray=\"5,3\"";
      os << " points=\"";
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
        os << format_number(px(s.x[i])) << ',' << format_number(py(s.y[i])) << ' ';
      }
      os << "\"/>\n";
      const double ly = y0 + kTop + 12 + 14 * color;
      os << "<line x1=\"" << kLeft + plot_w + 10 << "\" y1=\"" << ly - 4 << "\" x2=\""
         << kLeft + plot_w + 30 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << stroke
         << "\"/>\n";
      os << "<text x=\"" << kLeft + plot_w + 35 << "\" y=\"" << ly << "\">"
         << xml_escape(s.label) << "</text>\n";
      ++color;
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render(const FigureBundle& bundle, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: return to_csv(bundle);
    case OutputFormat::json: return to_json(bundle).dump(1) + "\n";
    case OutputFormat::svg: return to_svg(bundle);
  }
  return {};
}

void emit(const FigureBundle& bundle, OutputFormat format,
          const std::string& path) {
  const std::string text = render(bundle, format);
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!std::cout) throw IoError("<stdout>", "write failed");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError(path, "cannot open for writing");
  file << text;
  file.close();
  if (!file) throw IoError(path, "write failed");
}

}  // namespace fringekit

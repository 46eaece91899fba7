#include "fringekit/fringe_models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fringekit {

namespace {

// Below this |sin alpha| the grating factor is replaced by its limit N^2.
constexpr double kGratingLimitThreshold = 1e-9;

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

bool PhaseInterval::valid() const noexcept {
  return std::isfinite(lo) && std::isfinite(hi) && hi > lo;
}

MziSpec::MziSpec(double input_intensity, MziPort port)
    : input_intensity_(input_intensity), port_(port) {
  require(input_intensity > 0.0 && std::isfinite(input_intensity),
          "MziSpec: input intensity must be positive");
}

SplitPortSpec::SplitPortSpec(double input_intensity, int split_depth)
    : input_intensity_(input_intensity), split_depth_(split_depth) {
  require(input_intensity > 0.0 && std::isfinite(input_intensity),
          "SplitPortSpec: input intensity must be positive");
  require(split_depth >= 0, "SplitPortSpec: split depth must be >= 0");
}

double SplitPortSpec::port_count() const noexcept {
  return std::ldexp(1.0, split_depth_);
}

NSlitSpec::NSlitSpec(int slit_count, double slit_separation,
                     double slit_width, double wavelength)
    : slit_count_(slit_count),
      slit_separation_(slit_separation),
      slit_width_(slit_width),
      wavelength_(wavelength) {
  require(slit_count >= 2, "NSlitSpec: slit count must be >= 2");
  require(slit_separation > 0.0 && std::isfinite(slit_separation),
          "NSlitSpec: slit separation must be positive");
  require(slit_width >= 0.0 && slit_width < slit_separation,
          "NSlitSpec: slit width must satisfy 0 <= b < a");
  require(wavelength > 0.0 && std::isfinite(wavelength),
          "NSlitSpec: wavelength must be positive");
}

NSlitSpec NSlitSpec::with_slit_ratio(int slit_count, double ratio,
                                     double slit_width, double wavelength) {
  require(ratio > 1.0, "NSlitSpec: separation/width ratio must exceed 1");
  return NSlitSpec(slit_count, ratio * slit_width, slit_width, wavelength);
}

NSlitSpec NSlitSpec::pure_grating(int slit_count, double slit_separation,
                                  double wavelength) {
  return NSlitSpec(slit_count, slit_separation, 0.0, wavelength);
}

double NSlitSpec::wavenumber() const noexcept {
  return 2.0 * pi / wavelength_;
}

NSlitSpec NSlitSpec::with_slit_count(int slit_count) const {
  return NSlitSpec(slit_count, slit_separation_, slit_width_, wavelength_);
}

FpiSpec::FpiSpec(double reflection_coefficient,
                 std::optional<double> mirror_spacing)
    : r_(reflection_coefficient), spacing_(mirror_spacing) {
  require(reflection_coefficient > 0.0 && reflection_coefficient < 1.0,
          "FpiSpec: reflection coefficient must lie in (0, 1)");
  require(!mirror_spacing || *mirror_spacing > 0.0,
          "FpiSpec: mirror spacing must be positive");
}

double FpiSpec::finesse_coefficient() const noexcept {
  const double c = 2.0 * r_ / (1.0 - r_ * r_);
  return c * c;
}

double FpiSpec::round_trip_phase(double wavenumber) const {
  require(spacing_.has_value(), "FpiSpec: no mirror spacing set");
  return 2.0 * wavenumber * *spacing_;
}

SuperresolutionSpec::SuperresolutionSpec(int fold_count)
    : fold_count_(fold_count) {
  require(fold_count >= 1, "SuperresolutionSpec: fold count must be >= 1");
}

ProfileSpec::ProfileSpec(ProfileKind kind, double scale)
    : kind_(kind), scale_(scale) {
  require(scale > 0.0 && std::isfinite(scale),
          "ProfileSpec: scale must be positive");
}

double sinc(double x) {
  if (x == 0.0) return 1.0;
  return std::sin(x) / x;
}

double grating_factor(double alpha, int slit_count) {
  const double n = static_cast<double>(slit_count);
  // Period is pi in alpha; reducing first keeps sin(alpha) accurate near
  // the higher principal maxima.
  const double reduced = alpha - std::round(alpha / pi) * pi;
  const double s = std::sin(reduced);
  if (std::abs(s) < kGratingLimitThreshold) return n * n;
  const double ratio = std::sin(n * reduced) / s;
  return ratio * ratio;
}

double mzi_intensity(double phase, const MziSpec& spec) {
  const double half = 0.5 * spec.input_intensity();
  const double c = std::cos(phase);
  return spec.port() == MziPort::A ? half * (1.0 + c) : half * (1.0 - c);
}

double split_port_intensity(double phase, const SplitPortSpec& spec) {
  return std::ldexp(0.5 * spec.input_intensity() * (1.0 + std::cos(phase)),
                    -spec.split_depth());
}

double nslit_intensity(double alpha, double beta, const NSlitSpec& spec) {
  const double envelope = sinc(beta);
  return envelope * envelope * grating_factor(alpha, spec.slit_count());
}

double nslit_intensity_at_angle(double theta, const NSlitSpec& spec) {
  if (!(std::abs(theta) <= 0.5 * pi))
    throw std::invalid_argument("nslit_intensity_at_angle: |theta| > pi/2");
  const double half_k_sin = 0.5 * spec.wavenumber() * std::sin(theta);
  return nslit_intensity(half_k_sin * spec.slit_separation(),
                         half_k_sin * spec.slit_width(), spec);
}

double fpi_transmission(double round_trip_phase, const FpiSpec& spec) {
  const double s = std::sin(round_trip_phase);
  return 1.0 / (1.0 + spec.finesse_coefficient() * s * s);
}

double superresolution_fringe(double phase, const SuperresolutionSpec& spec) {
  return 0.5 * (1.0 + std::cos(spec.fold_count() * phase));
}

double profile_value(double offset, const ProfileSpec& spec) {
  const double u = offset / spec.scale();
  if (spec.kind() == ProfileKind::gaussian) return std::exp(-0.5 * u * u);
  return std::max(0.0, 1.0 - std::abs(u));
}

double evaluate(const FringeModel& model, double phase) {
  return std::visit(
      Overloaded{
          [phase](const MziSpec& s) { return mzi_intensity(phase, s); },
          [phase](const SplitPortSpec& s) {
            return split_port_intensity(phase, s);
          },
          [phase](const NSlitSpec& s) {
            return nslit_intensity(phase, phase * s.width_to_separation(), s);
          },
          [phase](const FpiSpec& s) { return fpi_transmission(phase, s); },
          [phase](const SuperresolutionSpec& s) {
            return superresolution_fringe(phase, s);
          },
          [phase](const ProfileSpec& s) { return profile_value(phase, s); },
      },
      model);
}

Fringe make_fringe(FringeModel model) {
  return [model = std::move(model)](double phase) {
    return evaluate(model, phase);
  };
}

PhaseInterval default_window(const FringeModel& model) {
  return std::visit(
      Overloaded{
          [](const MziSpec& s) {
            return s.port() == MziPort::A ? PhaseInterval{-pi, pi}
                                          : PhaseInterval{0.0, 2.0 * pi};
          },
          [](const SplitPortSpec&) { return PhaseInterval{-pi, pi}; },
          [](const NSlitSpec&) { return PhaseInterval{-0.5 * pi, 0.5 * pi}; },
          [](const FpiSpec&) { return PhaseInterval{-0.5 * pi, 0.5 * pi}; },
          [](const SuperresolutionSpec& s) {
            const double half_period = pi / s.fold_count();
            return PhaseInterval{-half_period, half_period};
          },
          [](const ProfileSpec& s) {
            const double reach =
                (s.kind() == ProfileKind::gaussian ? 8.0 : 1.5) * s.scale();
            return PhaseInterval{-reach, reach};
          },
      },
      model);
}

std::string model_name(const FringeModel& model) {
  return std::visit(
      Overloaded{
          [](const MziSpec&) { return std::string("mzi"); },
          [](const SplitPortSpec&) { return std::string("split_port"); },
          [](const NSlitSpec&) { return std::string("nslit"); },
          [](const FpiSpec&) { return std::string("fpi"); },
          [](const SuperresolutionSpec&) {
            return std::string("superresolution");
          },
          [](const ProfileSpec& s) {
            return std::string(s.kind() == ProfileKind::gaussian ? "gaussian"
                                                                 : "linear");
          },
      },
      model);
}

std::vector<std::pair<std::string, double>> model_parameters(
    const FringeModel& model) {
  using Params = std::vector<std::pair<std::string, double>>;
  return std::visit(
      Overloaded{
          [](const MziSpec& s) {
            return Params{{"I0", s.input_intensity()},
                          {"port", s.port() == MziPort::A ? 0.0 : 1.0}};
          },
          [](const SplitPortSpec& s) {
            return Params{{"I0", s.input_intensity()},
                          {"split_depth", double(s.split_depth())}};
          },
          [](const NSlitSpec& s) {
            return Params{{"N", double(s.slit_count())},
                          {"a", s.slit_separation()},
                          {"b", s.slit_width()},
                          {"lambda", s.wavelength()}};
          },
          [](const FpiSpec& s) {
            Params p{{"r", s.reflection_coefficient()}};
            if (s.mirror_spacing()) p.emplace_back("d", *s.mirror_spacing());
            return p;
          },
          [](const SuperresolutionSpec& s) {
            return Params{{"N", double(s.fold_count())}};
          },
          [](const ProfileSpec& s) { return Params{{"scale", s.scale()}}; },
      },
      model);
}

}  // namespace fringekit

#pragma once

// Closed-form intensity evaluators for the interferometer and profile
// families: Mach-Zehnder ports, split projection ports, N-slit grating,
// Fabry-Perot (Airy) transmission, the N-fold superresolution fringe and the
// Gaussian/linear reference profiles.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fringekit/types.hpp"

namespace fringekit {

enum class MziPort { A, B };

class MziSpec {
 public:
  explicit MziSpec(double input_intensity = 1.0, MziPort port = MziPort::A);

  double input_intensity() const noexcept { return input_intensity_; }
  MziPort port() const noexcept { return port_; }

 private:
  double input_intensity_;
  MziPort port_;
};

/// One of the 2^K equal-intensity ports behind K cascaded 50/50 splitters.
class SplitPortSpec {
 public:
  SplitPortSpec(double input_intensity, int split_depth);

  double input_intensity() const noexcept { return input_intensity_; }
  int split_depth() const noexcept { return split_depth_; }
  double port_count() const noexcept;

 private:
  double input_intensity_;
  int split_depth_;
};

class NSlitSpec {
 public:
  /// slit_width may be zero (pure grating factor); must stay below the
  /// separation.
  NSlitSpec(int slit_count, double slit_separation, double slit_width,
            double wavelength);

  /// Separation a = ratio * b, unit wavelength. The default ratio 3 is the
  /// a = 3b geometry used for the N-slit fringe plots.
  static NSlitSpec with_slit_ratio(int slit_count, double ratio = 3.0,
                                   double slit_width = 1.0,
                                   double wavelength = 1.0);
  /// b = 0: only the grating factor (sin Na / sin a)^2 remains.
  static NSlitSpec pure_grating(int slit_count, double slit_separation = 1.0,
                                double wavelength = 1.0);

  int slit_count() const noexcept { return slit_count_; }
  double slit_separation() const noexcept { return slit_separation_; }
  double slit_width() const noexcept { return slit_width_; }
  double wavelength() const noexcept { return wavelength_; }
  double wavenumber() const noexcept;
  /// b/a; converts the grating phase alpha into the slit-width phase beta.
  double width_to_separation() const noexcept {
    return slit_width_ / slit_separation_;
  }

  NSlitSpec with_slit_count(int slit_count) const;

 private:
  int slit_count_;
  double slit_separation_;
  double slit_width_;
  double wavelength_;
};

class FpiSpec {
 public:
  explicit FpiSpec(double reflection_coefficient,
                   std::optional<double> mirror_spacing = std::nullopt);

  double reflection_coefficient() const noexcept { return r_; }
  std::optional<double> mirror_spacing() const noexcept { return spacing_; }
  /// F = (2r / (1 - r^2))^2
  double finesse_coefficient() const noexcept;
  /// Round-trip phase delta = 2 k d. Throws if no spacing was given.
  double round_trip_phase(double wavenumber) const;

 private:
  double r_;
  std::optional<double> spacing_;
};

class SuperresolutionSpec {
 public:
  explicit SuperresolutionSpec(int fold_count);
  int fold_count() const noexcept { return fold_count_; }

 private:
  int fold_count_;
};

enum class ProfileKind { gaussian, linear };

/// Unit-peak reference profile. scale is sigma (Gaussian) or the half-width
/// w of the triangle (linear).
class ProfileSpec {
 public:
  ProfileSpec(ProfileKind kind, double scale);

  ProfileKind kind() const noexcept { return kind_; }
  double scale() const noexcept { return scale_; }

 private:
  ProfileKind kind_;
  double scale_;
};

/// sin(x)/x with the limit 1 at x = 0.
double sinc(double x);

/// (sin N alpha / sin alpha)^2, continuous through alpha = p pi where it
/// takes the value N^2.
double grating_factor(double alpha, int slit_count);

double mzi_intensity(double phase, const MziSpec& spec);
double split_port_intensity(double phase, const SplitPortSpec& spec);
double nslit_intensity(double alpha, double beta, const NSlitSpec& spec);
/// |theta| <= pi/2; alpha and beta follow from k a sin(theta)/2 and
/// k b sin(theta)/2.
double nslit_intensity_at_angle(double theta, const NSlitSpec& spec);
double fpi_transmission(double round_trip_phase, const FpiSpec& spec);
double superresolution_fringe(double phase, const SuperresolutionSpec& spec);
double profile_value(double offset, const ProfileSpec& spec);

using FringeModel = std::variant<MziSpec, SplitPortSpec, NSlitSpec, FpiSpec,
                                 SuperresolutionSpec, ProfileSpec>;

/// Evaluates a model in its natural phase coordinate: phi for the MZI,
/// split-port and superresolution fringes, alpha for the N-slit model
/// (beta = alpha * b / a), delta for the FPI and the raw offset for profiles.
double evaluate(const FringeModel& model, double phase);
Fringe make_fringe(FringeModel model);

/// One full period (or the profile support) centred on the principal
/// maximum.
PhaseInterval default_window(const FringeModel& model);

std::string model_name(const FringeModel& model);
std::vector<std::pair<std::string, double>> model_parameters(
    const FringeModel& model);

}  // namespace fringekit

#pragma once

#include <cstdint>
#include <string>

#include "mtbench/curve.hpp"

namespace mtbench {

/// Freestanding-film gauge section. Lengths in meters.
struct SpecimenGeometry {
  double gauge_length = 600e-6;
  double width = 100e-6;
  double thickness = 300e-9;

  double cross_section_area() const { return width * thickness; }

  /// Throws InvalidInputError unless all dimensions are finite and positive.
  void validate() const;
};

enum class Hardening { Isotropic, Kinematic };

/// Bilinear elastoplastic film law.
///
/// `tangent_modulus` is the post-yield slope of the stress-strain curve
/// (not the plastic modulus; the plastic modulus E*H/(E-H) is derived
/// internally so that the observed post-yield slope equals H).
///
/// `unload_modulus` optionally exceeds `youngs_modulus`: unloading and
/// elastic reloading then follow a straight line of that slope anchored at
/// the departure point from the monotonic curve, which reproduces a measured
/// unloading modulus above the loading one without introducing spurious
/// negative dissipation. Zero means "same as youngs_modulus".
struct BilinearMaterial {
  std::string name;
  double youngs_modulus = 0.0;        // Pa
  double yield_strength = 0.0;        // Pa
  double tangent_modulus = 0.0;       // Pa, 0 <= H < E
  Hardening hardening = Hardening::Kinematic;
  double uts = 0.0;                   // Pa
  double fatigue_strength_coeff = 0.0;  // Pa, Basquin sigma_f'
  double fatigue_exponent = 0.0;      // dimensionless, negative
  double unload_modulus = 0.0;        // Pa; 0 => youngs_modulus

  double effective_unload_modulus() const {
    return unload_modulus > 0.0 ? unload_modulus : youngs_modulus;
  }

  /// Plastic modulus used by the return mapping: E*H/(E-H).
  double plastic_modulus() const;

  void validate() const;
};

/// Evolving constitutive state. Value type; copy freely.
struct MaterialState {
  double plastic_strain = 0.0;              // eps_p
  double backstress = 0.0;                  // Pa, kinematic hardening
  double accumulated_plastic_strain = 0.0;  // p, non-decreasing
  double damage = 0.0;                      // D in [0,1], non-decreasing

  // Bookkeeping for the direction-dependent unload line. Inactive (and kept
  // at defaults) whenever unload_modulus == youngs_modulus.
  double strain_prev = 0.0;
  double stress_prev = 0.0;
  bool on_unload_line = false;
  double line_anchor = 0.0;  // strain intercept of the unload line

  void validate() const;
};

/// Series-spring load train: sensor beam (k1) and the combined actuator-side
/// alignment springs.
struct LoadTrain {
  double k_sensor = 0.0;  // N/m
  double k_align = 0.0;   // N/m

  void validate() const;
};

/// Sensor quantization/noise description. Identical seed and inputs yield
/// identical readings.
struct SensorSpec {
  double disp_resolution = 1e-11;  // m (0.01 nm)
  double load_resolution = 5e-5;   // N (0.05 mN)
  double disp_noise_std = 0.0;     // m
  double load_noise_std = 0.0;     // N
  std::uint64_t rng_seed = 0;

  void validate() const;
};

struct StressResult {
  double stress = 0.0;    // Pa
  double tangent = 0.0;   // dsigma/deps at the returned point, Pa
  MaterialState state;
};

/// One step of the 1-D return-mapping update: total strain in, stress and the
/// updated state out. Pure function; rate independent.
StressResult stress_update(const BilinearMaterial& material,
                           const MaterialState& state, double strain_total);

/// Exact noise-free bilinear curve sampled uniformly in strain on [0,
/// max_strain]. If the yield knee falls strictly inside the range it is
/// inserted as an extra point, so the polyline equals the bilinear function.
StressStrainCurve monotonic_curve(const BilinearMaterial& material,
                                  const SpecimenGeometry& geometry,
                                  double max_strain, int n_points);

}  // namespace mtbench

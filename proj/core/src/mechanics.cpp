#include "mtbench/mechanics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mtbench/error.hpp"

namespace mtbench {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw InvalidInputError(msg);
}

}  // namespace

double fixed_guided_beam_stiffness(double youngs_modulus, double width,
                                   double thickness, double length) {
  require(std::isfinite(youngs_modulus) && youngs_modulus > 0.0, "E must be > 0");
  require(std::isfinite(width) && width > 0.0, "width must be > 0");
  require(std::isfinite(thickness) && thickness > 0.0, "thickness must be > 0");
  require(std::isfinite(length) && length > 0.0, "length must be > 0");
  const double inertia = width * thickness * thickness * thickness / 12.0;
  return 12.0 * youngs_modulus * inertia / (length * length * length);
}

double series_stiffness(std::span<const double> ks) {
  require(!ks.empty(), "series_stiffness needs a non-empty list");
  double compliance = 0.0;
  for (double k : ks) {
    require(std::isfinite(k) && k > 0.0, "stiffness entries must be > 0");
    compliance += 1.0 / k;
  }
  return 1.0 / compliance;
}

double misalignment_attenuation(double k_axial_align, double k_lateral_align,
                                double k_specimen_lateral) {
  require(std::isfinite(k_axial_align) && k_axial_align > 0.0,
          "k_axial_align must be > 0");
  require(std::isfinite(k_lateral_align) && k_lateral_align > 0.0,
          "k_lateral_align must be > 0");
  require(std::isfinite(k_specimen_lateral) && k_specimen_lateral > 0.0,
          "k_specimen_lateral must be > 0");
  return k_lateral_align / (k_lateral_align + k_specimen_lateral);
}

std::pair<EquilibriumPoint, MaterialState> solve_equilibrium(
    const LoadTrain& train, const SpecimenGeometry& geometry,
    const BilinearMaterial& material, const MaterialState& state,
    double u_act) {
  train.validate();
  geometry.validate();
  material.validate();
  state.validate();
  require(std::isfinite(u_act), "u_act must be finite");
  if (u_act < 0.0) throw InvalidInputError("u_act must be >= 0 (tension-only bench)");

  const double area = geometry.cross_section_area();
  const double L0 = geometry.gauge_length;
  const double spring_compliance = 1.0 / train.k_align + 1.0 / train.k_sensor;

  // Residual in displacement as a function of specimen strain. Monotone
  // increasing: d/deps = A*tangent*compliance + L0 > 0 for tangent >= 0.
  auto residual = [&](double eps) {
    StressResult r = stress_update(material, state, eps);
    return std::make_pair(r.stress * area * spring_compliance + eps * L0 - u_act, r);
  };

  // Bracket the root. eps = u_act/L0 gives residual >= 0 whenever the film
  // is in tension there; expand downward if prior plastic strain leaves the
  // film slack at this command.
  double lo = std::min(0.0, state.plastic_strain - material.uts / material.youngs_modulus);
  double hi = u_act / L0 + 1e-18;
  {
    int guard = 0;
    while (residual(hi).first < 0.0 && guard++ < 64) hi = hi * 2.0 + 1e-6;
    while (residual(lo).first > 0.0 && guard++ < 128) lo = lo * 2.0 - 1e-3;
  }

  // Safeguarded Newton: the residual is piecewise linear in eps, so Newton
  // lands on the root to machine precision once on the correct branch.
  double eps = std::clamp(u_act / L0, lo, hi);
  std::pair<double, StressResult> cur = residual(eps);
  const double force_scale = [&] {
    const double k_ser = 1.0 / (spring_compliance + L0 / (material.youngs_modulus * area));
    return k_ser;
  }();

  double last_residual_force = cur.first * force_scale;
  bool converged = false;
  for (int it = 0; it < 200; ++it) {
    const double r = cur.first;
    const double f_now = cur.second.stress * area;
    last_residual_force = r * force_scale;
    if (std::abs(last_residual_force) < 1e-12 * std::max(1.0, std::abs(f_now))) {
      converged = true;
      break;
    }
    if (r > 0.0) hi = eps; else lo = eps;
    const double slope = cur.second.tangent * area * spring_compliance + L0;
    double next = eps - r / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == eps) break;  // bracket exhausted at floating-point resolution
    eps = next;
    cur = residual(eps);
  }
  if (!converged) {
    throw SolverError("equilibrium solve did not converge (residual " +
                          std::to_string(last_residual_force) + " N)",
                      last_residual_force);
  }

  EquilibriumPoint pt;
  pt.u_act = u_act;
  pt.force = cur.second.stress * area;
  pt.delta_x = pt.force / train.k_sensor;
  pt.delta_f = eps * L0;
  pt.delta_y = pt.delta_x + pt.delta_f;
  return {pt, cur.second.state};
}

double calibrate_load_train(double target_stress_per_disp,
                            const SpecimenGeometry& geometry,
                            double youngs_modulus, double k_sensor) {
  geometry.validate();
  require(std::isfinite(target_stress_per_disp) && target_stress_per_disp > 0.0,
          "calibration target must be > 0");
  require(std::isfinite(youngs_modulus) && youngs_modulus > 0.0, "E must be > 0");
  require(std::isfinite(k_sensor) && k_sensor > 0.0, "k_sensor must be > 0");

  const double area = geometry.cross_section_area();
  const double k_target = area * target_stress_per_disp;
  const double k_spec = youngs_modulus * area / geometry.gauge_length;

  const double inv_align = 1.0 / k_target - 1.0 / k_sensor - 1.0 / k_spec;
  if (inv_align <= 0.0) {
    const double k_limit = 1.0 / (1.0 / k_sensor + 1.0 / k_spec);
    const char* limiter = k_spec < k_sensor ? "specimen stiffness E*A/L0"
                                            : "sensor-beam stiffness k1";
    throw InfeasibleTargetError(
        "calibration target needs series stiffness " +
        std::to_string(k_target) + " N/m, but k1 and the specimen already cap it at " +
        std::to_string(k_limit) + " N/m (limited by " + limiter + ")");
  }
  return 1.0 / inv_align;
}

}  // namespace mtbench

#pragma once

#include <span>
#include <utility>

#include "mtbench/model.hpp"

namespace mtbench {

/// Quasi-static solution of the series load train at one actuator command.
/// All entries are true (noise-free) values in SI.
struct EquilibriumPoint {
  double u_act = 0.0;    // actuator command, m
  double delta_x = 0.0;  // marker A / sensor-beam deflection, m
  double delta_y = 0.0;  // marker B displacement, m
  double force = 0.0;    // specimen force, N
  double delta_f = 0.0;  // specimen elongation = delta_y - delta_x, m
};

/// Stiffness of a fixed-guided rectangular beam deflected along its thickness:
/// 12*E*I/L^3 with I = width*thickness^3/12.
double fixed_guided_beam_stiffness(double youngs_modulus, double width,
                                   double thickness, double length);

/// Combined stiffness of springs in series: 1/k = sum(1/k_i).
double series_stiffness(std::span<const double> ks);

/// Fraction of an imposed lateral grip offset transmitted to the gauge
/// section under the series lateral-spring model:
/// k_lateral_align / (k_lateral_align + k_specimen_lateral).
/// The axial alignment stiffness does not enter the ratio but is validated,
/// since callers hold all three for one physical spring set.
double misalignment_attenuation(double k_axial_align, double k_lateral_align,
                                double k_specimen_lateral);

/// Equilibrium of actuator spring + specimen + sensor beam at command u_act:
/// u_act = F/k_align + delta_f(F) + F/k_sensor, with the film stress from the
/// elastoplastic law at strain delta_f/L0. Tension-only: u_act >= 0.
/// The state is advanced exactly once per converged solve.
std::pair<EquilibriumPoint, MaterialState> solve_equilibrium(
    const LoadTrain& train, const SpecimenGeometry& geometry,
    const BilinearMaterial& material, const MaterialState& state,
    double u_act);

/// Inverts the elastic series stiffness for the actuator-side spring so that
/// sigma = target_stress_per_disp * u_act in the elastic regime:
/// A*c = series(k_sensor, k_align, E*A/L0). Throws InfeasibleTargetError when
/// no positive k_align can meet the target, naming the limiting stiffness.
double calibrate_load_train(double target_stress_per_disp,
                            const SpecimenGeometry& geometry,
                            double youngs_modulus, double k_sensor);

}  // namespace mtbench

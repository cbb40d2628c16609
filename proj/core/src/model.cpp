#include "mtbench/model.hpp"

#include <cmath>

#include "mtbench/error.hpp"

namespace mtbench {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw InvalidInputError(msg);
}

bool finite(double x) { return std::isfinite(x); }

// Classic 1-D return mapping on the master bilinear curve.
StressResult master_update(const BilinearMaterial& mat, MaterialState st,
                           double eps) {
  const double E = mat.youngs_modulus;
  const double Hp = mat.plastic_modulus();

  const double sigma_tr = E * (eps - st.plastic_strain);
  double xi, yield_level;
  if (mat.hardening == Hardening::Kinematic) {
    xi = sigma_tr - st.backstress;
    yield_level = mat.yield_strength;
  } else {
    xi = sigma_tr;
    yield_level = mat.yield_strength + Hp * st.accumulated_plastic_strain;
  }

  StressResult out;
  const double f = std::abs(xi) - yield_level;
  if (f <= 0.0) {
    out.stress = sigma_tr;
    out.tangent = E;
  } else {
    const double sign = xi >= 0.0 ? 1.0 : -1.0;
    const double dgamma = f / (E + Hp);
    out.stress = sigma_tr - E * dgamma * sign;
    st.plastic_strain += dgamma * sign;
    st.accumulated_plastic_strain += dgamma;
    if (mat.hardening == Hardening::Kinematic) {
      st.backstress += Hp * dgamma * sign;
    }
    out.tangent = mat.tangent_modulus;
  }
  out.state = st;
  return out;
}

// Stress level at which reverse plastic flow would start.
double reverse_onset(const BilinearMaterial& mat, const MaterialState& st) {
  const double Hp = mat.plastic_modulus();
  if (mat.hardening == Hardening::Kinematic) {
    return st.backstress - mat.yield_strength;
  }
  return -(mat.yield_strength + Hp * st.accumulated_plastic_strain);
}

}  // namespace

double BilinearMaterial::plastic_modulus() const {
  // Solves E*Hp/(E+Hp) = H for Hp, so the post-yield curve slope is exactly
  // the configured tangent modulus.
  return youngs_modulus * tangent_modulus / (youngs_modulus - tangent_modulus);
}

void SpecimenGeometry::validate() const {
  require(finite(gauge_length) && gauge_length > 0.0, "gauge_length must be > 0");
  require(finite(width) && width > 0.0, "width must be > 0");
  require(finite(thickness) && thickness > 0.0, "thickness must be > 0");
}

void BilinearMaterial::validate() const {
  require(finite(youngs_modulus) && youngs_modulus > 0.0, "youngs_modulus must be > 0");
  require(finite(tangent_modulus) && tangent_modulus >= 0.0 &&
              tangent_modulus < youngs_modulus,
          "tangent_modulus must satisfy 0 <= H < E");
  require(finite(yield_strength) && yield_strength > 0.0, "yield_strength must be > 0");
  require(finite(uts) && uts > yield_strength, "uts must exceed yield_strength");
  require(finite(fatigue_exponent) && fatigue_exponent < 0.0,
          "fatigue_exponent must be negative");
  require(finite(fatigue_strength_coeff) && fatigue_strength_coeff > 0.0,
          "fatigue_strength_coeff must be > 0");
  require(unload_modulus == 0.0 ||
              (finite(unload_modulus) && unload_modulus >= youngs_modulus),
          "unload_modulus must be >= youngs_modulus when set");
}

void MaterialState::validate() const {
  require(finite(plastic_strain), "plastic_strain must be finite");
  require(finite(backstress), "backstress must be finite");
  require(finite(accumulated_plastic_strain) && accumulated_plastic_strain >= 0.0,
          "accumulated_plastic_strain must be >= 0");
  require(finite(damage) && damage >= 0.0 && damage <= 1.0,
          "damage must lie in [0,1]");
}

void LoadTrain::validate() const {
  require(finite(k_sensor) && k_sensor > 0.0, "k_sensor must be > 0");
  require(finite(k_align) && k_align > 0.0, "k_align must be > 0");
}

void SensorSpec::validate() const {
  require(finite(disp_resolution) && disp_resolution > 0.0,
          "disp_resolution must be > 0");
  require(finite(load_resolution) && load_resolution > 0.0,
          "load_resolution must be > 0");
  require(finite(disp_noise_std) && disp_noise_std >= 0.0,
          "disp_noise_std must be >= 0");
  require(finite(load_noise_std) && load_noise_std >= 0.0,
          "load_noise_std must be >= 0");
}

StressResult stress_update(const BilinearMaterial& material,
                           const MaterialState& state, double strain_total) {
  material.validate();
  state.validate();
  require(finite(strain_total), "strain_total must be finite");

  const double E = material.youngs_modulus;
  const double Eu = material.effective_unload_modulus();

  StressResult out;
  if (Eu == E) {
    out = master_update(material, state, strain_total);
  } else {
    const double deps = strain_total - state.strain_prev;
    MaterialState st = state;

    if (!st.on_unload_line && deps < 0.0) {
      // Leave the master curve along a straight line of slope Eu through the
      // current point.
      st.on_unload_line = true;
      st.line_anchor = st.strain_prev - st.stress_prev / Eu;
    }

    if (st.on_unload_line) {
      const double sigma_line = Eu * (strain_total - st.line_anchor);
      if (deps >= 0.0) {
        StressResult master = master_update(material, st, strain_total);
        if (sigma_line >= master.stress) {
          // Rejoined the master curve (elastic reload past the departure
          // point, possibly with fresh plastic flow).
          master.state.on_unload_line = false;
          out = master;
        } else {
          out.stress = sigma_line;
          out.tangent = Eu;
          out.state = st;
        }
      } else if (sigma_line <= reverse_onset(material, st)) {
        // Reverse yield off the unload line: adopt the line intercept as the
        // apparent plastic strain and continue with the master law.
        st.plastic_strain = st.line_anchor;
        out = master_update(material, st, strain_total);
        out.state.on_unload_line = false;
      } else {
        out.stress = sigma_line;
        out.tangent = Eu;
        out.state = st;
      }
    } else {
      out = master_update(material, st, strain_total);
    }
  }

  out.state.strain_prev = strain_total;
  out.state.stress_prev = out.stress;
  return out;
}

StressStrainCurve monotonic_curve(const BilinearMaterial& material,
                                  const SpecimenGeometry& geometry,
                                  double max_strain, int n_points) {
  material.validate();
  geometry.validate();
  require(finite(max_strain) && max_strain > 0.0, "max_strain must be > 0");
  require(n_points >= 2, "n_points must be >= 2");

  const double E = material.youngs_modulus;
  const double H = material.tangent_modulus;
  const double eps_y = material.yield_strength / E;

  auto bilinear = [&](double eps) {
    return eps <= eps_y ? E * eps
                        : material.yield_strength + H * (eps - eps_y);
  };

  StressStrainCurve curve;
  curve.points.reserve(static_cast<size_t>(n_points) + 1);
  bool knee_inserted = false;
  for (int i = 0; i < n_points; ++i) {
    const double eps = max_strain * static_cast<double>(i) /
                       static_cast<double>(n_points - 1);
    if (!knee_inserted && eps > eps_y && eps_y < max_strain) {
      if (curve.points.empty() || curve.points.back().strain < eps_y) {
        curve.points.push_back({eps_y, material.yield_strength, Direction::Loading});
      }
      knee_inserted = true;
    }
    curve.points.push_back({eps, bilinear(eps), Direction::Loading});
  }
  return curve;
}

}  // namespace mtbench

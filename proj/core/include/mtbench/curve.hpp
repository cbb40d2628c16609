#pragma once

#include <cstddef>
#include <vector>

namespace mtbench {

enum class Direction { Loading, Unloading };

struct CurvePoint {
  double strain = 0.0;   // dimensionless
  double stress = 0.0;   // Pa
  Direction direction = Direction::Loading;
};

/// A reduced stress-strain record. Strain and stress are SI; direction flags
/// come from the actuator command channel, so they flip only at extrema.
struct StressStrainCurve {
  std::vector<CurvePoint> points;

  size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

}  // namespace mtbench

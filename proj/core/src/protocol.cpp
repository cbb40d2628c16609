#include "mtbench/protocol.hpp"

#include <cmath>

#include "mtbench/error.hpp"

namespace mtbench {

namespace {

void check(bool ok, const std::string& constraint) {
  if (!ok) throw ProtocolError("protocol constraint violated: " + constraint);
}

}  // namespace

void MonotonicProtocol::validate() const {
  check(std::isfinite(displacement_rate) && displacement_rate > 0.0,
        "displacement_rate > 0");
  check(std::isfinite(target_displacement) && target_displacement > 0.0,
        "target_displacement > 0");
  check(n_cycles >= 1, "n_cycles >= 1");
  check(unload || n_cycles == 1, "n_cycles > 1 requires unload");
  check(std::isfinite(sample_rate) && sample_rate > 0.0, "sample_rate > 0");
  // Shortest ramp is the first peak (target/n_cycles when unloading).
  const double shortest = target_displacement /
                          (unload ? static_cast<double>(n_cycles) : 1.0) /
                          displacement_rate;
  check(shortest * sample_rate >= 10.0, "sample_rate yields >= 10 samples per ramp");
}

void FatigueProtocol::validate() const {
  check(std::isfinite(mean_displacement) && mean_displacement > 0.0, "d > 0");
  check(std::isfinite(amplitude_pp) && amplitude_pp > 0.0, "A > 0");
  check(amplitude_pp / 2.0 <= mean_displacement, "A/2 <= d (tension-tension)");
  check(std::isfinite(frequency) && frequency > 0.0, "frequency > 0");
  check(max_cycles >= 1, "max_cycles >= 1");
  check(samples_per_cycle >= 4 && samples_per_cycle % 2 == 0,
        "samples_per_cycle even and >= 4");
}

std::vector<WaveformSample> monotonic_waveform(const MonotonicProtocol& p) {
  p.validate();

  // Vertex list of the piecewise-linear command.
  std::vector<double> vertices{0.0};
  if (p.unload) {
    for (int k = 1; k <= p.n_cycles; ++k) {
      vertices.push_back(p.target_displacement * static_cast<double>(k) /
                         static_cast<double>(p.n_cycles));
      vertices.push_back(0.0);
    }
  } else {
    vertices.push_back(p.target_displacement);
  }
  // Force the global peak to be exactly the target.
  if (p.unload) vertices[2 * static_cast<size_t>(p.n_cycles) - 1] = p.target_displacement;

  std::vector<WaveformSample> out;
  out.push_back({0.0, 0.0});
  double t0 = 0.0;
  for (size_t seg = 0; seg + 1 < vertices.size(); ++seg) {
    const double a = vertices[seg];
    const double b = vertices[seg + 1];
    const double duration = std::abs(b - a) / p.displacement_rate;
    const auto n = static_cast<long>(std::ceil(duration * p.sample_rate - 1e-9));
    check(n >= 10, "sample_rate yields >= 10 samples per ramp");
    for (long i = 1; i <= n; ++i) {
      const double frac = static_cast<double>(i) / static_cast<double>(n);
      out.push_back({t0 + duration * frac, a + (b - a) * frac});
    }
    // Land exactly on the vertex.
    out.back().u_act = b;
    t0 += duration;
    out.back().t = t0;
  }
  return out;
}

std::vector<WaveformSample> fatigue_waveform(const FatigueProtocol& p,
                                             std::uint64_t cycle_index) {
  p.validate();
  const double period = 1.0 / p.frequency;
  const int n = p.samples_per_cycle;
  const int half = n / 2;

  std::vector<WaveformSample> out;
  out.reserve(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    // (k + i/n)*period is bitwise identical across the shared endpoint of
    // consecutive cycles.
    const double t = (static_cast<double>(cycle_index) +
                      static_cast<double>(i) / static_cast<double>(n)) * period;
    double u;
    if (i <= half) {
      const double frac = static_cast<double>(i) / static_cast<double>(half);
      u = p.trough() + p.amplitude_pp * frac;
    } else {
      const double frac = static_cast<double>(i - half) / static_cast<double>(half);
      u = p.peak() - p.amplitude_pp * frac;
    }
    out.push_back({t, u});
  }
  // Exact endpoints regardless of rounding in frac arithmetic.
  out.front().u_act = p.trough();
  out[static_cast<size_t>(half)].u_act = p.peak();
  out.back().u_act = p.trough();
  return out;
}

ProtocolSweep protocol_sweep(const std::vector<double>& means,
                             const std::vector<double>& amplitudes,
                             const FatigueProtocol& base) {
  if (means.empty() || amplitudes.empty()) {
    throw InvalidInputError("protocol_sweep needs non-empty mean and amplitude lists");
  }
  ProtocolSweep sweep;
  for (double d : means) {
    for (double A : amplitudes) {
      FatigueProtocol p = base;
      p.mean_displacement = d;
      p.amplitude_pp = A;
      if (A / 2.0 > d) {
        sweep.excluded.push_back({d, A, "A/2 > d"});
        continue;
      }
      try {
        p.validate();
      } catch (const ProtocolError& e) {
        sweep.excluded.push_back({d, A, e.what()});
        continue;
      }
      sweep.protocols.push_back(p);
    }
  }
  return sweep;
}

}  // namespace mtbench

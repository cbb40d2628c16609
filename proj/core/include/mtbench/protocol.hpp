#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mtbench {

struct WaveformSample {
  double t = 0.0;      // s
  double u_act = 0.0;  // m
};

/// Monotonic loading (optionally load/unload cycles). With unload and
/// n_cycles > 1 the ramps go to evenly spaced increasing peaks
/// target*k/n_cycles, so a record can hold several complete load/unload
/// loops before the final ramp reaches the failure level.
struct MonotonicProtocol {
  double displacement_rate = 0.1e-6;  // m/s
  double target_displacement = 0.0;   // m
  bool unload = false;
  int n_cycles = 1;
  double sample_rate = 50.0;  // Hz

  void validate() const;
};

/// Constant-amplitude tension-tension triangle wave. `amplitude_pp` is
/// peak-to-peak; the tension constraint is A/2 <= d.
struct FatigueProtocol {
  double mean_displacement = 0.0;  // m
  double amplitude_pp = 0.0;       // m
  double frequency = 5.0;          // Hz
  std::uint64_t max_cycles = 100000;
  int samples_per_cycle = 64;      // even

  double trough() const { return mean_displacement - amplitude_pp / 2.0; }
  double peak() const { return mean_displacement + amplitude_pp / 2.0; }

  void validate() const;
};

/// Full sampled monotonic waveform. First sample is (0, 0); every ramp vertex
/// lies exactly on the sample grid; the global peak equals the target.
std::vector<WaveformSample> monotonic_waveform(const MonotonicProtocol& p);

/// One fatigue cycle (trough -> peak -> trough), samples_per_cycle + 1 points
/// including both endpoints; the last sample of cycle k coincides with the
/// first of cycle k+1.
std::vector<WaveformSample> fatigue_waveform(const FatigueProtocol& p,
                                             std::uint64_t cycle_index);

struct ProtocolExclusion {
  double mean_displacement = 0.0;
  double amplitude_pp = 0.0;
  std::string reason;
};

struct ProtocolSweep {
  std::vector<FatigueProtocol> protocols;
  std::vector<ProtocolExclusion> excluded;
};

/// Cartesian product of means x amplitudes, mean-major, filtered to the
/// tension-tension constraint; infeasible pairs are reported, not dropped.
ProtocolSweep protocol_sweep(const std::vector<double>& means,
                             const std::vector<double>& amplitudes,
                             const FatigueProtocol& base);

}  // namespace mtbench

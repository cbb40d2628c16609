#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "mtbench/mechanics.hpp"
#include "mtbench/model.hpp"
#include "mtbench/protocol.hpp"

namespace mtbench {

enum class SensorChannel { Displacement, Load };

/// Deterministic per-channel noise stream (splitmix64 + Box-Muller), so that
/// records are bit-identical across runs and standard libraries.
class SensorRng {
 public:
  SensorRng(std::uint64_t seed, std::uint64_t channel_salt);
  double gaussian();

 private:
  double uniform();
  std::uint64_t state_;
};

/// Quantized, optionally noisy reading of a true value:
/// quantize(true + N(0, std), resolution) with round-half-even.
double sensor_read(double true_value, const SensorSpec& spec,
                   SensorChannel channel, SensorRng& rng);

/// Everything the bench needs besides the protocol.
struct BenchSetup {
  SpecimenGeometry geometry;
  BilinearMaterial material;
  LoadTrain train;
  SensorSpec sensors;
};

struct RecordSample {
  double t = 0.0;        // s
  double u_act = 0.0;    // m, command (noise-free)
  double dx_meas = 0.0;  // m
  double dy_meas = 0.0;  // m
  double force_meas = 0.0;  // N
};

enum class Termination { Completed, SpecimenFailed };

using ProtocolVariant = std::variant<MonotonicProtocol, FatigueProtocol>;

/// Raw "experiment": quantized sensor time series plus the bench metadata
/// needed to reduce it.
struct TestRecord {
  BenchSetup setup;
  ProtocolVariant protocol;
  std::uint64_t seed = 0;
  std::vector<RecordSample> samples;
  Termination termination = Termination::Completed;
  double failure_time = 0.0;       // valid when SpecimenFailed
  std::size_t failure_index = 0;   // valid when SpecimenFailed
};

/// Runs the monotonic protocol sample by sample. Terminates early with
/// SpecimenFailed once the film stress reaches the UTS. Solver failures are
/// propagated as SolverError with the sample index in the message.
TestRecord run_monotonic(const BenchSetup& setup, const MonotonicProtocol& p);

struct CycleStats {
  double sigma_max = 0.0;   // Pa
  double sigma_min = 0.0;   // Pa
  double sigma_mean = 0.0;  // Pa
  double sigma_amp = 0.0;   // Pa
  double delta_eps_pl = 0.0;
};

enum class FatigueStatus { Failed, Runout };

struct FatigueOutcome {
  FatigueProtocol protocol;
  std::uint64_t cycles_completed = 0;  // N_f when Failed, cycles run otherwise
  FatigueStatus status = FatigueStatus::Runout;
  CycleStats steady;   // stats of the last simulated cycle
  double damage = 0.0;  // Miner sum when the run stopped
  bool overload = false;  // failed by stress reaching UTS, not by damage
};

struct FatigueRunResult {
  FatigueOutcome outcome;
  std::optional<TestRecord> record;  // first + last simulated cycles
};

/// Displacement-controlled tension-tension fatigue. Damage per cycle is
/// 1/N_f(sigma_ar) with the Goodman equivalent fully-reversed amplitude and
/// the Basquin life; once the hysteresis loop stabilizes (per-cycle plastic
/// strain range changes < 1e-9) the remaining life is closed-form unless
/// `use_stabilized_shortcut` is false.
FatigueRunResult run_fatigue(const BenchSetup& setup, const FatigueProtocol& p,
                             bool use_stabilized_shortcut = true,
                             bool keep_record = true);

/// Goodman mean-stress correction: sigma_a / (1 - sigma_m/sigma_u).
double goodman_equivalent(double sigma_amp, double sigma_mean, double sigma_u);

/// Basquin life: N = (sigma_ar/sigma_f)^(1/b) / 2. Non-positive amplitude
/// means infinite life.
double basquin_life(double sigma_ar, double sigma_f, double exponent);

struct FatigueAnchor {
  double sigma_mean = 0.0;  // Pa
  double sigma_amp = 0.0;   // Pa
  std::uint64_t cycles = 0;
  bool failed = true;
};

struct BasquinFit {
  double sigma_f = 0.0;  // Pa
  double exponent = 0.0;  // b < 0
};

/// Least squares of log(sigma_ar) vs log(2N) over failure anchors; runouts
/// are ignored. One anchor requires a fixed exponent. Throws
/// UnderdeterminedError when the data cannot pin both parameters.
BasquinFit calibrate_fatigue_params(std::span<const FatigueAnchor> anchors,
                                    double sigma_u,
                                    std::optional<double> fixed_exponent = {});

}  // namespace mtbench

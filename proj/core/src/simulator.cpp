#include "mtbench/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mtbench/error.hpp"

namespace mtbench {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

SensorRng::SensorRng(std::uint64_t seed, std::uint64_t channel_salt)
    : state_(seed ^ (channel_salt * 0xD6E8FEB86659FD93ull)) {
  // Warm the state so nearby seeds decorrelate.
  (void)splitmix64(state_);
}

double SensorRng::uniform() {
  // 53-bit mantissa in (0, 1]: never zero, so log() below is safe.
  const std::uint64_t bits = splitmix64(state_) >> 11;
  return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
}

double SensorRng::gaussian() {
  // Box-Muller, cosine branch only: one draw per pair keeps the stream
  // layout independent of call parity.
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

double sensor_read(double true_value, const SensorSpec& spec,
                   SensorChannel channel, SensorRng& rng) {
  spec.validate();
  const double std_dev = channel == SensorChannel::Displacement
                             ? spec.disp_noise_std
                             : spec.load_noise_std;
  const double resolution = channel == SensorChannel::Displacement
                                ? spec.disp_resolution
                                : spec.load_resolution;
  double value = true_value;
  if (std_dev > 0.0) value += std_dev * rng.gaussian();
  // nearbyint under the default rounding mode is round-half-even.
  return std::nearbyint(value / resolution) * resolution;
}

namespace {

struct ChannelRngs {
  SensorRng dx;
  SensorRng dy;
  SensorRng force;

  explicit ChannelRngs(std::uint64_t seed)
      : dx(seed, 1), dy(seed, 2), force(seed, 3) {}
};

RecordSample make_sample(const BenchSetup& setup, const EquilibriumPoint& pt,
                         double t, ChannelRngs& rngs) {
  RecordSample s;
  s.t = t;
  s.u_act = pt.u_act;
  s.dx_meas = sensor_read(pt.delta_x, setup.sensors, SensorChannel::Displacement, rngs.dx);
  s.dy_meas = sensor_read(pt.delta_y, setup.sensors, SensorChannel::Displacement, rngs.dy);
  s.force_meas = sensor_read(pt.force, setup.sensors, SensorChannel::Load, rngs.force);
  return s;
}

}  // namespace

TestRecord run_monotonic(const BenchSetup& setup, const MonotonicProtocol& p) {
  setup.geometry.validate();
  setup.material.validate();
  setup.train.validate();
  setup.sensors.validate();
  const std::vector<WaveformSample> wave = monotonic_waveform(p);

  TestRecord record;
  record.setup = setup;
  record.protocol = p;
  record.seed = setup.sensors.rng_seed;
  record.samples.reserve(wave.size());

  ChannelRngs rngs(setup.sensors.rng_seed);
  MaterialState state;
  const double area = setup.geometry.cross_section_area();

  for (std::size_t i = 0; i < wave.size(); ++i) {
    EquilibriumPoint pt;
    try {
      auto [point, new_state] = solve_equilibrium(setup.train, setup.geometry,
                                                  setup.material, state,
                                                  wave[i].u_act);
      pt = point;
      state = new_state;
    } catch (const SolverError& e) {
      throw SolverError("sample " + std::to_string(i) + ": " + e.what(),
                        e.residual());
    }
    record.samples.push_back(make_sample(setup, pt, wave[i].t, rngs));
    if (pt.force / area >= setup.material.uts) {
      record.termination = Termination::SpecimenFailed;
      record.failure_time = wave[i].t;
      record.failure_index = i;
      return record;
    }
  }
  record.termination = Termination::Completed;
  return record;
}

double goodman_equivalent(double sigma_amp, double sigma_mean, double sigma_u) {
  if (!(sigma_u > 0.0)) throw InvalidInputError("sigma_u must be > 0");
  if (sigma_mean >= sigma_u) {
    throw InvalidInputError("mean stress at or above UTS has no Goodman equivalent");
  }
  return sigma_amp / (1.0 - sigma_mean / sigma_u);
}

double basquin_life(double sigma_ar, double sigma_f, double exponent) {
  if (!(sigma_f > 0.0) || !(exponent < 0.0)) {
    throw InvalidInputError("Basquin parameters require sigma_f > 0 and b < 0");
  }
  if (sigma_ar <= 0.0) return std::numeric_limits<double>::infinity();
  return 0.5 * std::pow(sigma_ar / sigma_f, 1.0 / exponent);
}

FatigueRunResult run_fatigue(const BenchSetup& setup, const FatigueProtocol& p,
                             bool use_stabilized_shortcut, bool keep_record) {
  setup.geometry.validate();
  setup.material.validate();
  setup.train.validate();
  setup.sensors.validate();
  p.validate();

  const double area = setup.geometry.cross_section_area();
  const double sigma_u = setup.material.uts;

  FatigueRunResult result;
  result.outcome.protocol = p;

  TestRecord record;
  record.setup = setup;
  record.protocol = p;
  record.seed = setup.sensors.rng_seed;

  ChannelRngs rngs(setup.sensors.rng_seed);
  MaterialState state;

  double damage = 0.0;
  double prev_depl = std::numeric_limits<double>::quiet_NaN();
  CycleStats stats{};
  std::vector<RecordSample> first_cycle;
  std::vector<RecordSample> cycle_buffer;

  // Stress/plastic-strain at the shared trough sample carried from the
  // previous cycle, so per-cycle extrema include both endpoints.
  double carry_sigma = 0.0;
  double carry_eps_p = 0.0;
  bool have_carry = false;

  auto finish = [&](FatigueStatus status, std::uint64_t cycles, bool overload) {
    result.outcome.status = status;
    result.outcome.cycles_completed = cycles;
    result.outcome.steady = stats;
    result.outcome.damage = damage;
    result.outcome.overload = overload;
    if (keep_record) {
      record.samples = std::move(first_cycle);
      if (!cycle_buffer.empty() && !record.samples.empty() &&
          cycle_buffer.front().t > record.samples.back().t) {
        record.samples.insert(record.samples.end(), cycle_buffer.begin(),
                              cycle_buffer.end());
      }
      if (status == FatigueStatus::Failed) {
        record.termination = Termination::SpecimenFailed;
        if (!record.samples.empty()) {
          record.failure_time = record.samples.back().t;
          record.failure_index = record.samples.size() - 1;
        }
      }
      result.record = std::move(record);
    }
    return result;
  };

  for (std::uint64_t cycle = 0; cycle < p.max_cycles; ++cycle) {
    const std::vector<WaveformSample> wave = fatigue_waveform(p, cycle);
    double sigma_max = have_carry ? carry_sigma : -std::numeric_limits<double>::infinity();
    double sigma_min = have_carry ? carry_sigma : std::numeric_limits<double>::infinity();
    double eps_p_max = have_carry ? carry_eps_p : -std::numeric_limits<double>::infinity();
    double eps_p_min = have_carry ? carry_eps_p : std::numeric_limits<double>::infinity();

    cycle_buffer.clear();
    const std::size_t start = cycle == 0 ? 0 : 1;
    bool overload_now = false;
    for (std::size_t i = start; i < wave.size(); ++i) {
      EquilibriumPoint pt;
      try {
        auto [point, new_state] = solve_equilibrium(setup.train, setup.geometry,
                                                    setup.material, state,
                                                    wave[i].u_act);
        pt = point;
        state = new_state;
      } catch (const SolverError& e) {
        throw SolverError("cycle " + std::to_string(cycle) + " sample " +
                              std::to_string(i) + ": " + e.what(),
                          e.residual());
      }
      const double sigma = pt.force / area;
      sigma_max = std::max(sigma_max, sigma);
      sigma_min = std::min(sigma_min, sigma);
      eps_p_max = std::max(eps_p_max, state.plastic_strain);
      eps_p_min = std::min(eps_p_min, state.plastic_strain);
      if (keep_record) {
        cycle_buffer.push_back(make_sample(setup, pt, wave[i].t, rngs));
      }
      if (sigma >= sigma_u) overload_now = true;
    }
    carry_sigma = sigma_min;  // trough ends the cycle
    carry_eps_p = state.plastic_strain;
    have_carry = true;

    stats.sigma_max = sigma_max;
    stats.sigma_min = sigma_min;
    stats.sigma_mean = 0.5 * (sigma_max + sigma_min);
    stats.sigma_amp = 0.5 * (sigma_max - sigma_min);
    stats.delta_eps_pl = eps_p_max - eps_p_min;

    if (cycle == 0 && keep_record) first_cycle = cycle_buffer;

    if (overload_now || stats.sigma_mean >= sigma_u) {
      damage = 1.0;
      return finish(FatigueStatus::Failed, cycle + 1, true);
    }

    const double sigma_ar = goodman_equivalent(stats.sigma_amp,
                                               stats.sigma_mean, sigma_u);
    const double life = basquin_life(sigma_ar, setup.material.fatigue_strength_coeff,
                                     setup.material.fatigue_exponent);
    const double increment = std::isinf(life) ? 0.0 : 1.0 / life;
    damage += increment;
    if (damage >= 1.0) {
      return finish(FatigueStatus::Failed, cycle + 1, false);
    }

    const bool stabilized =
        !std::isnan(prev_depl) && std::abs(stats.delta_eps_pl - prev_depl) < 1e-9;
    prev_depl = stats.delta_eps_pl;

    if (stabilized && use_stabilized_shortcut) {
      if (increment <= 0.0) {
        return finish(FatigueStatus::Runout, p.max_cycles, false);
      }
      const double remaining = std::ceil((1.0 - damage) / increment);
      const std::uint64_t done = cycle + 1;
      if (remaining >= static_cast<double>(p.max_cycles - done)) {
        damage += static_cast<double>(p.max_cycles - done) * increment;
        return finish(FatigueStatus::Runout, p.max_cycles, false);
      }
      const auto extra = static_cast<std::uint64_t>(remaining);
      damage += static_cast<double>(extra) * increment;
      return finish(FatigueStatus::Failed, done + extra, false);
    }
  }
  return finish(FatigueStatus::Runout, p.max_cycles, false);
}

BasquinFit calibrate_fatigue_params(std::span<const FatigueAnchor> anchors,
                                    double sigma_u,
                                    std::optional<double> fixed_exponent) {
  if (!(sigma_u > 0.0)) throw InvalidInputError("sigma_u must be > 0");
  std::vector<double> x;  // log(2N)
  std::vector<double> y;  // log(sigma_ar)
  for (const FatigueAnchor& a : anchors) {
    if (!a.failed) continue;
    if (a.cycles == 0) throw InvalidInputError("failure anchor with zero cycles");
    const double sar = goodman_equivalent(a.sigma_amp, a.sigma_mean, sigma_u);
    if (!(sar > 0.0)) throw InvalidInputError("failure anchor with non-positive amplitude");
    x.push_back(std::log(2.0 * static_cast<double>(a.cycles)));
    y.push_back(std::log(sar));
  }

  if (x.empty()) {
    throw UnderdeterminedError(
        "no failure anchors: runout-only data cannot fix Basquin parameters");
  }

  BasquinFit fit;
  if (fixed_exponent) {
    if (!(*fixed_exponent < 0.0)) throw InvalidInputError("fixed exponent must be < 0");
    fit.exponent = *fixed_exponent;
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += y[i] - fit.exponent * x[i];
    fit.sigma_f = std::exp(acc / static_cast<double>(x.size()));
    return fit;
  }

  if (x.size() < 2) {
    throw UnderdeterminedError(
        "a single failure anchor needs a fixed exponent to pin sigma_f");
  }
  const auto n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) {
    throw UnderdeterminedError("all failure anchors share one life; slope is free");
  }
  fit.exponent = (n * sxy - sx * sy) / denom;
  fit.sigma_f = std::exp((sy - fit.exponent * sx) / n);
  if (!(fit.exponent < 0.0)) {
    throw InvalidInputError("anchors imply a non-negative fatigue exponent");
  }
  return fit;
}

}  // namespace mtbench

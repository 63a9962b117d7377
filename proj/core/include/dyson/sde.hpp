#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "dyson/errors.hpp"
#include "dyson/hermitian.hpp"
#include "dyson/noise.hpp"

namespace dyson {

struct SimConfig {
  int n = 2;
  double beta = 2.0;  // infinity allowed (deterministic tangential flow)
  double t_end = 1.0;
  double dt = 1e-3;
  std::uint64_t seed = 0;
  double delta_gap = 1e-8;
  int record_every = 1;

  int steps() const { return static_cast<int>(std::llround(t_end / dt)); }
  void validate() const;
};

enum class StopReason { none, collision, model_failure };

std::string to_string(StopReason r);

struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<RealVector> records;  // one observation row per time
  std::optional<double> stopped_at;
  StopReason stop_reason = StopReason::none;
  std::uint64_t seed = 0;
  std::uint64_t traj_index = 0;
  bool valid = true;
};

// A step model provides:
//   using State = ...;
//   std::optional<State> step(const State&, double dt, NoiseStream&);
//       (nullopt signals the collision stop)
//   RealVector observe(const State&);
// Models are value types; each trajectory runs on its own copy.
template <typename Model>
TrajectoryRecord integrate(Model model, const SimConfig& cfg,
                           typename Model::State state,
                           std::uint64_t traj_index = 0) {
  cfg.validate();
  TrajectoryRecord rec;
  rec.seed = cfg.seed;
  rec.traj_index = traj_index;
  NoiseStream stream(cfg.seed, traj_index);

  rec.times.push_back(0.0);
  rec.records.push_back(model.observe(state));

  const int steps = cfg.steps();
  for (int s = 1; s <= steps; ++s) {
    std::optional<typename Model::State> next;
    try {
      next = model.step(state, cfg.dt, stream);
    } catch (const EigensolverFailure&) {
      rec.valid = false;
      rec.stop_reason = StopReason::model_failure;
      rec.stopped_at = s * cfg.dt;
      return rec;
    }
    if (!next) {
      rec.stop_reason = StopReason::collision;
      rec.stopped_at = s * cfg.dt;
      return rec;
    }
    state = std::move(*next);
    if (s % cfg.record_every == 0) {
      rec.times.push_back(s * cfg.dt);
      rec.records.push_back(model.observe(state));
    }
  }
  return rec;
}

// Runs n_traj independent trajectories; trajectory i always uses noise
// stream (seed, i), so recorded output is bit-identical for any worker
// count. Per-trajectory failures are recorded, not propagated.
template <typename Model>
std::vector<TrajectoryRecord> run_ensemble(const Model& model,
                                           const SimConfig& cfg,
                                           const typename Model::State& initial,
                                           int n_traj, int workers = 1) {
  cfg.validate();
  if (n_traj < 1) throw ConfigError("run_ensemble: n_traj must be >= 1");
  if (workers < 1) throw ConfigError("run_ensemble: workers must be >= 1");

  std::vector<TrajectoryRecord> out(n_traj);
  std::atomic<int> next_index{0};
  auto worker = [&]() {
    Model local(model);
    for (;;) {
      const int i = next_index.fetch_add(1);
      if (i >= n_traj) break;
      out[i] = integrate(local, cfg, initial, static_cast<std::uint64_t>(i));
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

}  // namespace dyson

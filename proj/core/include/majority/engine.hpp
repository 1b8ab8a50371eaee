#pragma once

#include <optional>
#include <span>
#include <vector>

#include "majority/core.hpp"
#include "majority/strategies.hpp"

namespace majority {

/// Full simulation state at one time slice. `occ` is always consistent with
/// the agents' current restaurants.
struct WorldState {
  std::uint32_t slice = 0;
  std::vector<AgentState> agents;
  Occupancy occ;
};

/// Per-slice metrics captured while a simulation runs.
struct SliceRecord {
  std::uint32_t slice = 0;
  std::uint32_t occupied_count = 0;
  double occupied_fraction = 0.0;
  std::array<std::uint32_t, 3> top_counts{0, 0, 0};
  double avg_max_prob = 0.0;
  bool converged = false;
};

struct Trajectory {
  std::uint32_t n_agents = 0;
  std::vector<SliceRecord> records;
  /// First slice (0-based, counting the initial placement as slice 0) at
  /// which exactly one restaurant was occupied; absent if never reached.
  std::optional<std::uint32_t> convergence_slice;
};

struct RunOptions {
  std::uint32_t record_stride = 1;  // record every s-th slice plus the last
  bool stop_on_convergence = true;
  /// Stop early once the mean maximum probability reaches this value. The
  /// threshold is checked on recorded slices only, so record_stride sets the
  /// detection resolution (the metric is quadratic in n and too costly to
  /// evaluate every slice).
  std::optional<double> stop_at_pmax;
};

/// One reproducible simulation: builds the slice-0 world on construction and
/// advances it one synchronous slice per step() call.
///
/// Every agent owns stream (seed, (replication << 32) | agent_index), so the
/// trajectory is a pure function of (config, strategy, seed, replication)
/// regardless of planning order or host parallelism.
class Simulation {
 public:
  Simulation(const SimConfig& cfg, const StrategyConfig& strategy,
             std::uint32_t replication = 0);

  /// Advances one slice: plans every agent against the frozen occupancy,
  /// applies all moves simultaneously, then runs the learning updates.
  void step();

  /// Identical to step() but computes agent plans in the given order.
  /// The resulting world is byte-identical for any permutation.
  void step_ordered(std::span<const std::uint32_t> plan_order);

  /// Runs from the current slice until convergence, an early-stop condition,
  /// or the horizon, recording metrics along the way.
  Trajectory run(const RunOptions& opts = {});

  const WorldState& world() const { return world_; }
  const SimConfig& config() const { return cfg_; }
  const StrategyConfig& strategy() const { return strat_; }

  /// Metrics of the current slice.
  SliceRecord snapshot() const;

 private:
  void apply_plans();
  double current_avg_max_prob() const;

  SimConfig cfg_;
  StrategyConfig strat_;
  std::vector<Rng> streams_;
  WorldState world_;
  std::vector<SlicePlan> plans_;
};

/// Convenience wrapper: one full trajectory for (cfg, strategy) with the
/// given seed overriding cfg.seed.
Trajectory run(const SimConfig& cfg, const StrategyConfig& strategy,
               std::uint64_t seed, const RunOptions& opts = {});

}  // namespace majority

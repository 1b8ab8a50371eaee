#include "majority/engine.hpp"

#include <cassert>
#include <stdexcept>

#include "majority/metrics.hpp"

namespace majority {

namespace {

Occupancy build_occupancy(const std::vector<AgentState>& agents,
                          std::uint32_t n_restaurants) {
  Occupancy occ;
  occ.counts.assign(n_restaurants, 0);
  for (const AgentState& a : agents) ++occ.counts.at(a.current);
  return occ;
}

}  // namespace

Simulation::Simulation(const SimConfig& cfg, const StrategyConfig& strategy,
                       std::uint32_t replication)
    : cfg_(cfg), strat_(strategy) {
  cfg_.validate();
  strat_.validate(cfg_.n_restaurants);

  streams_.reserve(cfg_.n_agents);
  for (std::uint32_t i = 0; i < cfg_.n_agents; ++i)
    streams_.push_back(make_rng(
        cfg_.seed, (static_cast<std::uint64_t>(replication) << 32) | i));

  // Slice 0: uniform placement, uniform mixed strategies, one visit counted
  // for the starting restaurant.
  const ProbabilityVector uniform = uniform_probabilities(cfg_.n_restaurants);
  world_.slice = 0;
  world_.agents.resize(cfg_.n_agents);
  for (std::uint32_t i = 0; i < cfg_.n_agents; ++i) {
    AgentState& a = world_.agents[i];
    a.probs = uniform;
    a.visits.assign(cfg_.n_restaurants, 0);
    a.current = sample_restaurant(a.probs, streams_[i]);
    a.visits[a.current] = 1;
  }
  world_.occ = build_occupancy(world_.agents, cfg_.n_restaurants);
}

void Simulation::step() { step_ordered({}); }

void Simulation::step_ordered(std::span<const std::uint32_t> plan_order) {
  const std::uint32_t n = cfg_.n_agents;
  const Occupancy frozen = world_.occ;

  plans_.resize(n);
  if (plan_order.empty()) {
    for (std::uint32_t i = 0; i < n; ++i)
      plans_[i] = plan_slice(world_.agents[i], i, frozen, strat_, streams_[i]);
  } else {
    if (plan_order.size() != n)
      throw std::invalid_argument("plan_order must cover every agent exactly once");
    for (std::uint32_t idx : plan_order)
      plans_[idx] =
          plan_slice(world_.agents[idx], idx, frozen, strat_, streams_[idx]);
  }

  apply_plans();
  ++world_.slice;
}

void Simulation::apply_plans() {
  const std::uint32_t n = cfg_.n_agents;

  std::vector<RestaurantId> origin(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    origin[i] = world_.agents[i].current;
    world_.agents[i].current = plans_[i].target;
  }
  world_.occ = build_occupancy(world_.agents, cfg_.n_restaurants);
  assert(world_.occ.total() == n);

  switch (strat_.kind) {
    case StrategyKind::NoLearning:
    case StrategyKind::Polya:
      break;  // no probability update; the urn learns through visits below
    case StrategyKind::ExAnteSymmetric:
      for (std::uint32_t i = 0; i < n; ++i) {
        const SlicePlan& p = plans_[i];
        if (p.winner)
          world_.agents[i].probs = symmetric_update_multi(
              world_.agents[i].probs, *p.winner, p.losers, strat_.f1,
              strat_.f2);
      }
      break;
    case StrategyKind::ExAnteAsymmetric:
      for (std::uint32_t i = 0; i < n; ++i) {
        const SlicePlan& p = plans_[i];
        if (p.winner)
          world_.agents[i].probs =
              asymmetric_update(world_.agents[i].probs, *p.winner, strat_.f);
      }
      break;
    case StrategyKind::ExPostSymmetric:
    case StrategyKind::ExPostAsymmetric:
      // Winner and loser are decided by post-move occupancy: the agent's new
      // restaurant competes against the one she left, both counted as they
      // stand after all moves.
      for (std::uint32_t i = 0; i < n; ++i) {
        SlicePlan& p = plans_[i];
        const RestaurantId to = p.target;
        const RestaurantId from = origin[i];
        if (to == from) continue;
        const std::uint32_t ct = world_.occ.counts[to];
        const std::uint32_t cf = world_.occ.counts[from];
        if (ct == cf) continue;  // equal crowds: no lesson either way
        const RestaurantId winner = ct > cf ? to : from;
        const RestaurantId loser = ct > cf ? from : to;
        p.winner = winner;
        p.losers.assign(1, loser);
        if (strat_.kind == StrategyKind::ExPostSymmetric)
          world_.agents[i].probs = symmetric_update(
              world_.agents[i].probs, winner, loser, strat_.f1, strat_.f2);
        else
          world_.agents[i].probs =
              asymmetric_update(world_.agents[i].probs, winner, strat_.f);
      }
      break;
  }

  // Every kind counts one visit per slice for the restaurant the agent
  // occupies at the end of the slice; only the urn scheme reads it.
  for (std::uint32_t i = 0; i < n; ++i)
    ++world_.agents[i].visits[world_.agents[i].current];
}

double Simulation::current_avg_max_prob() const {
  if (strat_.kind != StrategyKind::Polya)
    return avg_max_probability(world_.agents);
  // Urn agents carry no stored strategy vector; their effective one is
  // derived from the visit counts accumulated so far.
  double acc = 0.0;
  for (const AgentState& a : world_.agents)
    acc += polya_probabilities(a.visits, strat_.m, cfg_.n_restaurants).max();
  return acc / static_cast<double>(world_.agents.size());
}

SliceRecord Simulation::snapshot() const {
  SliceRecord rec;
  rec.slice = world_.slice;
  rec.occupied_count = world_.occ.occupied_count();
  rec.occupied_fraction = static_cast<double>(rec.occupied_count) /
                          static_cast<double>(cfg_.n_restaurants);
  rec.top_counts = world_.occ.top3();
  rec.avg_max_prob = current_avg_max_prob();
  rec.converged = rec.occupied_count == 1;
  return rec;
}

Trajectory Simulation::run(const RunOptions& opts) {
  if (opts.record_stride < 1)
    throw std::invalid_argument("record_stride must be >= 1");

  Trajectory traj;
  traj.n_agents = cfg_.n_agents;

  // One loop iteration per slice. The mean-max-probability metric is the
  // expensive part, so it is only computed for slices that are recorded or
  // when an early-stop threshold needs it.
  while (true) {
    SliceRecord rec;
    rec.slice = world_.slice;
    rec.occupied_count = world_.occ.occupied_count();
    rec.occupied_fraction = static_cast<double>(rec.occupied_count) /
                            static_cast<double>(cfg_.n_restaurants);
    rec.top_counts = world_.occ.top3();
    rec.converged = rec.occupied_count == 1;
    if (rec.converged && !traj.convergence_slice)
      traj.convergence_slice = rec.slice;

    bool done = (opts.stop_on_convergence && rec.converged) ||
                world_.slice >= cfg_.horizon;
    const bool stride_hit = rec.slice % opts.record_stride == 0;
    if (stride_hit || done) {
      rec.avg_max_prob = current_avg_max_prob();
      if (opts.stop_at_pmax && rec.avg_max_prob >= *opts.stop_at_pmax)
        done = true;
    }
    if (stride_hit || done) traj.records.push_back(rec);
    if (done) break;
    step();
  }
  // The final slice is always recorded; drop the duplicate if the stride
  // already captured it.
  if (traj.records.size() >= 2 &&
      traj.records[traj.records.size() - 1].slice ==
          traj.records[traj.records.size() - 2].slice)
    traj.records.pop_back();
  return traj;
}

Trajectory run(const SimConfig& cfg, const StrategyConfig& strategy,
               std::uint64_t seed, const RunOptions& opts) {
  SimConfig local = cfg;
  local.seed = seed;
  Simulation sim(local, strategy);
  return sim.run(opts);
}

}  // namespace majority

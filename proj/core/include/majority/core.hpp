#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "majority/rng.hpp"

namespace majority {

/// Index of a restaurant, in [0, N).
using RestaurantId = std::uint32_t;

/// Immutable run parameters. The game is square by construction: the number
/// of restaurants always equals the number of agents.
struct SimConfig {
  std::uint32_t n_agents = 0;
  std::uint32_t n_restaurants = 0;
  std::uint32_t horizon = 0;  // maximum number of time slices
  std::uint64_t seed = 0;
  std::uint32_t replications = 1;

  static SimConfig make(std::uint32_t n_agents, std::uint32_t horizon,
                        std::uint64_t seed, std::uint32_t replications = 1);

  /// Throws std::invalid_argument on violated constraints.
  void validate() const;
};

/// Dense probability vector over the N restaurants.
///
/// Entries are non-negative and sum to 1 within 1e-12 after construction and
/// after every operation that returns one.
struct ProbabilityVector {
  std::vector<double> weights;

  static ProbabilityVector uniform(std::size_t n);

  std::size_t size() const noexcept { return weights.size(); }
  double operator[](std::size_t i) const { return weights[i]; }

  double sum() const;
  double max() const;
  bool is_normalized(double tol = 1e-12) const;

  /// Clamps negative round-off to zero, then divides by the sum.
  /// Throws std::domain_error if all mass vanished.
  void renormalize();
};

/// Uniform distribution 1/n over n restaurants.
ProbabilityVector uniform_probabilities(std::uint32_t n);

/// How many agents sit in each restaurant during one slice.
struct Occupancy {
  std::vector<std::uint32_t> counts;

  std::uint32_t total() const;
  std::uint32_t occupied_count() const;
  /// Largest three occupancies, non-increasing, zero-padded.
  std::array<std::uint32_t, 3> top3() const;
};

/// One agent: where she sits, her mixed strategy, and her visit history.
struct AgentState {
  RestaurantId current = 0;
  ProbabilityVector probs;
  std::vector<std::uint32_t> visits;
};

/// Inverse-CDF draw: scans the cumulative sum in ascending index order and
/// consumes exactly one double from the stream. Falls back to the last
/// positive-weight index if round-off leaves the cumulative sum short of u.
RestaurantId sample_restaurant(const ProbabilityVector& probs, Rng& rng);

/// A configuration is a pure equilibrium exactly when everyone sits in one
/// restaurant: no agent can join a strictly larger crowd by deviating.
bool is_pure_nash(const Occupancy& occ);

}  // namespace majority

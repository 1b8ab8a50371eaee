#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "majority/core.hpp"

namespace majority {

enum class StrategyKind {
  NoLearning,
  ExAnteSymmetric,
  ExAnteAsymmetric,
  Polya,
  ExPostSymmetric,
  ExPostAsymmetric,
};

/// Whether an urn-scheme agent compares the sampled restaurant's occupancy
/// against her current one before moving (Compare) or relocates to the
/// sample unconditionally (Free).
enum class PolyaMoveRule { Compare, Free };

const char* to_string(StrategyKind kind);
const char* to_string(PolyaMoveRule rule);
std::optional<StrategyKind> parse_strategy_kind(std::string_view name);
std::optional<PolyaMoveRule> parse_polya_move_rule(std::string_view name);

/// Parameters of one strategy family. Fields not used by the selected kind
/// are ignored, but all supplied values are range-checked.
struct StrategyConfig {
  StrategyKind kind = StrategyKind::NoLearning;
  std::uint32_t k = 1;   // candidate samples per slice (no-learning and ex-ante kinds)
  double f1 = 1.0;       // symmetric reinforcement gain
  double f2 = 0.1;       // symmetric punishment factor
  double f = 0.25;       // asymmetric reinforcement factor
  std::uint32_t m = 0;   // urn reinforcement parameter, 0 <= m < N
  PolyaMoveRule polya_move_rule = PolyaMoveRule::Compare;

  void validate(std::uint32_t n_restaurants) const;

  bool operator==(const StrategyConfig&) const = default;

  bool is_symmetric() const {
    return kind == StrategyKind::ExAnteSymmetric ||
           kind == StrategyKind::ExPostSymmetric;
  }
  bool is_asymmetric() const {
    return kind == StrategyKind::ExAnteAsymmetric ||
           kind == StrategyKind::ExPostAsymmetric;
  }
  bool is_ex_post() const {
    return kind == StrategyKind::ExPostSymmetric ||
           kind == StrategyKind::ExPostAsymmetric;
  }
  /// Kinds that sample k candidates and decide before moving.
  bool is_ex_ante_family() const {
    return kind == StrategyKind::NoLearning ||
           kind == StrategyKind::ExAnteSymmetric ||
           kind == StrategyKind::ExAnteAsymmetric;
  }
};

/// One agent's decision for one slice.
///
/// `winner` is absent when every compared restaurant had equal occupancy; in
/// that case the slice performs no probability update for this agent. For
/// ex-post kinds the winner/losers fields are filled by the engine after the
/// move, from post-move occupancy.
struct SlicePlan {
  std::uint32_t agent_id = 0;
  std::vector<RestaurantId> sampled;
  RestaurantId target = 0;
  std::optional<RestaurantId> winner;
  std::vector<RestaurantId> losers;
};

/// Draws k distinct restaurants from the agent's probability vector by
/// sequential residual sampling: each accepted index is removed from the
/// remaining mass before the next draw (one uniform per candidate, bounded
/// even for nearly degenerate vectors). If fewer than k indices carry
/// positive weight the remainder is filled with uniform draws over the
/// not-yet-sampled indices.
std::vector<RestaurantId> sample_candidates(const AgentState& agent,
                                            std::uint32_t k, Rng& rng);

/// Picks the best candidate by occupancy (uniform random tie-break among
/// maximizers, drawn from the owning agent's stream) and moves exactly when
/// the best candidate is at least as occupied as the current restaurant.
RestaurantId decide_ex_ante(RestaurantId current,
                            std::span<const RestaurantId> candidates,
                            const Occupancy& occ, Rng& rng);

/// Winner gains f1*(1-p_w), the loser is scaled by (1-f2), then the whole
/// vector is renormalized. Throws if winner == loser.
ProbabilityVector symmetric_update(const ProbabilityVector& probs,
                                   RestaurantId winner, RestaurantId loser,
                                   double f1, double f2);

/// Same update with every compared non-winner punished before one final
/// renormalization (information sets larger than one candidate).
ProbabilityVector symmetric_update_multi(const ProbabilityVector& probs,
                                         RestaurantId winner,
                                         std::span<const RestaurantId> losers,
                                         double f1, double f2);

/// Winner gains f*(1-p_w), every other entry is scaled by (1-f). The rule is
/// self-normalizing; renormalization still runs to absorb round-off.
ProbabilityVector asymmetric_update(const ProbabilityVector& probs,
                                    RestaurantId winner, double f);

/// Urn probabilities p_j = (1 + phi*visits_j) / (N + phi*sum(visits)) with
/// phi = m / (N - m). m = 0 reproduces the uniform vector exactly.
ProbabilityVector polya_probabilities(std::span<const std::uint32_t> visits,
                                      std::uint32_t m,
                                      std::uint32_t n_restaurants);

/// Computes one agent's move (and, for ex-ante kinds, the comparison outcome)
/// against the frozen occupancy of the current slice.
SlicePlan plan_slice(const AgentState& agent, std::uint32_t agent_id,
                     const Occupancy& occ, const StrategyConfig& cfg,
                     Rng& rng);

}  // namespace majority

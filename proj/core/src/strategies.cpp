#include "majority/strategies.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace majority {

const char* to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::NoLearning: return "no-learning";
    case StrategyKind::ExAnteSymmetric: return "ex-ante-symmetric";
    case StrategyKind::ExAnteAsymmetric: return "ex-ante-asymmetric";
    case StrategyKind::Polya: return "polya";
    case StrategyKind::ExPostSymmetric: return "ex-post-symmetric";
    case StrategyKind::ExPostAsymmetric: return "ex-post-asymmetric";
  }
  return "unknown";
}

const char* to_string(PolyaMoveRule rule) {
  return rule == PolyaMoveRule::Compare ? "compare" : "free";
}

std::optional<StrategyKind> parse_strategy_kind(std::string_view name) {
  if (name == "no-learning") return StrategyKind::NoLearning;
  if (name == "ex-ante-symmetric") return StrategyKind::ExAnteSymmetric;
  if (name == "ex-ante-asymmetric") return StrategyKind::ExAnteAsymmetric;
  if (name == "polya") return StrategyKind::Polya;
  if (name == "ex-post-symmetric") return StrategyKind::ExPostSymmetric;
  if (name == "ex-post-asymmetric") return StrategyKind::ExPostAsymmetric;
  return std::nullopt;
}

std::optional<PolyaMoveRule> parse_polya_move_rule(std::string_view name) {
  if (name == "compare") return PolyaMoveRule::Compare;
  if (name == "free") return PolyaMoveRule::Free;
  return std::nullopt;
}

void StrategyConfig::validate(std::uint32_t n_restaurants) const {
  if (k < 1 || k > n_restaurants)
    throw std::invalid_argument("k must be in [1, N]");
  auto check_unit = [](double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0))
      throw std::invalid_argument(std::string(name) + " must be in [0, 1]");
  };
  check_unit(f1, "f1");
  check_unit(f2, "f2");
  check_unit(f, "f");
  if (m >= n_restaurants) throw std::invalid_argument("m must be < N");
}

std::vector<RestaurantId> sample_candidates(const AgentState& agent,
                                            std::uint32_t k, Rng& rng) {
  const std::size_t n = agent.probs.size();
  if (k < 1 || k > n) throw std::invalid_argument("k must be in [1, N]");

  std::size_t support = 0;
  for (double w : agent.probs.weights)
    if (w > 0.0) ++support;

  std::vector<RestaurantId> out;
  out.reserve(k);
  std::vector<bool> taken(n, false);

  // Draw without replacement from the residual mass: each accepted index is
  // removed and the next draw targets the remaining total. Distributionally
  // this equals redrawing on duplicates, but the draw count stays bounded
  // even when one weight carries almost all the mass.
  const std::size_t weighted_draws = std::min<std::size_t>(k, support);
  double remaining_mass = agent.probs.sum();
  while (out.size() < weighted_draws) {
    const double target = rng.next_double() * remaining_mass;
    double cum = 0.0;
    std::size_t pick = n;
    std::size_t last_positive = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (taken[j] || agent.probs[j] <= 0.0) continue;
      last_positive = j;
      cum += agent.probs[j];
      if (target < cum) {
        pick = j;
        break;
      }
    }
    if (pick == n) pick = last_positive;  // round-off: land on the last one
    taken[pick] = true;
    out.push_back(static_cast<RestaurantId>(pick));
    remaining_mass -= agent.probs[pick];
    if (remaining_mass <= 0.0) break;  // residual exhausted by round-off
  }

  // Degenerate support: fill the remainder uniformly over unsampled indices.
  std::uint32_t remaining = static_cast<std::uint32_t>(n - out.size());
  while (out.size() < k) {
    std::uint32_t r = rng.uniform_below(remaining);
    for (std::size_t j = 0; j < n; ++j) {
      if (taken[j]) continue;
      if (r == 0) {
        taken[j] = true;
        out.push_back(static_cast<RestaurantId>(j));
        break;
      }
      --r;
    }
    --remaining;
  }
  return out;
}

RestaurantId decide_ex_ante(RestaurantId current,
                            std::span<const RestaurantId> candidates,
                            const Occupancy& occ, Rng& rng) {
  if (candidates.empty())
    throw std::invalid_argument("decide_ex_ante: no candidates");
  std::uint32_t best_count = 0;
  for (RestaurantId c : candidates)
    best_count = std::max(best_count, occ.counts.at(c));

  // Collect maximizers in candidate order; tie-break uniformly at random.
  std::vector<RestaurantId> maximizers;
  for (RestaurantId c : candidates)
    if (occ.counts[c] == best_count) maximizers.push_back(c);
  const RestaurantId best =
      maximizers.size() == 1
          ? maximizers[0]
          : maximizers[rng.uniform_below(
                static_cast<std::uint32_t>(maximizers.size()))];

  // Ties move: a crowd at least as large as the current one wins.
  return best_count >= occ.counts.at(current) ? best : current;
}

ProbabilityVector symmetric_update_multi(const ProbabilityVector& probs,
                                         RestaurantId winner,
                                         std::span<const RestaurantId> losers,
                                         double f1, double f2) {
  const std::size_t n = probs.size();
  if (winner >= n) throw std::invalid_argument("winner out of range");
  for (RestaurantId l : losers) {
    if (l >= n) throw std::invalid_argument("loser out of range");
    if (l == winner) throw std::invalid_argument("winner cannot also lose");
  }
  ProbabilityVector out = probs;
  out.weights[winner] += f1 * (1.0 - out.weights[winner]);
  for (RestaurantId l : losers) out.weights[l] -= f2 * out.weights[l];
  out.renormalize();
  return out;
}

ProbabilityVector symmetric_update(const ProbabilityVector& probs,
                                   RestaurantId winner, RestaurantId loser,
                                   double f1, double f2) {
  const RestaurantId losers[1] = {loser};
  return symmetric_update_multi(probs, winner, losers, f1, f2);
}

ProbabilityVector asymmetric_update(const ProbabilityVector& probs,
                                    RestaurantId winner, double f) {
  const std::size_t n = probs.size();
  if (winner >= n) throw std::invalid_argument("winner out of range");
  ProbabilityVector out = probs;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == winner)
      out.weights[j] += f * (1.0 - out.weights[j]);
    else
      out.weights[j] *= (1.0 - f);
  }
  // The rule is self-normalizing; this only absorbs floating round-off.
  out.renormalize();
  return out;
}

ProbabilityVector polya_probabilities(std::span<const std::uint32_t> visits,
                                      std::uint32_t m,
                                      std::uint32_t n_restaurants) {
  if (visits.size() != n_restaurants)
    throw std::invalid_argument("visits length must equal N");
  if (n_restaurants == 0) throw std::invalid_argument("N must be >= 1");
  if (m >= n_restaurants) throw std::invalid_argument("m must be < N");

  const double phi =
      static_cast<double>(m) / static_cast<double>(n_restaurants - m);
  double total = 0.0;
  for (std::uint32_t v : visits) total += static_cast<double>(v);

  ProbabilityVector p;
  p.weights.resize(n_restaurants);
  const double denom = static_cast<double>(n_restaurants) + phi * total;
  for (std::size_t j = 0; j < n_restaurants; ++j)
    p.weights[j] = (1.0 + phi * static_cast<double>(visits[j])) / denom;
  return p;
}

namespace {

// Comparison outcome for no-learning and ex-ante kinds: the compared set is
// the current restaurant plus every sampled candidate. When all compared
// occupancies are equal the slice carries no winner and no update runs.
void fill_comparison(SlicePlan& plan, RestaurantId current,
                     const Occupancy& occ) {
  bool all_equal = true;
  const std::uint32_t ref = occ.counts[current];
  for (RestaurantId c : plan.sampled) {
    if (occ.counts[c] != ref) {
      all_equal = false;
      break;
    }
  }
  if (all_equal) return;

  plan.winner = plan.target;
  if (current != plan.target) plan.losers.push_back(current);
  for (RestaurantId c : plan.sampled)
    if (c != plan.target && c != current) plan.losers.push_back(c);
}

}  // namespace

SlicePlan plan_slice(const AgentState& agent, std::uint32_t agent_id,
                     const Occupancy& occ, const StrategyConfig& cfg,
                     Rng& rng) {
  SlicePlan plan;
  plan.agent_id = agent_id;

  switch (cfg.kind) {
    case StrategyKind::NoLearning:
    case StrategyKind::ExAnteSymmetric:
    case StrategyKind::ExAnteAsymmetric: {
      plan.sampled = sample_candidates(agent, cfg.k, rng);
      plan.target = decide_ex_ante(agent.current, plan.sampled, occ, rng);
      fill_comparison(plan, agent.current, occ);
      break;
    }
    case StrategyKind::Polya: {
      const auto probs = polya_probabilities(
          agent.visits, cfg.m, static_cast<std::uint32_t>(occ.counts.size()));
      const RestaurantId candidate = sample_restaurant(probs, rng);
      plan.sampled.push_back(candidate);
      plan.target = cfg.polya_move_rule == PolyaMoveRule::Compare
                        ? decide_ex_ante(agent.current, plan.sampled, occ, rng)
                        : candidate;
      break;
    }
    case StrategyKind::ExPostSymmetric:
    case StrategyKind::ExPostAsymmetric: {
      // The move is committed before any comparison; regret is settled by the
      // engine from post-move occupancy.
      const RestaurantId candidate = sample_restaurant(agent.probs, rng);
      plan.sampled.push_back(candidate);
      plan.target = candidate;
      break;
    }
  }
  return plan;
}

}  // namespace majority

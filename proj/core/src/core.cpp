#include "majority/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace majority {

SimConfig SimConfig::make(std::uint32_t n_agents, std::uint32_t horizon,
                          std::uint64_t seed, std::uint32_t replications) {
  SimConfig cfg;
  cfg.n_agents = n_agents;
  cfg.n_restaurants = n_agents;
  cfg.horizon = horizon;
  cfg.seed = seed;
  cfg.replications = replications;
  cfg.validate();
  return cfg;
}

void SimConfig::validate() const {
  if (n_agents < 1) throw std::invalid_argument("n_agents must be >= 1");
  if (n_restaurants != n_agents)
    throw std::invalid_argument("n_restaurants must equal n_agents");
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (replications < 1) throw std::invalid_argument("replications must be >= 1");
}

ProbabilityVector ProbabilityVector::uniform(std::size_t n) {
  if (n == 0) throw std::invalid_argument("probability vector must be non-empty");
  ProbabilityVector p;
  p.weights.assign(n, 1.0 / static_cast<double>(n));
  return p;
}

double ProbabilityVector::sum() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

double ProbabilityVector::max() const {
  double m = 0.0;
  for (double w : weights) m = std::max(m, w);
  return m;
}

bool ProbabilityVector::is_normalized(double tol) const {
  for (double w : weights)
    if (w < 0.0) return false;
  const double s = sum();
  return s > 1.0 - tol && s < 1.0 + tol;
}

void ProbabilityVector::renormalize() {
  double s = 0.0;
  for (double& w : weights) {
    if (w < 0.0) w = 0.0;
    s += w;
  }
  if (!(s > 0.0)) throw std::domain_error("probability mass vanished");
  for (double& w : weights) w /= s;
}

ProbabilityVector uniform_probabilities(std::uint32_t n) {
  return ProbabilityVector::uniform(n);
}

std::uint32_t Occupancy::total() const {
  std::uint32_t t = 0;
  for (std::uint32_t c : counts) t += c;
  return t;
}

std::uint32_t Occupancy::occupied_count() const {
  std::uint32_t k = 0;
  for (std::uint32_t c : counts)
    if (c > 0) ++k;
  return k;
}

std::array<std::uint32_t, 3> Occupancy::top3() const {
  std::array<std::uint32_t, 3> top{0, 0, 0};
  for (std::uint32_t c : counts) {
    if (c > top[0]) {
      top[2] = top[1];
      top[1] = top[0];
      top[0] = c;
    } else if (c > top[1]) {
      top[2] = top[1];
      top[1] = c;
    } else if (c > top[2]) {
      top[2] = c;
    }
  }
  return top;
}

RestaurantId sample_restaurant(const ProbabilityVector& probs, Rng& rng) {
  if (probs.size() == 0)
    throw std::invalid_argument("sample_restaurant: empty probability vector");
  const double u = rng.next_double();
  double cum = 0.0;
  RestaurantId last_positive = 0;
  bool seen_positive = false;
  for (std::size_t j = 0; j < probs.size(); ++j) {
    const double w = probs.weights[j];
    if (w > 0.0) {
      last_positive = static_cast<RestaurantId>(j);
      seen_positive = true;
    }
    cum += w;
    if (u < cum) return static_cast<RestaurantId>(j);
  }
  if (!seen_positive)
    throw std::domain_error("sample_restaurant: no positive weight");
  return last_positive;
}

bool is_pure_nash(const Occupancy& occ) {
  return occ.occupied_count() == 1;
}

}  // namespace majority

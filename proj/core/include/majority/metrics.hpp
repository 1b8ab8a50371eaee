#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "majority/core.hpp"
#include "majority/engine.hpp"

namespace majority {

/// Mean over agents of the largest entry of each stored probability vector.
double avg_max_probability(std::span<const AgentState> agents);

/// Non-zero restaurant occupancies of at least min_size, sorted descending.
std::vector<std::uint32_t> cluster_sizes(const Occupancy& occ,
                                         std::uint32_t min_size = 1);

/// Final-slice cluster sizes of one run, tagged with its run id.
struct ClusterSample {
  std::uint32_t run_id = 0;
  std::vector<std::uint32_t> sizes;
};

struct HistogramBin {
  std::uint32_t lower = 0;  // inclusive lower edge; bin covers [lower, lower + width)
  double density = 0.0;
};

/// Pools every sample into a density histogram over size bins; the densities
/// integrate to one. Throws std::invalid_argument when nothing was pooled.
std::vector<HistogramBin> cluster_pdf(std::span<const ClusterSample> samples,
                                      std::uint32_t bin_width = 1);

/// Maximum-likelihood exponential rate: 1 / mean.
double fit_exponential(std::span<const double> values);
double fit_exponential(std::span<const std::uint32_t> values);

struct GammaFit {
  double shape = 0.0;
  double scale = 0.0;
};

/// Method-of-moments gamma fit (unbiased sample variance). Throws
/// std::domain_error when the variance is zero.
GammaFit fit_gamma(std::span<const double> values);
GammaFit fit_gamma(std::span<const std::uint32_t> values);

struct TradeoffPoint {
  std::uint32_t m = 0;
  std::uint32_t t_star = 0;
  double occupied_fraction_at_t_star = 0.0;
};

/// First recorded slice at which the mean maximum probability reaches the
/// threshold, paired with the occupied fraction at that slice. Absent when
/// the threshold is never reached within the trajectory.
std::optional<TradeoffPoint> tradeoff_point(const Trajectory& traj,
                                            std::uint32_t m,
                                            double threshold = 0.8);

struct ConvergenceScaling {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  struct Ratio {
    std::uint32_t n = 0;
    double mean_ratio = 0.0;  // mean of T / N at this N
    double sd_ratio = 0.0;    // population-free sample SD (n-1); 0 for a single run
  };
  std::vector<Ratio> ratios;
};

/// Spearman rank correlation with average ranks on ties. Requires two
/// equally sized series of at least two points each.
double spearman(std::span<const double> x, std::span<const double> y);

/// Least-squares line of convergence time on system size plus a per-size
/// ratio table. Requires at least three distinct sizes.
ConvergenceScaling convergence_scaling(
    std::span<const std::pair<std::uint32_t, std::uint32_t>> results);

}  // namespace majority

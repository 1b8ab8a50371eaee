#include "majority/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace majority {

double avg_max_probability(std::span<const AgentState> agents) {
  if (agents.empty()) throw std::invalid_argument("no agents");
  double acc = 0.0;
  for (const AgentState& a : agents) acc += a.probs.max();
  return acc / static_cast<double>(agents.size());
}

std::vector<std::uint32_t> cluster_sizes(const Occupancy& occ,
                                         std::uint32_t min_size) {
  if (min_size < 1) throw std::invalid_argument("min_size must be >= 1");
  std::vector<std::uint32_t> sizes;
  for (std::uint32_t c : occ.counts)
    if (c >= min_size) sizes.push_back(c);
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

std::vector<HistogramBin> cluster_pdf(std::span<const ClusterSample> samples,
                                      std::uint32_t bin_width) {
  if (bin_width < 1) throw std::invalid_argument("bin_width must be >= 1");
  std::map<std::uint32_t, std::uint64_t> bins;
  std::uint64_t total = 0;
  for (const ClusterSample& s : samples) {
    for (std::uint32_t size : s.sizes) {
      if (size < 1) throw std::invalid_argument("cluster sizes must be >= 1");
      const std::uint32_t lower = 1 + ((size - 1) / bin_width) * bin_width;
      ++bins[lower];
      ++total;
    }
  }
  if (total == 0) throw std::invalid_argument("no cluster sizes pooled");

  std::vector<HistogramBin> out;
  out.reserve(bins.size());
  const double norm =
      static_cast<double>(total) * static_cast<double>(bin_width);
  for (const auto& [lower, count] : bins)
    out.push_back({lower, static_cast<double>(count) / norm});
  return out;
}

namespace {

std::pair<double, double> mean_and_unbiased_variance(
    std::span<const double> values) {
  if (values.size() < 2)
    throw std::invalid_argument("need at least two values");
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, ss / static_cast<double>(values.size() - 1)};
}

std::vector<double> widen(std::span<const std::uint32_t> values) {
  return std::vector<double>(values.begin(), values.end());
}

}  // namespace

double fit_exponential(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("no values");
  double mean = 0.0;
  for (double v : values) {
    if (!(v > 0.0)) throw std::invalid_argument("values must be positive");
    mean += v;
  }
  mean /= static_cast<double>(values.size());
  return 1.0 / mean;
}

double fit_exponential(std::span<const std::uint32_t> values) {
  const auto v = widen(values);
  return fit_exponential(std::span<const double>(v));
}

GammaFit fit_gamma(std::span<const double> values) {
  for (double v : values)
    if (!(v > 0.0)) throw std::invalid_argument("values must be positive");
  const auto [mean, var] = mean_and_unbiased_variance(values);
  if (!(var > 0.0))
    throw std::domain_error("zero variance: gamma fit is degenerate");
  return {mean * mean / var, var / mean};
}

GammaFit fit_gamma(std::span<const std::uint32_t> values) {
  const auto v = widen(values);
  return fit_gamma(std::span<const double>(v));
}

std::optional<TradeoffPoint> tradeoff_point(const Trajectory& traj,
                                            std::uint32_t m,
                                            double threshold) {
  if (traj.n_agents == 0) throw std::invalid_argument("empty trajectory");
  const double floor = 1.0 / static_cast<double>(traj.n_agents);
  if (!(threshold > floor && threshold <= 1.0))
    throw std::invalid_argument("threshold must be in (1/N, 1]");
  for (const SliceRecord& rec : traj.records) {
    if (rec.avg_max_prob >= threshold)
      return TradeoffPoint{m, rec.slice, rec.occupied_fraction};
  }
  return std::nullopt;
}

namespace {

/// Average ranks (1-based); ties share the mean of their rank block.
std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double shared = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = shared;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("series must have equal length");
  }
  if (x.size() < 2) {
    throw std::invalid_argument("need at least two points");
  }
  const std::vector<double> rx = average_ranks(x);
  const std::vector<double> ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw std::domain_error("constant ranks: correlation is undefined");
  }
  return sxy / std::sqrt(sxx * syy);
}

ConvergenceScaling convergence_scaling(
    std::span<const std::pair<std::uint32_t, std::uint32_t>> results) {
  std::map<std::uint32_t, std::vector<double>> by_n;
  for (const auto& [n, t] : results) {
    if (n == 0) throw std::invalid_argument("system size must be positive");
    by_n[n].push_back(static_cast<double>(t));
  }
  if (by_n.size() < 3)
    throw std::invalid_argument("need at least three distinct system sizes");

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
  const double count = static_cast<double>(results.size());
  for (const auto& [n, t] : results) {
    const double x = static_cast<double>(n);
    const double y = static_cast<double>(t);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("degenerate size values");

  ConvergenceScaling out;
  out.slope = (count * sxy - sx * sy) / denom;
  out.intercept = (sy - out.slope * sx) / count;

  double ss_res = 0.0;
  const double mean_y = sy / count;
  double ss_tot = 0.0;
  for (const auto& [n, t] : results) {
    const double y = static_cast<double>(t);
    const double pred =
        out.slope * static_cast<double>(n) + out.intercept;
    ss_res += (y - pred) * (y - pred);
    ss_tot += (y - mean_y) * (y - mean_y);
  }
  out.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;

  for (const auto& [n, ts] : by_n) {
    ConvergenceScaling::Ratio row;
    row.n = n;
    double mean = 0.0;
    for (double t : ts) mean += t / static_cast<double>(n);
    mean /= static_cast<double>(ts.size());
    row.mean_ratio = mean;
    if (ts.size() > 1) {
      double ss = 0.0;
      for (double t : ts) {
        const double r = t / static_cast<double>(n) - mean;
        ss += r * r;
      }
      row.sd_ratio = std::sqrt(ss / static_cast<double>(ts.size() - 1));
    }
    out.ratios.push_back(row);
  }
  return out;
}

}  // namespace majority

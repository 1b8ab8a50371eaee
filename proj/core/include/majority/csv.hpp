#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "majority/engine.hpp"
#include "majority/strategies.hpp"

namespace majority {

/// One emitted data row: one recorded slice of one run. Parameter fields that
/// do not apply to the strategy kind are absent and serialize as empty cells.
struct ResultRow {
  std::string experiment;
  StrategyKind kind = StrategyKind::NoLearning;
  std::uint32_t n = 0;
  std::optional<std::uint32_t> k;
  std::optional<double> f1;
  std::optional<double> f2;
  std::optional<double> f;
  std::optional<std::uint32_t> m;
  std::uint64_t seed = 0;
  std::uint32_t slice = 0;
  std::uint32_t occupied_count = 0;
  double occupied_fraction = 0.0;
  std::uint32_t top1 = 0;
  std::uint32_t top2 = 0;
  std::uint32_t top3 = 0;
  double avg_max_prob = 0.0;
  bool converged = false;

  bool operator==(const ResultRow&) const = default;
};

/// Shortest decimal representation that parses back to the identical double.
std::string format_double(double value);

/// Column header shared by every data file.
std::string_view csv_header();

/// Serializes rows as CSV (LF line endings, UTF-8, header included).
std::string format_rows_csv(std::span<const ResultRow> rows);

/// Parses a data file produced by format_rows_csv. Exact inverse: the parsed
/// rows compare equal to the originals. Throws std::invalid_argument on
/// malformed content.
std::vector<ResultRow> parse_rows_csv(std::string_view text);

/// Expands one trajectory into rows.
std::vector<ResultRow> rows_from_trajectory(std::string_view experiment,
                                            const StrategyConfig& strategy,
                                            std::uint32_t n,
                                            std::uint64_t seed,
                                            const Trajectory& traj);

/// FNV-1a 64-bit content digest used by manifests and golden-file checks.
std::uint64_t fnv1a64(std::string_view bytes);

/// Digest rendered as 16 lowercase hex characters.
std::string digest_hex(std::string_view bytes);

}  // namespace majority

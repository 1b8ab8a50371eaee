#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "majority/strategies.hpp"

namespace majority {

/// Parse failure in a plan file. line/column are 1-based; line 0 means the
/// problem is file-level (a missing required key, for instance).
struct PlanParseError : std::runtime_error {
  PlanParseError(const std::string& msg, std::size_t line_, std::size_t column_);
  std::size_t line;
  std::size_t column;
};

/// A sweep description: the cartesian grid strategies x n x seeds plus the
/// shared run parameters. Parsed from flat key/value text (see parse_plan).
struct ExperimentPlan {
  std::string name;
  std::vector<std::uint32_t> n_values;
  std::vector<std::uint64_t> seeds;
  std::optional<std::uint32_t> horizon;  // unset: auto_horizon(n) per run
  std::uint32_t record_stride = 1;
  std::string out_dir;  // empty: plan name
  std::vector<StrategyConfig> strategies;

  /// Throws std::invalid_argument when any strategy is invalid for any n.
  void validate() const;

  bool operator==(const ExperimentPlan&) const = default;
};

/// Plan text format, one `key = value` per line, '#' starts a comment:
///
///   schema = 1
///   name = demo
///   n = 50 100
///   seeds = 1 2 3
///   horizon = 2000
///   stride = 10
///   out = runs/demo
///   strategy = ex-ante-symmetric k=2 f1=1 f2=0.1
///   strategy = polya m=10 move=free
///
/// schema, name, n, seeds and at least one strategy are required. Unknown
/// keys, unknown strategy parameters and duplicate seeds are rejected.
ExperimentPlan parse_plan(std::string_view text);

ExperimentPlan load_plan(const std::filesystem::path& path);

/// Canonical plan text; parse_plan(serialize_plan(p)) reproduces p.
std::string serialize_plan(const ExperimentPlan& plan);

/// Strategy line token as used in plan files and manifests, parameters
/// restricted to the ones the kind consumes.
std::string strategy_token(const StrategyConfig& strategy);

/// Default horizon when the plan leaves it unset: 20 slices per agent,
/// capped at 10000.
std::uint32_t auto_horizon(std::uint32_t n);

/// One cell of the expanded grid. index fixes the output order.
struct RunSpec {
  std::size_t index = 0;
  StrategyConfig strategy;
  std::uint32_t n = 0;
  std::uint64_t seed = 0;
  std::uint32_t horizon = 0;
};

/// Strategy-major expansion: strategies outermost, then n, then seeds.
std::vector<RunSpec> expand_runs(const ExperimentPlan& plan);

struct ExecutionSummary {
  std::filesystem::path out_dir;
  std::filesystem::path rows_path;
  std::filesystem::path clusters_path;
  std::filesystem::path manifest_path;
  std::size_t run_count = 0;
  bool skipped = false;  // prior complete manifest matched, nothing rerun
  bool complete = false;
};

/// Executes every run in the plan and writes three files into the output
/// directory: rows.csv (recorded slices, runs in grid order), clusters.csv
/// (final-state group sizes, one line per group) and manifest.json (digests,
/// per-run seed/stream ledger, completion flag).
///
/// Output bytes are independent of the worker count. When the directory
/// already holds a complete manifest whose plan digest matches, the call is
/// a no-op and the summary reports skipped. workers == 0 picks the hardware
/// thread count. Relative output paths are rooted at base_dir (or the
/// current directory when empty).
ExecutionSummary execute(const ExperimentPlan& plan, unsigned workers = 1,
                         const std::filesystem::path& base_dir = {});

/// Built-in sweep plans ("fig2" .. "fig9") reproducing the survey scenarios.
/// scale >= 1 divides the headline system size for desk-scale runs; 1 is
/// full size. Throws std::invalid_argument for unknown names or scale == 0.
ExperimentPlan figure_recipe(std::string_view name, unsigned scale = 2);

std::vector<std::string> figure_names();

}  // namespace majority

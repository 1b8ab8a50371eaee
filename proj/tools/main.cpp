// majority-sim: command-line front end for the majority-game simulator.
//
// Exit codes: 0 success, 2 validation error, 3 I/O error, 4 incomplete
// result (a sweep aborted mid-write, or an analysis that could not produce
// every requested value).

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "majority/csv.hpp"
#include "majority/engine.hpp"
#include "majority/experiments.hpp"
#include "majority/metrics.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kValidationError = 2;
constexpr int kIoError = 3;
constexpr int kIncomplete = 4;

namespace fs = std::filesystem;
using namespace majority;

/// Root for relative output paths; the only environment the tool reads.
fs::path out_base() {
  if (const char* env = std::getenv("MAJORITY_SIM_OUT_DIR"); env && *env) {
    return fs::path(env);
  }
  return {};
}

fs::path resolve_out(const fs::path& p) {
  const fs::path base = out_base();
  if (!base.empty() && p.is_relative()) return base / p;
  return p;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

struct RunArgs {
  std::string strategy;
  std::uint32_t agents = 0;
  std::uint32_t horizon = 0;  // 0: auto
  std::uint64_t seed = 1;
  std::optional<std::uint32_t> k;
  std::optional<double> f1, f2, f;
  std::optional<std::uint32_t> m;
  std::string move_rule;
  std::string out = "-";
  std::uint32_t stride = 1;
};

int cmd_run(const RunArgs& a) {
  auto kind = parse_strategy_kind(a.strategy);
  if (!kind) {
    std::cerr << "error: unknown strategy '" << a.strategy << "'\n";
    return kValidationError;
  }
  StrategyConfig strat;
  strat.kind = *kind;
  if (a.k) strat.k = *a.k;
  if (a.f1) strat.f1 = *a.f1;
  if (a.f2) strat.f2 = *a.f2;
  if (a.f) strat.f = *a.f;
  if (a.m) strat.m = *a.m;
  if (!a.move_rule.empty()) {
    auto rule = parse_polya_move_rule(a.move_rule);
    if (!rule) {
      std::cerr << "error: unknown move rule '" << a.move_rule << "'\n";
      return kValidationError;
    }
    strat.polya_move_rule = *rule;
  }

  const std::uint32_t horizon = a.horizon ? a.horizon : auto_horizon(a.agents);
  Trajectory traj;
  try {
    SimConfig cfg = SimConfig::make(a.agents, horizon, a.seed);
    Simulation sim(cfg, strat);
    RunOptions opts;
    opts.record_stride = a.stride;
    traj = sim.run(opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationError;
  }

  const auto rows = rows_from_trajectory("run", strat, a.agents, a.seed, traj);
  const std::string csv = format_rows_csv(rows);
  if (a.out == "-") {
    std::cout << csv;
  } else {
    const fs::path path = resolve_out(a.out);
    std::error_code ec;
    if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    file.write(csv.data(), static_cast<std::streamsize>(csv.size()));
    if (!file) {
      std::cerr << "error: cannot write " << path.string() << "\n";
      return kIoError;
    }
    std::cerr << "wrote " << rows.size() << " rows to " << path.string() << "\n";
  }
  if (traj.convergence_slice) {
    std::cerr << "converged at slice " << *traj.convergence_slice << "\n";
  } else {
    std::cerr << "not converged within " << horizon << " slices\n";
  }
  return kOk;
}

int run_plan(const ExperimentPlan& plan, unsigned workers) {
  ExecutionSummary summary;
  try {
    summary = execute(plan, workers, out_base());
  } catch (const std::exception& e) {
    std::cerr << "error: sweep incomplete: " << e.what() << "\n";
    return kIncomplete;
  }
  std::cerr << (summary.skipped ? "up to date: " : "completed: ")
            << summary.run_count << " runs in " << summary.out_dir.string() << "\n"
            << "  " << summary.rows_path.string() << "\n"
            << "  " << summary.clusters_path.string() << "\n"
            << "  " << summary.manifest_path.string() << "\n";
  return kOk;
}

int cmd_sweep(const std::string& plan_path, unsigned workers) {
  ExperimentPlan plan;
  try {
    plan = load_plan(plan_path);
  } catch (const PlanParseError& e) {
    std::cerr << "error: " << plan_path << ": " << e.what() << "\n";
    return kValidationError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << plan_path << ": " << e.what() << "\n";
    return kValidationError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  }
  return run_plan(plan, workers);
}

int cmd_figure(const std::string& name, unsigned scale, const std::string& out,
               unsigned workers) {
  ExperimentPlan plan;
  try {
    plan = figure_recipe(name, scale);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationError;
  }
  if (!out.empty()) plan.out_dir = out;
  return run_plan(plan, workers);
}

int cmd_clusters(const std::vector<std::string>& inputs, std::uint32_t bin,
                 const std::string& fit) {
  if (fit != "none" && fit != "exp" && fit != "gamma") {
    std::cerr << "error: --fit must be exp, gamma or none\n";
    return kValidationError;
  }
  std::vector<std::uint32_t> sizes;
  for (const std::string& in : inputs) {
    std::string text;
    try {
      text = slurp(in);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kIoError;
    }
    std::istringstream lines(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
      ++line_no;
      if (line_no == 1 || line.empty()) continue;  // header
      const std::size_t comma = line.rfind(',');
      if (comma == std::string::npos) {
        std::cerr << "error: " << in << " line " << line_no << ": no size column\n";
        return kValidationError;
      }
      try {
        sizes.push_back(static_cast<std::uint32_t>(std::stoul(line.substr(comma + 1))));
      } catch (const std::exception&) {
        std::cerr << "error: " << in << " line " << line_no << ": bad size value\n";
        return kValidationError;
      }
    }
  }
  if (sizes.empty()) {
    std::cerr << "error: no group sizes found in input\n";
    return kIncomplete;
  }

  ClusterSample pooled;
  pooled.run_id = 0;
  pooled.sizes = sizes;
  std::vector<HistogramBin> pdf;
  try {
    pdf = cluster_pdf(std::vector<ClusterSample>{pooled}, bin);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationError;
  }
  std::cout << "bin_lower,density\n";
  for (const HistogramBin& b : pdf) {
    std::cout << b.lower << "," << format_double(b.density) << "\n";
  }

  if (fit == "exp") {
    const double rate = fit_exponential(std::span<const std::uint32_t>(sizes));
    std::cerr << "exponential fit: rate=" << format_double(rate)
              << " mean=" << format_double(1.0 / rate) << "\n";
  } else if (fit == "gamma") {
    try {
      const GammaFit g = fit_gamma(std::span<const std::uint32_t>(sizes));
      std::cerr << "gamma fit: shape=" << format_double(g.shape)
                << " scale=" << format_double(g.scale) << "\n";
    } catch (const std::domain_error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kIncomplete;
    }
  }
  return kOk;
}

int cmd_tradeoff(const std::string& in_dir, double threshold) {
  const fs::path rows_path = fs::path(in_dir) / "rows.csv";
  std::vector<ResultRow> rows;
  try {
    rows = parse_rows_csv(slurp(rows_path));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << rows_path.string() << ": " << e.what() << "\n";
    return kValidationError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  }

  // Group recorded slices by run, keyed by the urn parameter and seed.
  std::map<std::pair<std::uint32_t, std::uint64_t>, std::vector<const ResultRow*>>
      runs;
  for (const ResultRow& r : rows) {
    if (r.kind != StrategyKind::Polya || !r.m) continue;
    runs[{*r.m, r.seed}].push_back(&r);
  }
  if (runs.empty()) {
    std::cerr << "error: no urn-strategy rows in " << rows_path.string() << "\n";
    return kIncomplete;
  }

  struct Point {
    double t_sum = 0, occ_sum = 0;
    std::uint32_t reached = 0, total = 0;
  };
  std::map<std::uint32_t, Point> by_m;
  for (auto& [key, recs] : runs) {
    std::sort(recs.begin(), recs.end(),
              [](const ResultRow* a, const ResultRow* b) { return a->slice < b->slice; });
    Point& pt = by_m[key.first];
    ++pt.total;
    for (const ResultRow* r : recs) {
      if (r->avg_max_prob >= threshold) {
        pt.t_sum += r->slice;
        pt.occ_sum += r->occupied_fraction;
        ++pt.reached;
        break;
      }
    }
  }

  bool incomplete = false;
  std::cout << "m,t_star,occupied_fraction_at_t_star,runs_reaching_threshold\n";
  for (const auto& [m, pt] : by_m) {
    if (pt.reached == 0) {
      std::cerr << "warning: threshold " << threshold << " never reached for m=" << m
                << "\n";
      incomplete = true;
      continue;
    }
    std::cout << m << "," << format_double(pt.t_sum / pt.reached) << ","
              << format_double(pt.occ_sum / pt.reached) << "," << pt.reached << "/"
              << pt.total << "\n";
    if (pt.reached < pt.total) incomplete = true;
  }

  std::vector<double> t_star, occ;
  for (const auto& [m, pt] : by_m) {
    if (pt.reached == 0) continue;
    t_star.push_back(pt.t_sum / pt.reached);
    occ.push_back(pt.occ_sum / pt.reached);
  }
  if (t_star.size() >= 2) {
    try {
      std::cerr << "spearman(t_star, occupied_fraction) = "
                << format_double(spearman(t_star, occ)) << "\n";
    } catch (const std::exception& e) {
      std::cerr << "spearman undefined: " << e.what() << "\n";
    }
  }
  return incomplete ? kIncomplete : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic simulator for the N-agent majority game"};
  app.require_subcommand(1);

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "Run one simulation and emit its rows");
  run->add_option("--strategy", run_args.strategy,
                  "no-learning | ex-ante-symmetric | ex-ante-asymmetric | polya | "
                  "ex-post-symmetric | ex-post-asymmetric")
      ->required();
  run->add_option("--agents", run_args.agents, "system size (agents = restaurants)")
      ->required();
  run->add_option("--horizon", run_args.horizon, "slice budget (default 20*N, max 10000)");
  run->add_option("--seed", run_args.seed, "master seed (default 1)");
  run->add_option("--k", run_args.k, "candidates sampled per slice");
  run->add_option("--f1", run_args.f1, "symmetric reward fraction");
  run->add_option("--f2", run_args.f2, "symmetric punish fraction");
  run->add_option("--f", run_args.f, "asymmetric reward fraction");
  run->add_option("--m", run_args.m, "urn reinforcement parameter");
  run->add_option("--polya-move-rule", run_args.move_rule, "compare | free");
  run->add_option("--out", run_args.out, "output file ('-' for stdout)");
  run->add_option("--stride", run_args.stride, "record every s-th slice");

  std::string plan_path;
  unsigned workers = 0;
  CLI::App* sweep = app.add_subcommand("sweep", "Execute a plan file");
  sweep->add_option("--plan", plan_path, "plan file path")->required();
  sweep->add_option("--workers", workers, "worker threads (0 = hardware)");

  std::string fig_name, fig_out;
  unsigned fig_scale = 2;
  unsigned fig_workers = 0;
  CLI::App* figure = app.add_subcommand("figure", "Run a built-in survey sweep");
  figure->add_option("--name", fig_name, "fig2 .. fig9")->required();
  figure->add_option("--scale", fig_scale, "system-size divisor (default 2)");
  figure->add_option("--out", fig_out, "output directory override");
  figure->add_option("--workers", fig_workers, "worker threads (0 = hardware)");

  std::vector<std::string> cluster_inputs;
  std::uint32_t bin = 1;
  std::string fit = "none";
  CLI::App* clusters =
      app.add_subcommand("clusters", "Histogram final group sizes from sweep output");
  clusters->add_option("--in", cluster_inputs, "clusters.csv file(s)")->required();
  clusters->add_option("--bin", bin, "histogram bin width (default 1)");
  clusters->add_option("--fit", fit, "exp | gamma | none");

  std::string tradeoff_dir;
  double threshold = 0.8;
  CLI::App* tradeoff = app.add_subcommand(
      "tradeoff", "Confidence onset time vs occupancy from a sweep directory");
  tradeoff->add_option("--in", tradeoff_dir, "sweep output directory")->required();
  tradeoff->add_option("--threshold", threshold, "mean max-probability threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidationError;
  }

  try {
    if (*run) return cmd_run(run_args);
    if (*sweep) return cmd_sweep(plan_path, workers);
    if (*figure) return cmd_figure(fig_name, fig_scale, fig_out, fig_workers);
    if (*clusters) return cmd_clusters(cluster_inputs, bin, fit);
    if (*tradeoff) return cmd_tradeoff(tradeoff_dir, threshold);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kValidationError;
}

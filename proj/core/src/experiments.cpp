#include "majority/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "majority/csv.hpp"
#include "majority/engine.hpp"
#include "majority/metrics.hpp"

namespace majority {

namespace {

using nlohmann::json;

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based position in the source line
};

/// Whitespace-splits `value`, reporting columns relative to the full line.
std::vector<Token> tokenize(std::string_view value, std::size_t value_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < value.size()) {
    while (i < value.size() && (value[i] == ' ' || value[i] == '\t')) ++i;
    if (i >= value.size()) break;
    std::size_t start = i;
    while (i < value.size() && value[i] != ' ' && value[i] != '\t') ++i;
    out.push_back({value.substr(start, i - start), value_column + start});
  }
  return out;
}

template <typename T>
T parse_number(const Token& tok, std::size_t line, std::string_view what) {
  T v{};
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
  if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size()) {
    throw PlanParseError("invalid " + std::string(what) + " '" +
                             std::string(tok.text) + "'",
                         line, tok.column);
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

StrategyConfig parse_strategy_line(std::string_view value, std::size_t value_column,
                                   std::size_t line) {
  auto tokens = tokenize(value, value_column);
  if (tokens.empty()) {
    throw PlanParseError("strategy line needs a kind", line, value_column);
  }
  auto kind = parse_strategy_kind(tokens[0].text);
  if (!kind) {
    throw PlanParseError("unknown strategy kind '" + std::string(tokens[0].text) + "'",
                         line, tokens[0].column);
  }
  StrategyConfig cfg;
  cfg.kind = *kind;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    std::size_t eq = tok.text.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 >= tok.text.size()) {
      throw PlanParseError("expected parameter=value, got '" +
                               std::string(tok.text) + "'",
                           line, tok.column);
    }
    std::string_view key = tok.text.substr(0, eq);
    Token val{tok.text.substr(eq + 1), tok.column + eq + 1};
    if (key == "k") {
      cfg.k = parse_number<std::uint32_t>(val, line, "k");
    } else if (key == "f1") {
      cfg.f1 = parse_number<double>(val, line, "f1");
    } else if (key == "f2") {
      cfg.f2 = parse_number<double>(val, line, "f2");
    } else if (key == "f") {
      cfg.f = parse_number<double>(val, line, "f");
    } else if (key == "m") {
      cfg.m = parse_number<std::uint32_t>(val, line, "m");
    } else if (key == "move") {
      auto rule = parse_polya_move_rule(val.text);
      if (!rule) {
        throw PlanParseError("unknown move rule '" + std::string(val.text) + "'",
                             line, val.column);
      }
      cfg.polya_move_rule = *rule;
    } else {
      throw PlanParseError("unknown strategy parameter '" + std::string(key) + "'",
                           line, tok.column);
    }
  }
  return cfg;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
}

struct RunOutput {
  std::vector<ResultRow> rows;
  std::vector<std::uint32_t> clusters;  // final-state group sizes, descending
  bool converged = false;
  std::optional<std::uint32_t> convergence_slice;
};

RunOutput perform_run(const RunSpec& spec, const ExperimentPlan& plan) {
  SimConfig cfg = SimConfig::make(spec.n, spec.horizon, spec.seed);
  Simulation sim(cfg, spec.strategy);
  RunOptions opts;
  opts.record_stride = plan.record_stride;
  Trajectory traj = sim.run(opts);

  RunOutput out;
  out.rows = rows_from_trajectory(plan.name, spec.strategy, spec.n, spec.seed, traj);
  out.clusters = cluster_sizes(sim.world().occ);
  out.convergence_slice = traj.convergence_slice;
  out.converged = traj.convergence_slice.has_value();
  return out;
}

/// Same parameter applicability as the rows file, one line per final group.
std::string format_clusters_csv(const std::vector<RunSpec>& runs,
                                const std::vector<RunOutput>& outputs,
                                std::string_view experiment) {
  std::string out = "experiment,strategy,n,k,f1,f2,f,m,seed,size\n";
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const RunSpec& spec = runs[i];
    const StrategyConfig& s = spec.strategy;
    std::string prefix;
    prefix.append(experiment);
    prefix.push_back(',');
    prefix.append(to_string(s.kind));
    prefix.push_back(',');
    prefix.append(std::to_string(spec.n));
    prefix.push_back(',');
    if (s.kind == StrategyKind::NoLearning || s.is_ex_ante_family()) {
      prefix.append(std::to_string(s.k));
    }
    prefix.push_back(',');
    if (s.is_symmetric()) prefix.append(format_double(s.f1));
    prefix.push_back(',');
    if (s.is_symmetric()) prefix.append(format_double(s.f2));
    prefix.push_back(',');
    if (s.is_asymmetric()) prefix.append(format_double(s.f));
    prefix.push_back(',');
    if (s.kind == StrategyKind::Polya) prefix.append(std::to_string(s.m));
    prefix.push_back(',');
    prefix.append(std::to_string(spec.seed));
    prefix.push_back(',');
    for (std::uint32_t size : outputs[i].clusters) {
      out.append(prefix);
      out.append(std::to_string(size));
      out.push_back('\n');
    }
  }
  return out;
}

void write_manifest(const std::filesystem::path& path, const ExperimentPlan& plan,
                    const std::string& plan_digest, bool complete, unsigned workers,
                    const std::vector<RunSpec>& runs,
                    const std::vector<RunOutput>* outputs,
                    const std::map<std::string, std::string>& file_digests,
                    const std::string& error) {
  json m;
  m["schema"] = 1;
  m["experiment"] = plan.name;
  m["plan_digest"] = plan_digest;
  m["complete"] = complete;
  m["workers"] = workers;
  m["run_count"] = runs.size();
  m["files"] = file_digests;
  if (!error.empty()) m["error"] = error;
  json jruns = json::array();
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const RunSpec& spec = runs[i];
    json r;
    r["index"] = spec.index;
    r["strategy"] = strategy_token(spec.strategy);
    r["n"] = spec.n;
    r["seed"] = spec.seed;
    r["horizon"] = spec.horizon;
    // Stream ledger: every run is replication 0 of its own seed, so agent i
    // draws from stream id i.
    r["replication"] = 0;
    r["agent_streams"] = spec.n;
    if (outputs) {
      const RunOutput& out = (*outputs)[i];
      r["converged"] = out.converged;
      if (out.convergence_slice) r["convergence_slice"] = *out.convergence_slice;
      r["recorded_slices"] = out.rows.size();
      r["final_groups"] = out.clusters.size();
    }
    jruns.push_back(std::move(r));
  }
  m["runs"] = std::move(jruns);
  write_file(path, m.dump(2) + "\n");
}

void append_list(std::string& out, std::string_view key, const auto& values) {
  out.append(key);
  out.append(" =");
  for (auto v : values) {
    out.push_back(' ');
    out.append(std::to_string(v));
  }
  out.push_back('\n');
}

}  // namespace

PlanParseError::PlanParseError(const std::string& msg, std::size_t line_,
                               std::size_t column_)
    : std::runtime_error(line_ == 0 ? msg
                                    : msg + " (line " + std::to_string(line_) +
                                          ", column " + std::to_string(column_) + ")"),
      line(line_),
      column(column_) {}

void ExperimentPlan::validate() const {
  if (name.empty()) throw std::invalid_argument("plan name must not be empty");
  if (n_values.empty()) throw std::invalid_argument("plan needs at least one n");
  if (seeds.empty()) throw std::invalid_argument("plan needs at least one seed");
  if (strategies.empty()) throw std::invalid_argument("plan needs at least one strategy");
  if (record_stride == 0) throw std::invalid_argument("stride must be >= 1");
  if (horizon && *horizon == 0) throw std::invalid_argument("horizon must be >= 1");
  for (std::uint32_t n : n_values) {
    SimConfig::make(n, horizon.value_or(auto_horizon(n)), 0).validate();
    for (const StrategyConfig& s : strategies) s.validate(n);
  }
}

ExperimentPlan parse_plan(std::string_view text) {
  ExperimentPlan plan;
  bool saw_schema = false, saw_name = false;
  std::set<std::uint64_t> seen_seeds;

  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    if (pos == text.size()) break;
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = (eol == std::string_view::npos)
                               ? text.substr(pos)
                               : text.substr(pos, eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() : eol + 1;
    ++line_no;

    std::string_view line = raw;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (trim(line).empty()) continue;

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw PlanParseError("expected 'key = value'", line_no, 1);
    }
    std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));
    // column of the first value character, 1-based
    std::size_t value_column = line.find_first_not_of(" \t", eq + 1);
    value_column = (value_column == std::string_view::npos) ? eq + 2 : value_column + 1;
    if (key.empty()) {
      throw PlanParseError("missing key before '='", line_no, 1);
    }
    if (value.empty()) {
      throw PlanParseError("missing value for '" + std::string(key) + "'", line_no,
                           value_column);
    }

    if (key == "schema") {
      Token tok{value, value_column};
      auto v = parse_number<std::uint32_t>(tok, line_no, "schema");
      if (v != 1) {
        throw PlanParseError("unsupported schema " + std::to_string(v), line_no,
                             value_column);
      }
      saw_schema = true;
    } else if (key == "name") {
      if (value.find_first_not_of(
              "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789._-") !=
          std::string_view::npos) {
        throw PlanParseError("name may use letters, digits, '.', '_' and '-' only",
                             line_no, value_column);
      }
      plan.name = std::string(value);
      saw_name = true;
    } else if (key == "n") {
      for (const Token& tok : tokenize(value, value_column)) {
        plan.n_values.push_back(parse_number<std::uint32_t>(tok, line_no, "n"));
      }
    } else if (key == "seeds") {
      for (const Token& tok : tokenize(value, value_column)) {
        auto seed = parse_number<std::uint64_t>(tok, line_no, "seed");
        if (!seen_seeds.insert(seed).second) {
          throw PlanParseError("duplicate seed " + std::to_string(seed), line_no,
                               tok.column);
        }
        plan.seeds.push_back(seed);
      }
    } else if (key == "horizon") {
      Token tok{value, value_column};
      plan.horizon = parse_number<std::uint32_t>(tok, line_no, "horizon");
    } else if (key == "stride") {
      Token tok{value, value_column};
      plan.record_stride = parse_number<std::uint32_t>(tok, line_no, "stride");
    } else if (key == "out") {
      plan.out_dir = std::string(value);
    } else if (key == "strategy") {
      plan.strategies.push_back(parse_strategy_line(value, value_column, line_no));
    } else {
      throw PlanParseError("unknown key '" + std::string(key) + "'", line_no, 1);
    }
  }

  if (!saw_schema) throw PlanParseError("missing required key 'schema'", 0, 0);
  if (!saw_name) throw PlanParseError("missing required key 'name'", 0, 0);
  if (plan.n_values.empty()) throw PlanParseError("missing required key 'n'", 0, 0);
  if (plan.seeds.empty()) throw PlanParseError("missing required key 'seeds'", 0, 0);
  if (plan.strategies.empty()) {
    throw PlanParseError("plan needs at least one strategy line", 0, 0);
  }
  plan.validate();
  return plan;
}

ExperimentPlan load_plan(const std::filesystem::path& path) {
  return parse_plan(read_file(path));
}

std::string strategy_token(const StrategyConfig& s) {
  std::string out(to_string(s.kind));
  if (s.kind == StrategyKind::NoLearning || s.is_ex_ante_family()) {
    out += " k=" + std::to_string(s.k);
  }
  if (s.is_symmetric()) {
    out += " f1=" + format_double(s.f1) + " f2=" + format_double(s.f2);
  }
  if (s.is_asymmetric()) {
    out += " f=" + format_double(s.f);
  }
  if (s.kind == StrategyKind::Polya) {
    out += " m=" + std::to_string(s.m);
    out += " move=";
    out += to_string(s.polya_move_rule);
  }
  return out;
}

std::string serialize_plan(const ExperimentPlan& plan) {
  std::string out;
  out.append("schema = 1\n");
  out.append("name = ").append(plan.name).push_back('\n');
  append_list(out, "n", plan.n_values);
  append_list(out, "seeds", plan.seeds);
  if (plan.horizon) {
    out.append("horizon = ").append(std::to_string(*plan.horizon)).push_back('\n');
  }
  out.append("stride = ").append(std::to_string(plan.record_stride)).push_back('\n');
  if (!plan.out_dir.empty()) {
    out.append("out = ").append(plan.out_dir).push_back('\n');
  }
  for (const StrategyConfig& s : plan.strategies) {
    out.append("strategy = ").append(strategy_token(s)).push_back('\n');
  }
  return out;
}

std::uint32_t auto_horizon(std::uint32_t n) {
  std::uint64_t h = 20ull * n;
  return static_cast<std::uint32_t>(std::min<std::uint64_t>(h, 10000));
}

std::vector<RunSpec> expand_runs(const ExperimentPlan& plan) {
  std::vector<RunSpec> runs;
  runs.reserve(plan.strategies.size() * plan.n_values.size() * plan.seeds.size());
  std::size_t index = 0;
  for (const StrategyConfig& s : plan.strategies) {
    for (std::uint32_t n : plan.n_values) {
      std::uint32_t horizon = plan.horizon.value_or(auto_horizon(n));
      for (std::uint64_t seed : plan.seeds) {
        runs.push_back({index++, s, n, seed, horizon});
      }
    }
  }
  return runs;
}

ExecutionSummary execute(const ExperimentPlan& plan, unsigned workers,
                         const std::filesystem::path& base_dir) {
  plan.validate();
  std::vector<RunSpec> runs = expand_runs(plan);

  namespace fs = std::filesystem;
  fs::path out_dir = plan.out_dir.empty() ? fs::path(plan.name) : fs::path(plan.out_dir);
  if (out_dir.is_relative() && !base_dir.empty()) out_dir = base_dir / out_dir;
  fs::create_directories(out_dir);

  ExecutionSummary summary;
  summary.out_dir = out_dir;
  summary.rows_path = out_dir / "rows.csv";
  summary.clusters_path = out_dir / "clusters.csv";
  summary.manifest_path = out_dir / "manifest.json";
  summary.run_count = runs.size();

  const std::string plan_digest = digest_hex(serialize_plan(plan));

  if (fs::exists(summary.manifest_path)) {
    try {
      json prior = json::parse(read_file(summary.manifest_path));
      if (prior.value("complete", false) &&
          prior.value("plan_digest", std::string{}) == plan_digest) {
        summary.skipped = true;
        summary.complete = true;
        return summary;
      }
    } catch (...) {
      // unreadable or stale manifest: fall through and recompute
    }
  }

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(runs.size(), 1)));

  std::vector<RunOutput> outputs(runs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex err_mu;
  std::exception_ptr first_error;

  auto work = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= runs.size()) break;
      try {
        outputs[i] = perform_run(runs[i], plan);
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (!first_error) first_error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  if (first_error) {
    try {
      write_manifest(summary.manifest_path, plan, plan_digest, false, workers, runs,
                     nullptr, {}, "run failed before output was written");
    } catch (...) {
      // the rethrow below carries the primary failure
    }
    std::rethrow_exception(first_error);
  }

  std::vector<ResultRow> all_rows;
  std::size_t total = 0;
  for (const RunOutput& out : outputs) total += out.rows.size();
  all_rows.reserve(total);
  for (RunOutput& out : outputs) {
    all_rows.insert(all_rows.end(), std::make_move_iterator(out.rows.begin()),
                    std::make_move_iterator(out.rows.end()));
    out.rows.clear();
  }

  std::string rows_csv = format_rows_csv(all_rows);
  std::string clusters_csv = format_clusters_csv(runs, outputs, plan.name);
  std::map<std::string, std::string> digests{
      {"rows.csv", digest_hex(rows_csv)},
      {"clusters.csv", digest_hex(clusters_csv)},
  };

  try {
    write_file(summary.rows_path, rows_csv);
    write_file(summary.clusters_path, clusters_csv);
  } catch (...) {
    try {
      write_manifest(summary.manifest_path, plan, plan_digest, false, workers, runs,
                     &outputs, digests, "output write failed");
    } catch (...) {
    }
    throw;
  }

  write_manifest(summary.manifest_path, plan, plan_digest, true, workers, runs,
                 &outputs, digests, {});
  summary.complete = true;
  return summary;
}

namespace {

StrategyConfig ex_ante_symmetric(std::uint32_t k, double f1, double f2) {
  StrategyConfig s;
  s.kind = StrategyKind::ExAnteSymmetric;
  s.k = k;
  s.f1 = f1;
  s.f2 = f2;
  return s;
}

StrategyConfig ex_ante_asymmetric(std::uint32_t k, double f) {
  StrategyConfig s;
  s.kind = StrategyKind::ExAnteAsymmetric;
  s.k = k;
  s.f = f;
  return s;
}

StrategyConfig ex_post_symmetric(double f1, double f2) {
  StrategyConfig s;
  s.kind = StrategyKind::ExPostSymmetric;
  s.f1 = f1;
  s.f2 = f2;
  return s;
}

StrategyConfig ex_post_asymmetric(double f) {
  StrategyConfig s;
  s.kind = StrategyKind::ExPostAsymmetric;
  s.f = f;
  return s;
}

StrategyConfig polya(std::uint32_t m, PolyaMoveRule rule) {
  StrategyConfig s;
  s.kind = StrategyKind::Polya;
  s.m = m;
  s.polya_move_rule = rule;
  return s;
}

std::vector<std::uint64_t> seed_range(std::uint64_t count) {
  std::vector<std::uint64_t> seeds(count);
  for (std::uint64_t i = 0; i < count; ++i) seeds[i] = i + 1;
  return seeds;
}

constexpr std::uint32_t kFinalOnlyStride = 1000000000;

}  // namespace

ExperimentPlan figure_recipe(std::string_view name, unsigned scale) {
  if (scale == 0) throw std::invalid_argument("scale must be >= 1");
  auto scaled = [scale](std::uint32_t n) {
    return std::max<std::uint32_t>(10, n / scale);
  };
  const std::uint32_t n = scaled(500);

  ExperimentPlan plan;
  plan.name = std::string(name);
  plan.out_dir = std::string(name);

  if (name == "fig2") {
    // Exploration-only baseline: time to full agreement across system sizes.
    for (std::uint32_t base : {100u, 200u, 300u, 400u, 500u}) {
      plan.n_values.push_back(scaled(base));
    }
    plan.seeds = seed_range(10);
    plan.record_stride = kFinalOnlyStride;
    StrategyConfig s;
    s.kind = StrategyKind::NoLearning;
    plan.strategies.push_back(s);
  } else if (name == "fig3") {
    // Candidate-count speedup: one trace per k for the symmetric learner.
    plan.n_values = {n};
    plan.seeds = {1, 2, 3};
    for (std::uint32_t k : {1u, 2u, 3u}) {
      plan.strategies.push_back(ex_ante_symmetric(k, 1.0, 0.1));
    }
  } else if (name == "fig4") {
    // Occupancy collapse under the one-sided learner.
    plan.n_values = {n};
    plan.seeds = {1, 2, 3};
    plan.strategies.push_back(ex_ante_asymmetric(1, 0.25));
  } else if (name == "fig5") {
    // Confidence growth for slow versus fast reinforcement at each k.
    plan.n_values = {n};
    plan.seeds = {1};
    for (double f : {0.1, 0.9}) {
      for (std::uint32_t k : {1u, 2u, 3u}) {
        plan.strategies.push_back(ex_ante_asymmetric(k, f));
      }
    }
  } else if (name == "fig6") {
    // Urn memory sweep: occupancy versus reinforcement weight. At scale 1
    // this is the m = 0, 5, ..., 495 grid at n = 500 over 5000 slices.
    plan.n_values = {n};
    plan.seeds = {1};
    std::uint32_t horizon = std::min<std::uint32_t>(10 * n, 10000);
    plan.horizon = horizon;
    plan.record_stride = std::max<std::uint32_t>(1, horizon / 100);
    for (unsigned pct = 0; pct < 100; ++pct) {
      auto m = static_cast<std::uint32_t>(std::lround(0.01 * pct * n));
      if (m >= n) m = n - 1;
      if (!plan.strategies.empty() && plan.strategies.back().m == m) continue;
      plan.strategies.push_back(polya(m, PolyaMoveRule::Compare));
    }
  } else if (name == "fig7") {
    // Transient group structure after a short burn-in, per learning family.
    plan.n_values = {n};
    plan.seeds = seed_range(std::max<std::uint64_t>(4, 40 / scale));
    plan.horizon = 50;
    plan.record_stride = kFinalOnlyStride;
    plan.strategies.push_back(ex_ante_symmetric(1, 1.0, 0.1));
    plan.strategies.push_back(ex_ante_asymmetric(1, 0.25));
    plan.strategies.push_back(ex_post_symmetric(1.0, 0.1));
    plan.strategies.push_back(ex_post_asymmetric(0.5));
  } else if (name == "fig8") {
    // Confidence growth when the move is committed before comparing.
    plan.n_values = {n};
    plan.seeds = {1};
    for (double f : {0.1, 0.5, 0.9}) {
      plan.strategies.push_back(ex_post_asymmetric(f));
    }
  } else if (name == "fig9") {
    // Urn speed/quality tradeoff: confidence onset time versus spread.
    plan.n_values = {n};
    plan.seeds = {1, 2, 3};
    plan.horizon = 10000;
    plan.record_stride = 10;
    for (double frac : {0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5,
                        0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95, 0.99}) {
      auto m = static_cast<std::uint32_t>(std::lround(frac * n));
      if (m >= n) m = n - 1;
      if (m == 0) m = 1;
      if (!plan.strategies.empty() && plan.strategies.back().m == m) continue;
      plan.strategies.push_back(polya(m, PolyaMoveRule::Compare));
    }
  } else {
    throw std::invalid_argument("unknown figure '" + std::string(name) +
                                "' (expected fig2..fig9)");
  }

  plan.validate();
  return plan;
}

std::vector<std::string> figure_names() {
  return {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9"};
}

}  // namespace majority
